#include <gtest/gtest.h>

#include "qpart/ferrers.hpp"
#include "support/oracles.hpp"

using namespace qpart;

namespace {

LaurentPoly poly(std::initializer_list<std::pair<long, long>> terms) {
  LaurentPoly p;
  for (auto [e, c] : terms) p.add_term(e, c);
  return p;
}

const std::vector<FerrersBoard>& sweep() {
  static const auto all = oracle::boards(5, 5);
  return all;
}

}  // namespace

TEST(Ferrers, Boards) {
  const FerrersBoard f({1, 2, 4, 4, 5});
  EXPECT_EQ(f.cells(), 16u);
  EXPECT_EQ(f.height(), 5u);
  EXPECT_EQ(f.width(), 5u);
  EXPECT_TRUE(f.contains(4, 3));
  EXPECT_FALSE(f.contains(2, 1));
  EXPECT_EQ(FerrersBoard({0, 0}).cells(), 0u);
  EXPECT_THROW(FerrersBoard({2, 1}), NonMonotone);
  EXPECT_EQ(FerrersBoard::parse("1,2,4,4,5"), f);
  EXPECT_EQ(FerrersBoard::parse(""), FerrersBoard());
  EXPECT_THROW(FerrersBoard::parse("1,,2"), ParseError);
  EXPECT_THROW(FerrersBoard::parse("1,x"), ParseError);
  EXPECT_THROW(FerrersBoard::parse("-1,2"), NonMonotone);
  EXPECT_EQ(f.to_string(), "1,2,4,4,5");
  EXPECT_EQ(f.without_last(), FerrersBoard({1, 2, 4, 4}));
}

TEST(Ferrers, RankDistExamples) {
  const FerrersBoard f({1, 2});
  EXPECT_EQ(rank_dist(f, 0), LaurentPoly(1));
  EXPECT_EQ(rank_dist(f, 1), poly({{2, 2}, {1, -1}, {0, -1}}));
  EXPECT_EQ(rank_dist(f, 1).to_string(), "2q^2 - q - 1");
  EXPECT_EQ(rank_dist(f, 2), poly({{3, 1}, {2, -2}, {1, 1}}));
  EXPECT_TRUE(rank_dist(f, 3).is_zero());
  EXPECT_TRUE(rank_dist(FerrersBoard({0, 0}), 1).is_zero());
  const auto f2 = field_of_order(2);
  EXPECT_EQ(brute_count(f, f2, 1), 5);
  EXPECT_EQ(brute_count(f, f2, 2), 2);
  EXPECT_EQ(brute_count(f, f2, 3), 0);
}

TEST(Ferrers, RookExamples) {
  const FerrersBoard f({1, 2});
  EXPECT_EQ(rook_poly_enum(f, 1), poly({{2, 1}, {1, 2}}));
  EXPECT_EQ(rook_poly_closed(f, 1), rook_poly_enum(f, 1));
  EXPECT_EQ(rook_poly_enum(f, 0), poly({{3, 1}}));  // every cell counts when no rook is placed
  EXPECT_EQ(rook_placements(f, 1).size(), 3u);
  EXPECT_EQ(haglund_transform(f, 1), rank_dist(f, 1));
}

// Rooks at column 3 row 4, column 4 row 1, column 5 row 2 (rows from the top).
TEST(Ferrers, DisplayedPlacement) {
  const FerrersBoard f({1, 2, 4, 4, 5});
  const RookPlacement c{{4, 3}, {1, 4}, {2, 5}};
  EXPECT_EQ(rook_inversions(f, c), 7u);
  bool found = false;
  for (const auto& p : rook_placements(f, 3)) found = found || p == c;
  EXPECT_TRUE(found);
}

TEST(Ferrers, Recursion) {
  for (const auto& b : sweep())
    for (unsigned r = 0; r <= b.width() + 1; ++r) EXPECT_EQ(rank_dist(b, r), rank_dist_recursive(b, r)) << b.to_string() << " r=" << r;
}

TEST(Ferrers, RookClosedForm) {
  for (const auto& b : sweep())
    for (unsigned r = 0; r <= b.width(); ++r) EXPECT_EQ(rook_poly_enum(b, r), rook_poly_closed(b, r)) << b.to_string() << " r=" << r;
}

TEST(Ferrers, HaglundIdentity) {
  for (const auto& b : sweep())
    for (unsigned r = 0; r <= b.width(); ++r) EXPECT_EQ(haglund_transform(b, r), rank_dist(b, r)) << b.to_string() << " r=" << r;
}

TEST(Ferrers, GarsiaRemmel) {
  for (const auto& b : sweep()) {
    if (b.width() == 0) continue;
    for (unsigned r = 0; r <= b.width(); ++r) EXPECT_EQ(rook_poly_enum(b, r), oracle::garsia_remmel_rhs(b, r)) << b.to_string() << " r=" << r;
  }
}

TEST(Ferrers, Degrees) {
  for (const auto& b : sweep()) {
    long prev = LaurentPoly::kMinusInfinity;
    for (unsigned r = 0; r <= b.width(); ++r) {
      const auto p = rank_dist(b, r);
      const auto rook = rook_poly_enum(b, r);
      EXPECT_EQ(rank_dist_degree(b, r), p.degree()) << b.to_string() << " r=" << r;
      EXPECT_EQ(p.is_zero(), rook.is_zero());
      if (p.is_zero()) continue;
      EXPECT_EQ(p.degree(), static_cast<long>(b.cells()) - rook.trailing_degree());
      EXPECT_GT(p.degree(), prev) << b.to_string() << " r=" << r;
      prev = p.degree();
    }
  }
}

TEST(Ferrers, TriangleAndRectangle) {
  for (unsigned m = 1; m <= 5; ++m) {
    std::vector<unsigned> tri;
    for (unsigned j = 1; j <= m; ++j) tri.push_back(j);
    for (unsigned r = 0; r <= m; ++r) EXPECT_EQ(rank_dist(FerrersBoard(tri), r), oracle::triangle_rank_dist(m, r)) << m << " " << r;
  }
  for (unsigned n = 1; n <= 4; ++n)
    for (unsigned m = 1; m <= 4; ++m)
      for (unsigned r = 0; r <= std::min(n, m); ++r)
        EXPECT_EQ(rank_dist(FerrersBoard(std::vector<unsigned>(m, n)), r), oracle::rectangle_rank_dist(n, m, r));
}

TEST(Ferrers, BruteCountsAtTwoAndThree) {
  const auto f2 = field_of_order(2), f3 = field_of_order(3);
  for (const auto& b : oracle::boards(4, 4)) {
    if (b.cells() <= 10) {
      const auto counts = brute_rank_counts(b, f2);
      for (unsigned r = 0; r < counts.size(); ++r) EXPECT_EQ(rank_dist(b, r).evaluate(2), counts[r]) << b.to_string() << " r=" << r;
    }
    if (b.cells() <= 6) {
      const auto counts = brute_rank_counts(b, f3);
      for (unsigned r = 0; r < counts.size(); ++r) EXPECT_EQ(rank_dist(b, r).evaluate(3), counts[r]) << b.to_string() << " r=" << r;
    }
  }
}

TEST(Ferrers, Stirling) {
  EXPECT_EQ(q_stirling(0, 0), LaurentPoly(1));
  EXPECT_TRUE(q_stirling(3, 4).is_zero());
  EXPECT_TRUE(q_stirling(3, -1).is_zero());
  EXPECT_EQ(q_stirling(3, 2), poly({{2, 1}, {1, 2}}));  // q^2 + 2q
  for (unsigned m = 0; m <= 5; ++m) {
    std::vector<unsigned> tri;
    for (unsigned j = 1; j <= m; ++j) tri.push_back(j);
    for (unsigned r = 0; r <= m; ++r) EXPECT_EQ(q_stirling(m + 1, m + 1 - r), rook_poly_enum(FerrersBoard(tri), r)) << m << " " << r;
  }
}

TEST(Ferrers, StackedRankWorkedExample) {
  const auto lambda = PivotList::from_indices(7, {1, 4, 6}), sigma = PivotList::from_indices(7, {3, 4, 6});
  EXPECT_EQ(dual_pivot_list(sigma).indices(), (std::vector<unsigned>{1, 2, 5, 7}));
  const auto d = lab_count(lambda, sigma, 2);
  EXPECT_EQ(d.board, FerrersBoard({0, 1, 2}));
  EXPECT_EQ(d.x, 2u);
  EXPECT_EQ(d.y, 3u);
}

TEST(Ferrers, StackedRankAgainstEnumeration) {
  const auto f = field_of_order(2);
  for (unsigned m = 0; m <= 3; ++m)
    for (const auto& lambda : all_pivot_lists(m)) {
      const auto rrefs = oracle::rref_by_filter(f, lambda);
      for (const auto& sigma : all_pivot_lists(m))
        for (unsigned r = 0; r <= lambda.size(); ++r)
          EXPECT_EQ(lab_count(lambda, sigma, r).count.evaluate(2), oracle::stacked_rank_count(f, rrefs, sigma, r))
              << lambda.to_string() << " " << sigma.to_string() << " r=" << r;
    }
}

TEST(Ferrers, BudgetGuard) {
  ScopedBudget b(1000);
  EXPECT_THROW(brute_rank_counts(FerrersBoard({3, 3, 4}), field_of_order(2)), BudgetExceeded);
}
