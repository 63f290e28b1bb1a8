#pragma once

// Closed forms against brute-force oracles at small, fixed sizes.
// Used by `qpart selftest`; the full-size sweeps live in the test suite.

#include <cstdint>
#include <string>
#include <vector>

#include "qpart/codes.hpp"
#include "qpart/ferrers.hpp"
#include "qpart/kraw.hpp"
#include "qpart/preservers.hpp"

namespace qpart {

struct SelftestCheck {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  bool passed() const { return failures == 0; }
};

namespace detail {

inline SelftestCheck selftest_kraw(unsigned q, std::size_t n, std::size_t m) {
  SelftestCheck c{"kraw q=" + std::to_string(q) + " n=" + std::to_string(n) + " m=" + std::to_string(m)};
  const auto f = field_of_order(q);
  for (auto kind : {PartitionKind::rank, PartitionKind::rowspace, PartitionKind::pivot, PartitionKind::rpivot}) {
    const CharacterOracle oracle(f, n, m, kind);
    for (const auto& j : all_labels(dual_kind(kind), f, n, m)) {
      const auto sums = oracle.sums(representative(j, f, n, m));
      for (std::size_t i = 0; i < sums.size(); ++i) {
        ++c.cases;
        if (!sums[i].is_rational() || sums[i].rational_value() != krawtchouk(oracle.labels()[i], j, q, static_cast<long>(n), static_cast<long>(m)))
          ++c.failures;
      }
    }
  }
  return c;
}

inline SelftestCheck selftest_duality() {
  SelftestCheck c{"dual partitions q=2 n=m=2"};
  const auto f = field_of_order(2);
  const std::pair<PartitionKind, PartitionKind> pairs[] = {{PartitionKind::rank, PartitionKind::rank},
                                                           {PartitionKind::rowspace, PartitionKind::rowspace},
                                                           {PartitionKind::pivot, PartitionKind::rpivot},
                                                           {PartitionKind::rpivot, PartitionKind::pivot}};
  for (auto [p, d] : pairs) {
    ++c.cases;
    if (!(dual_partition(p, f, 2, 2) == partition_of(d, f, 2, 2))) ++c.failures;
  }
  return c;
}

inline SelftestCheck selftest_macwilliams(std::uint64_t seed) {
  SelftestCheck c{"macwilliams q=2 n=3 m=2, 20 codes"};
  const auto f = field_of_order(2);
  for (const auto& code : random_code_corpus(f, 3, 2, 20, seed)) {
    const auto dual = code.dual();
    for (auto kind : {PartitionKind::rank, PartitionKind::rowspace, PartitionKind::pivot, PartitionKind::rpivot}) {
      ++c.cases;
      if (!(macwilliams_transform(distribution(code, kind), code.size(), kind, f, 3, 2) == distribution(dual, dual_kind(kind)))) ++c.failures;
    }
    for (long nu = 0; nu <= 2; ++nu) {
      ++c.cases;
      const auto s = binomial_moment(code, nu);
      if (s.lhs != s.rhs) ++c.failures;
    }
  }
  return c;
}

inline std::vector<FerrersBoard> small_boards(unsigned max_width, unsigned max_height) {
  std::vector<FerrersBoard> out;
  for (unsigned w = 0; w <= max_width; ++w) {
    std::vector<unsigned> cols(w, 0);
    while (true) {
      out.emplace_back(cols);
      // next nondecreasing sequence in [0, max_height]^w
      std::size_t i = w;
      while (i > 0 && cols[i - 1] == max_height) --i;
      if (i == 0) break;
      const unsigned v = cols[i - 1] + 1;
      for (std::size_t k = i - 1; k < w; ++k) cols[k] = v;
    }
  }
  return out;
}

inline SelftestCheck selftest_ferrers() {
  SelftestCheck c{"ferrers boards m<=3 c_m<=3"};
  const auto f2 = field_of_order(2);
  for (const auto& b : small_boards(3, 3)) {
    const auto counts = brute_rank_counts(b, f2);
    for (unsigned r = 0; r <= b.width(); ++r) {
      ++c.cases;
      const auto p = rank_dist(b, r);
      const bool ok = p == rank_dist_recursive(b, r) && p == haglund_transform(b, r) && rook_poly_enum(b, r) == rook_poly_closed(b, r) &&
                      rank_dist_degree(b, r) == p.degree() && p.evaluate(2) == (r < counts.size() ? counts[r] : BigInt(0));
      if (!ok) ++c.failures;
    }
  }
  return c;
}

inline SelftestCheck selftest_stirling() {
  SelftestCheck c{"q-stirling m<=4"};
  for (unsigned m = 0; m <= 4; ++m) {
    std::vector<unsigned> tri;
    for (unsigned j = 1; j <= m; ++j) tri.push_back(j);
    const FerrersBoard b(tri);
    for (unsigned r = 0; r <= m; ++r) {
      ++c.cases;
      if (!(q_stirling(m + 1, m + 1 - r) == rook_poly_enum(b, r))) ++c.failures;
    }
  }
  return c;
}

inline SelftestCheck selftest_stacked_rank() {
  SelftestCheck c{"stacked rank q=2 m<=3"};
  const auto f = field_of_order(2);
  for (unsigned m = 0; m <= 3; ++m)
    for (const auto& lambda : all_pivot_lists(m))
      for (const auto& sigma : all_pivot_lists(m))
        for (unsigned r = 0; r <= lambda.size(); ++r) {
          ++c.cases;
          if (lab_count(lambda, sigma, r).count.evaluate(2) != lab_count_brute(f, lambda, sigma, r)) ++c.failures;
        }
  return c;
}

inline SelftestCheck selftest_block_sizes() {
  SelftestCheck c{"pivot block sizes q=2 n,m<=2"};
  const auto f = field_of_order(2);
  for (std::size_t n = 1; n <= 2; ++n)
    for (std::size_t m = 1; m <= 2; ++m) {
      Distribution d;
      for_each_matrix(f, n, m, [&](const Matrix& a) { d.add(PivotLabel{piv(a)}); });
      for (const auto& mu : all_pivot_lists(static_cast<unsigned>(m))) {
        ++c.cases;
        if (pivot_block_size(mu, 2, static_cast<long>(n)) != d.at(PivotLabel{mu})) ++c.failures;
      }
    }
  return c;
}

inline SelftestCheck selftest_mrd() {
  SelftestCheck c{"mrd row-space distribution q=2 m=2,3"};
  const auto f = field_of_order(2);
  for (std::size_t m : {2, 3}) {
    const auto code = mrd_field_embedding(f, m);
    const auto d = distribution(code, PartitionKind::rowspace);
    for (const auto& [label, value] : predicted_distribution(PredictionKind::mrd_rs, f, m, m, static_cast<long>(m))) {
      ++c.cases;
      if (d.at(label) != value) ++c.failures;
    }
  }
  return c;
}

inline SelftestCheck selftest_preservers() {
  SelftestCheck c{"row-space preservers q=2 n=m=2"};
  const auto f = field_of_order(2);
  ++c.cases;
  if (classify_preservers(f, 2, 2, PartitionKind::rowspace) != structured_family(f, 2, 2, PartitionKind::rowspace)) ++c.failures;
  return c;
}

}  // namespace detail

/// Runs every check; output order and content depend only on the seed.
inline std::vector<SelftestCheck> run_selftest(std::uint64_t seed) {
  return {detail::selftest_kraw(2, 2, 2),   detail::selftest_kraw(3, 2, 2),     detail::selftest_duality(),
          detail::selftest_macwilliams(seed), detail::selftest_ferrers(),      detail::selftest_stirling(),
          detail::selftest_stacked_rank(),  detail::selftest_block_sizes(), detail::selftest_mrd(),
          detail::selftest_preservers()};
}

}  // namespace qpart
