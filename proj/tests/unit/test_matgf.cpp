#include <gtest/gtest.h>

#include <random>
#include <set>

#include "qpart/lattice.hpp"
#include "qpart/matgf.hpp"

using namespace qpart;

namespace {

Matrix random_matrix(const FieldCtx& f, std::size_t n, std::size_t m, std::mt19937_64& rng) {
  Matrix a(f, n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) a.set(i, j, Elem{static_cast<std::uint32_t>(rng() % f->q())});
  return a;
}

}  // namespace

TEST(PivotList, IndicesAndComplement) {
  const auto l = PivotList::from_indices(5, {2, 4});
  EXPECT_EQ(l.indices(), (std::vector<unsigned>{2, 4}));
  EXPECT_EQ(l.complement().indices(), (std::vector<unsigned>{1, 3, 5}));
  EXPECT_EQ(l.reversed().indices(), (std::vector<unsigned>{2, 4}));
  EXPECT_EQ(PivotList::from_indices(5, {1, 2}).reversed().indices(), (std::vector<unsigned>{4, 5}));
  EXPECT_EQ(l.to_string(), "(2,4)");
  EXPECT_EQ(PivotList(3).to_string(), "()");
  EXPECT_THROW(PivotList::from_indices(3, {2, 2}), InvalidArgument);
  EXPECT_THROW(PivotList::from_indices(3, {4}), InvalidArgument);
}

TEST(PivotList, AllListsCount) {
  for (unsigned m = 0; m <= 6; ++m) EXPECT_EQ(all_pivot_lists(m).size(), 1u << m);
}

TEST(Matgf, RrefExamples) {
  const auto f = field_of_order(2);
  EXPECT_EQ(rank(Matrix(f, 2, 2)), 0u);
  const Matrix ones(f, 2, 2, {1, 1, 1, 1});
  EXPECT_EQ(rank(ones), 1u);
  EXPECT_EQ(piv(ones).indices(), (std::vector<unsigned>{1}));
  EXPECT_EQ(Subspace::span(ones).basis(), Matrix(f, 1, 2, {1, 1}));
  EXPECT_EQ(rank(Matrix::identity(f, 3)), 3u);
  EXPECT_EQ(Subspace::span(Matrix::identity(f, 3)), Subspace::full(f, 3));
}

TEST(Matgf, RrefOverGf3) {
  const auto f = field_of_order(3);
  const Matrix a(f, 2, 3, {0, 2, 1, 0, 1, 2});
  const auto e = rref(a);
  EXPECT_EQ(e.rank, 1u);
  EXPECT_EQ(e.pivots.indices(), (std::vector<unsigned>{2}));
  EXPECT_EQ(e.reduced, Matrix(f, 2, 3, {0, 1, 2, 0, 0, 0}));
}

// Property checks on random matrices over several fields.
TEST(Matgf, RrefProperties) {
  std::mt19937_64 rng(7);
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    const auto f = field_of_order(q);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 1 + rng() % 4, m = 1 + rng() % 4;
      const auto a = random_matrix(f, n, m, rng);
      const auto e = rref(a);
      EXPECT_EQ(rref(e.reduced).reduced, e.reduced);
      EXPECT_EQ(e.rank, e.pivots.size());
      EXPECT_EQ(rpiv(a).size(), e.rank);
      EXPECT_EQ(rank(a.transposed()), e.rank);
      EXPECT_EQ(row_space(a), row_space(e.reduced));
      // rpiv(A) = m + 1 - reverse of piv(A Z)
      EXPECT_EQ(rpiv(a), piv(a * Matrix::reversal(f, m)).reversed());
      EXPECT_EQ(null_space(a).rows(), m - e.rank);
      const auto k = null_space(a);
      if (k.rows()) { EXPECT_TRUE((a * k.transposed()).is_zero()); }
    }
  }
}

// piv(S A U^{-1}) = piv(A) for S invertible and U invertible upper triangular; exhaustive at q = 2, n = m = 2.
TEST(Matgf, PivotOrbitLaw) {
  const auto f = field_of_order(2);
  const auto gl = general_linear_group(f, 2);
  const auto up = upper_triangular_group(f, 2);
  EXPECT_EQ(gl.size(), 6u);
  EXPECT_EQ(up.size(), 2u);
  for_each_matrix(f, 2, 2, [&](const Matrix& a) {
    for (const auto& s : gl)
      for (const auto& u : up) EXPECT_EQ(piv(s * a * u), piv(a));
  });
}

// Row space is the orbit invariant of left multiplication.
TEST(Matgf, RowSpaceOrbit) {
  const auto f = field_of_order(3);
  const auto gl = general_linear_group(f, 2);
  EXPECT_EQ(gl.size(), 48u);
  for_each_matrix(f, 2, 2, [&](const Matrix& a) {
    for (const auto& s : gl) EXPECT_EQ(row_space(s * a), row_space(a));
  });
}

// rpiv(V^⊥) is the dual pivot list of piv(V), over all subspaces for m <= 4, q <= 3.
TEST(Matgf, DualOfPivots) {
  for (unsigned q : {2u, 3u})
    for (std::size_t m = 1; m <= 4; ++m) {
      const auto f = field_of_order(q);
      for (const auto& v : subspaces(f, m)) {
        EXPECT_EQ(v.dual().rpivots(), dual_pivot_list(v.pivots())) << v.to_string();
        EXPECT_EQ(v.dual().dim(), m - v.dim());
        EXPECT_EQ(v.dual().dual(), v);
      }
    }
}

TEST(Matgf, SubspaceOperations) {
  const auto f = field_of_order(2);
  const auto u = Subspace::span(Matrix(f, 2, 3, {1, 0, 0, 0, 1, 0}));
  const auto v = Subspace::span(Matrix(f, 2, 3, {0, 1, 0, 0, 0, 1}));
  EXPECT_EQ(u.intersect(v), Subspace::span(Matrix(f, 1, 3, {0, 1, 0})));
  EXPECT_EQ(u + v, Subspace::full(f, 3));
  EXPECT_TRUE(Subspace::zero(f, 3).is_subspace_of(u));
  EXPECT_FALSE(u.is_subspace_of(v));
  EXPECT_EQ(u.to_string(), "<1 0 0;0 1 0>");
  EXPECT_EQ(Subspace::zero(f, 2).to_string(), "<>");
}

TEST(Matgf, ShapeAndFieldErrors) {
  const auto f2 = field_of_order(2), f3 = field_of_order(3);
  EXPECT_THROW(Matrix(f2, 2, 2) * Matrix(f2, 3, 2), ShapeMismatch);
  EXPECT_THROW(Matrix(f2, 2, 2) + Matrix(f3, 2, 2), FieldMismatch);
  EXPECT_THROW(trace_product(Matrix(f2, 2, 2), Matrix(f2, 2, 3)), ShapeMismatch);
  EXPECT_THROW(Matrix(f2, 2, 2, {1, 0, 1}), ShapeMismatch);
}

TEST(Matgf, TraceProductIsDotProduct) {
  const auto f = field_of_order(3);
  const Matrix a(f, 2, 2, {1, 2, 0, 1}), b(f, 2, 2, {2, 2, 1, 1});
  // Tr(A B^T) = 1*2 + 2*2 + 0*1 + 1*1 = 7 = 1 mod 3
  EXPECT_EQ(trace_product(a, b).value, 1u);
  EXPECT_EQ(trace_product(a, b), trace_product(b, a));
}

TEST(Matgf, TextRoundTrip) {
  std::mt19937_64 rng(11);
  for (unsigned q : {2u, 4u, 9u, 16u}) {
    const auto f = field_of_order(q);
    const auto a = random_matrix(f, 3, 4, rng);
    const auto text = to_text(a);
    EXPECT_EQ(matrix_from_text(text), a);
    EXPECT_EQ(to_text(matrix_from_text(text)), text);
  }
  EXPECT_EQ(to_text(Matrix(field_of_order(2), 1, 2, {1, 0})), "1 2 2\n1 0\n");
  EXPECT_THROW(matrix_from_text("1 2 2\n1 2\n"), ParseError);
  EXPECT_THROW(matrix_from_text("1 2 2\n1\n"), ParseError);
  EXPECT_THROW(matrix_from_text("1 1 6\n0\n"), InvalidArgument);
}

TEST(Matgf, MatrixIndexRoundTrip) {
  const auto f = field_of_order(3);
  for (std::uint64_t i = 0; i < ambient_size(f, 2, 2); ++i) EXPECT_EQ(matrix_index(matrix_from_index(f, 2, 2, i)), i);
}

TEST(Matgf, GroupSizes) {
  EXPECT_EQ(general_linear_group(field_of_order(2), 3).size(), 168u);
  EXPECT_EQ(upper_triangular_group(field_of_order(2), 3).size(), 8u);
  EXPECT_EQ(upper_triangular_group(field_of_order(3), 2).size(), 12u);
}

TEST(Matgf, BudgetGuard) {
  ScopedBudget b(100);
  EXPECT_THROW(for_each_matrix(field_of_order(2), 3, 3, [](const Matrix&) {}), BudgetExceeded);
}
