#pragma once

// Brute-force and alternative-formula oracles for the test suites.
// Nothing here calls the closed form it is used to check.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "qpart/qpart.hpp"

namespace qpart::oracle {

/// Every board with width <= max_width and heights <= max_height, including the empty one.
inline std::vector<FerrersBoard> boards(unsigned max_width, unsigned max_height) {
  std::vector<FerrersBoard> out;
  std::function<void(std::vector<unsigned>&, unsigned)> rec = [&](std::vector<unsigned>& cols, unsigned width) {
    if (cols.size() == width) {
      out.emplace_back(cols);
      return;
    }
    const unsigned lo = cols.empty() ? 0 : cols.back();
    for (unsigned h = lo; h <= max_height; ++h) {
      cols.push_back(h);
      rec(cols, width);
      cols.pop_back();
    }
  };
  for (unsigned w = 0; w <= max_width; ++w) {
    std::vector<unsigned> cols;
    rec(cols, w);
  }
  return out;
}

/// Strictly increasing r-tuples in [1, m].
inline std::vector<std::vector<unsigned>> increasing_tuples(unsigned r, unsigned m) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  std::function<void(unsigned)> rec = [&](unsigned start) {
    if (cur.size() == r) {
      out.push_back(cur);
      return;
    }
    for (unsigned i = start; i <= m; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

/// P_r(1, ..., m) = sum_{i} prod_j (q^{m-j+1} - q^{m-i_j}).
inline LaurentPoly triangle_rank_dist(unsigned m, unsigned r) {
  LaurentPoly sum;
  for (const auto& i : increasing_tuples(r, m)) {
    LaurentPoly term = LaurentPoly::monomial(0);
    for (unsigned j = 1; j <= r; ++j) term = term * q_power_diff(m - j + 1, m - i[j - 1]);
    sum = sum + term;
  }
  return sum;
}

/// [m, r] prod_{j<r} (q^n - q^j): matrices of rank r in F^{n x m}.
inline LaurentPoly rectangle_rank_dist(unsigned n, unsigned m, unsigned r) {
  LaurentPoly p = gaussian_binomial(m, r);
  for (unsigned j = 0; j < r; ++j) p = p * q_power_diff(n, j);
  return p;
}

/// (q^a - 1) / (q - 1) in the Laurent ring, for any integer a.
inline LaurentPoly q_integer(long a) { return (LaurentPoly::monomial(0) - LaurentPoly::monomial(a)).divided_by_one_minus_q(); }

/// R_r(F') q^{c_m - r} + R_{r-1}(F') (q^{c_m - r + 1} - 1)/(q - 1), with R from placement enumeration.
inline LaurentPoly garsia_remmel_rhs(const FerrersBoard& f, unsigned r) {
  const auto prev = f.without_last();
  const long cm = f.col(f.width());
  LaurentPoly rhs = rook_poly_enum(prev, r).shifted(cm - static_cast<long>(r));
  if (r >= 1) rhs = rhs + rook_poly_enum(prev, r - 1) * q_integer(cm - static_cast<long>(r) + 1);
  return rhs;
}

/// Matrices in RREF with pivot list lambda, found by filtering every |lambda| x m matrix.
inline std::vector<Matrix> rref_by_filter(const FieldCtx& f, const PivotList& lambda) {
  std::vector<Matrix> out;
  for_each_matrix(f, lambda.size(), lambda.width(), [&](const Matrix& a) {
    const auto e = rref(a);
    if (e.rank == lambda.size() && e.pivots == lambda && e.reduced == a) out.push_back(a);
  });
  return out;
}

/// Count of A in RREF with piv(A) = lambda and rk(A; B) = |sigma| + r, B the unit rows at sigma.
inline std::uint64_t stacked_rank_count(const FieldCtx& f, const std::vector<Matrix>& rrefs, const PivotList& sigma, unsigned r) {
  Matrix b(f, sigma.size(), sigma.width());
  std::size_t row = 0;
  for (auto j : sigma.indices()) b.set(row++, j - 1, f->one());
  std::uint64_t count = 0;
  for (const auto& a : rrefs)
    if (rank(Matrix::stack(a, b)) == sigma.size() + r) ++count;
  return count;
}

/// C^⊥ by testing every matrix of the ambient space against the generators.
inline MatrixCode brute_dual(const MatrixCode& c) {
  std::vector<Matrix> members;
  const auto gens = c.basis();
  for_each_matrix(c.field(), c.rows(), c.cols(), [&](const Matrix& b) {
    for (const auto& g : gens)
      if (!trace_product(g, b).is_zero()) return;
    members.push_back(b);
  });
  return MatrixCode::span(c.field(), c.rows(), c.cols(), members);
}

/// |{A in C : rs(A) <= U}| by filtering codewords.
inline std::uint64_t brute_shortened_size(const MatrixCode& c, const Subspace& u) {
  std::uint64_t count = 0;
  c.for_each_codeword([&](const Matrix& a) {
    if (row_space(a).is_subspace_of(u)) ++count;
  });
  return count;
}

/// sum_{A in block} zeta_p^{Tr <A, B>} over the whole ambient space.
inline CycInt brute_char_sum(PartitionKind kind, const PartitionLabel& block, const Matrix& b) {
  const auto& f = b.field();
  CycInt s(f->p());
  for_each_matrix(f, b.rows(), b.cols(), [&](const Matrix& a) {
    if (label_of(kind, a) == block) s.add_root_power(f->trace(trace_product(a, b)));
  });
  return s;
}

/// The ambient space with every matrix's block label, for repeated character sums.
struct LabelledSpace {
  std::vector<Matrix> matrices;
  std::vector<PartitionLabel> labels;

  LabelledSpace(PartitionKind kind, const FieldCtx& f, std::size_t n, std::size_t m) {
    for_each_matrix(f, n, m, [&](const Matrix& a) {
      matrices.push_back(a);
      labels.push_back(label_of(kind, a));
    });
  }

  /// All block sums against b at once.
  std::map<PartitionLabel, CycInt> sums(const Matrix& b) const {
    const auto& f = b.field();
    std::map<PartitionLabel, CycInt> out;
    for (std::size_t i = 0; i < matrices.size(); ++i) {
      auto it = out.try_emplace(labels[i], CycInt(f->p())).first;
      it->second.add_root_power(f->trace(trace_product(matrices[i], b)));
    }
    return out;
  }
};

/// Number of n x m matrices with each pivot list, by enumeration.
inline std::map<PivotList, std::uint64_t> brute_pivot_counts(const FieldCtx& f, std::size_t n, std::size_t m) {
  std::map<PivotList, std::uint64_t> out;
  for_each_matrix(f, n, m, [&](const Matrix& a) { ++out[piv(a)]; });
  return out;
}

}  // namespace qpart::oracle
