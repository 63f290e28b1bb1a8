#pragma once

// The subspace lattice of F^m and the pivot lattice: enumeration, duals,
// Mobius function and Gaussian binomials.

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "qpart/budget.hpp"
#include "qpart/laurent.hpp"
#include "qpart/matgf.hpp"

namespace qpart {

/// [a choose b]_q by the q-Pascal rule [a,b] = [a-1,b-1] + q^b [a-1,b]. Zero unless 0 <= b <= a.
inline LaurentPoly gaussian_binomial(long a, long b) {
  if (b < 0 || a < 0 || b > a) return LaurentPoly();
  if (b == 0 || b == a) return LaurentPoly(1);
  static std::mutex mu;
  static std::map<std::pair<long, long>, LaurentPoly> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find({a, b}); it != memo.end()) return it->second;
  }
  LaurentPoly r = gaussian_binomial(a - 1, b - 1) + gaussian_binomial(a - 1, b).shifted(b);
  std::lock_guard lock(mu);
  memo.emplace(std::pair{a, b}, r);
  return r;
}

inline BigInt gaussian_binomial_at(long a, long b, const BigInt& q) { return gaussian_binomial(a, b).evaluate(q); }

/// prod_{i=0}^{r-1} (q^n - q^i), the number of injective-rank-r column choices.
inline BigInt falling_q_product(const BigInt& q, long n, long r) {
  BigInt p = 1;
  for (long i = 0; i < r; ++i) p *= ipow(q, static_cast<unsigned>(n)) - ipow(q, static_cast<unsigned>(i));
  return p;
}

/// Mobius function of the subspace lattice on a nested pair W <= V with dim W = w, dim V = v.
inline LaurentPoly moebius_interval(long w, long v) {
  if (w > v) return LaurentPoly();
  const long d = v - w;
  return LaurentPoly::monomial(binom2(d), d % 2 == 0 ? 1 : -1);
}

inline PivotList dual_pivot_list(const PivotList& l) { return l.complement(); }

inline Subspace dual_subspace(const Subspace& u) { return u.dual(); }

/// Number of free entries of a full-rank RREF matrix with pivot list l: sum (m - l_i - (r - i)).
inline unsigned rref_free_entries(const PivotList& l) {
  const auto idx = l.indices();
  const unsigned r = static_cast<unsigned>(idx.size());
  unsigned c = 0;
  for (unsigned i = 1; i <= r; ++i) c += l.width() - idx[i - 1] - (r - i);
  return c;
}

/// Every full-rank |l| x m matrix in RREF with pivot list l, free entries in row-major base-q order.
inline std::vector<Matrix> rref_matrices(const FieldCtx& f, const PivotList& l) {
  const auto idx = l.indices();
  const std::size_t r = idx.size(), m = l.width();
  std::vector<std::pair<std::size_t, std::size_t>> free;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = idx[i]; j < m; ++j)
      if (!l.contains(static_cast<unsigned>(j + 1))) free.emplace_back(i, j);
  const auto total = saturating_pow(f->q(), free.size());
  require_budget(total);
  Matrix base(f, r, m);
  for (std::size_t i = 0; i < r; ++i) base.set(i, idx[i] - 1, f->one());
  std::vector<Matrix> out;
  out.reserve(total);
  for (std::uint64_t code = 0; code < total; ++code) {
    Matrix a = base;
    auto c = code;
    for (auto [i, j] : free) {
      a.set(i, j, Elem{static_cast<std::uint32_t>(c % f->q())});
      c /= f->q();
    }
    out.push_back(std::move(a));
  }
  return out;
}

/// All subspaces of F^m (optionally of one dimension), each exactly once,
/// ordered by dimension and then lexicographically on the RREF basis entries.
inline std::vector<Subspace> subspaces(const FieldCtx& f, std::size_t m, std::optional<std::size_t> dim = std::nullopt) {
  std::vector<Subspace> out;
  std::uint64_t visited = 0;
  for (std::size_t d = 0; d <= m; ++d) {
    if (dim && *dim != d) continue;
    std::vector<Subspace> layer;
    for (const auto& l : all_pivot_lists(static_cast<unsigned>(m))) {
      if (l.size() != d) continue;
      visited += saturating_pow(f->q(), rref_free_entries(l));
      require_budget(visited);
      for (auto& a : rref_matrices(f, l)) layer.push_back(Subspace::span(a));
    }
    std::sort(layer.begin(), layer.end());
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace qpart
