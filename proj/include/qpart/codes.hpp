#pragma once

// Linear matrix codes C <= F^{n x m}: span, dual, shortenings, partition
// distributions, extremality, the field-embedding MRD codes and the padded
// constructions used in the rigidity examples.

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qpart/budget.hpp"
#include "qpart/kraw.hpp"
#include "qpart/lattice.hpp"
#include "qpart/matgf.hpp"

namespace qpart {

class MatrixCode {
 public:
  MatrixCode() = default;

  /// Span of the given n x m generators.
  static MatrixCode span(const FieldCtx& f, std::size_t n, std::size_t m, const std::vector<Matrix>& gens) {
    Matrix g(f, gens.size(), n * m);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      require_same_field(f, gens[i].field());
      if (gens[i].rows() != n || gens[i].cols() != m) throw ShapeMismatch("generator " + gens[i].shape() + " in a code of shape " + std::to_string(n) + "x" + std::to_string(m));
      for (std::size_t t = 0; t < n * m; ++t) g.set(i, t, gens[i].data()[t]);
    }
    return MatrixCode(f, n, m, reduced_basis(g));
  }

  /// Code whose generator matrix (rows are row-concatenated codewords) is g.
  static MatrixCode from_generator(const FieldCtx& f, std::size_t n, std::size_t m, const Matrix& g) {
    if (g.cols() != n * m) throw ShapeMismatch("generator width " + std::to_string(g.cols()) + " for " + std::to_string(n) + "x" + std::to_string(m));
    return MatrixCode(f, n, m, reduced_basis(g));
  }

  static MatrixCode zero(const FieldCtx& f, std::size_t n, std::size_t m) { return MatrixCode(f, n, m, Matrix(f, 0, n * m)); }
  static MatrixCode full(const FieldCtx& f, std::size_t n, std::size_t m) { return MatrixCode(f, n, m, Matrix::identity(f, n * m)); }

  const FieldCtx& field() const { return f_; }
  std::size_t rows() const { return n_; }
  std::size_t cols() const { return m_; }
  std::size_t dim() const { return g_.rows(); }
  BigInt size() const { return ipow(f_->q(), static_cast<unsigned>(dim())); }
  /// k x nm generator in RREF.
  const Matrix& generator() const { return g_; }

  std::vector<Matrix> basis() const {
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(g_.row(i).reshaped(n_, m_));
    return out;
  }

  bool contains(const Matrix& a) const {
    if (a.rows() != n_ || a.cols() != m_) return false;
    return rank(Matrix::stack(g_, a.flattened())) == dim();
  }

  /// C^⊥ with respect to <A, B> = Tr(A B^T).
  MatrixCode dual() const {
    if (dim() == 0) return full(f_, n_, m_);
    return MatrixCode(f_, n_, m_, null_space(g_));
  }

  /// Calls fn(A) for all q^k codewords, ordered by coefficient vector (base q, first generator fastest).
  template <class Fn>
  void for_each_codeword(Fn&& fn) const {
    const auto total = saturating_pow(f_->q(), dim());
    require_budget(total);
    const auto& f = *f_;
    const std::size_t k = dim(), nm = n_ * m_;
    std::vector<std::uint32_t> coeff(k, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      Matrix a(f_, n_, m_);
      std::vector<Elem> acc(nm);
      for (std::size_t i = 0; i < k; ++i) {
        if (!coeff[i]) continue;
        const Elem c{coeff[i]};
        for (std::size_t t = 0; t < nm; ++t) acc[t] = f.add(acc[t], f.mul(c, g_.at(i, t)));
      }
      for (std::size_t t = 0; t < nm; ++t) a.set(t / m_, t % m_, acc[t]);
      fn(static_cast<const Matrix&>(a));
      for (std::size_t i = 0; i < k; ++i) {
        if (++coeff[i] < f.q()) break;
        coeff[i] = 0;
      }
    }
  }

  std::vector<Matrix> codewords() const {
    std::vector<Matrix> out;
    for_each_codeword([&](const Matrix& a) { out.push_back(a); });
    return out;
  }

  bool operator==(const MatrixCode& o) const { return n_ == o.n_ && m_ == o.m_ && g_ == o.g_; }

 private:
  MatrixCode(FieldCtx f, std::size_t n, std::size_t m, Matrix g) : f_(std::move(f)), n_(n), m_(m), g_(std::move(g)) {}

  FieldCtx f_;
  std::size_t n_ = 0, m_ = 0;
  Matrix g_;
};

inline MatrixCode code_span(const FieldCtx& f, std::size_t n, std::size_t m, const std::vector<Matrix>& gens) {
  return MatrixCode::span(f, n, m, gens);
}

/// Span of a nonempty generator list; the shape and field come from the first generator.
inline MatrixCode code_span(const std::vector<Matrix>& gens) {
  if (gens.empty()) throw InvalidArgument("empty generator list needs an explicit field and shape");
  return MatrixCode::span(gens[0].field(), gens[0].rows(), gens[0].cols(), gens);
}

inline MatrixCode dual_code(const MatrixCode& c) { return c.dual(); }

/// C(U) = {A in C : rs(A) <= U}, solved as the linear condition A H^T = 0 for a basis H of U^⊥.
inline MatrixCode shorten(const MatrixCode& c, const Subspace& u) {
  if (u.ambient() != c.cols()) throw ShapeMismatch("subspace of F^" + std::to_string(u.ambient()) + " for a code with " + std::to_string(c.cols()) + " columns");
  require_same_field(c.field(), u.field());
  const auto& f = c.field();
  const Matrix h = u.dual().basis();
  if (h.rows() == 0 || c.dim() == 0) return c;
  const auto gens = c.basis();
  const std::size_t w = c.rows() * h.rows();
  Matrix k(f, gens.size(), w);
  const Matrix ht = h.transposed();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Matrix prod = gens[i] * ht;
    for (std::size_t t = 0; t < w; ++t) k.set(i, t, prod.data()[t]);
  }
  // x K = 0  <=>  K^T x^T = 0
  const Matrix x = null_space(k.transposed());
  if (x.rows() == 0) return MatrixCode::zero(f, c.rows(), c.cols());
  return MatrixCode::from_generator(f, c.rows(), c.cols(), x * c.generator());
}

enum class PivotSide { piv, rpiv };

inline std::string to_string(PivotSide s) { return s == PivotSide::piv ? "piv" : "rpiv"; }

/// C(lambda, side) = {A in C : side(A) ⊆ lambda}, by filtering codewords. Sorted.
inline std::vector<Matrix> shorten_piv(const MatrixCode& c, const PivotList& lambda, PivotSide side) {
  if (lambda.width() != c.cols()) throw InvalidArgument("pivot list width differs from the code's column count");
  std::vector<Matrix> out;
  c.for_each_codeword([&](const Matrix& a) {
    if ((side == PivotSide::piv ? piv(a) : rpiv(a)).subset_of(lambda)) out.push_back(a);
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// The same set as the union of C(U) over all U with side(U) = lambda. Sorted.
inline std::vector<Matrix> shorten_piv_union(const MatrixCode& c, const PivotList& lambda, PivotSide side) {
  if (lambda.width() != c.cols()) throw InvalidArgument("pivot list width differs from the code's column count");
  std::set<Matrix> acc;
  for (const auto& u : subspaces(c.field(), c.cols(), lambda.size())) {
    if ((side == PivotSide::piv ? u.pivots() : u.rpivots()) != lambda) continue;
    shorten(c, u).for_each_codeword([&](const Matrix& a) { acc.insert(a); });
  }
  return {acc.begin(), acc.end()};
}

inline Distribution distribution(const MatrixCode& c, PartitionKind kind) {
  Distribution d;
  c.for_each_codeword([&](const Matrix& a) { d.add(label_of(kind, a)); });
  return d;
}

inline std::size_t min_rank_distance(const MatrixCode& c) {
  if (c.dim() == 0) throw EmptyCode();
  std::size_t best = std::min(c.rows(), c.cols());
  c.for_each_codeword([&](const Matrix& a) {
    const auto r = rank(a);
    if (r > 0 && r < best) best = r;
  });
  return best;
}

/// C(U) = {0} and |C| = q^{n(m-u)}. Throws InternalError if C(U) = {0} but |C| exceeds the bound.
inline bool is_u_extremal(const MatrixCode& c, const Subspace& u) {
  const auto bound = c.rows() * (c.cols() - u.dim());
  const bool trivial = shorten(c, u).dim() == 0;
  if (trivial && c.dim() > bound) throw InternalError("code with C(U) = {0} exceeds q^{n(m-u)}");
  return trivial && c.dim() == bound;
}

/// C(lambda, side) = {0} and |C| = q^{n(m-|lambda|)}.
inline bool is_piv_extremal(const MatrixCode& c, const PivotList& lambda, PivotSide side) {
  const auto bound = c.rows() * (c.cols() - lambda.size());
  const bool trivial = shorten_piv(c, lambda, side).size() == 1;
  if (trivial && c.dim() > bound) throw InternalError("code with C(lambda) = {0} exceeds q^{n(m-|lambda|)}");
  return trivial && c.dim() == bound;
}

/// C = {0} or |C| = q^{n(m-d+1)}.
inline bool is_mrd(const MatrixCode& c) {
  if (c.dim() == 0) return true;
  const auto d = min_rank_distance(c);
  return c.dim() == c.rows() * (c.cols() - d + 1);
}

// ---------------------------------------------------------------------------
// Polynomials over GF(q) (low-to-high coefficient vectors) for the field embedding.

namespace detail {

using FieldPoly = std::vector<Elem>;

inline void trim(FieldPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

inline FieldPoly field_poly_mod(FieldPoly a, const FieldPoly& b, const Field& f) {
  trim(a);
  const Elem lead_inv = f.inv(b.back());
  while (a.size() >= b.size()) {
    const Elem c = f.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
    trim(a);
  }
  return a;
}

/// Monic polynomial with the given low-order coefficients packed base q.
inline FieldPoly monic_from_index(std::uint64_t idx, unsigned degree, const Field& f) {
  FieldPoly p(degree + 1);
  for (unsigned i = 0; i < degree; ++i) {
    p[i] = Elem{static_cast<std::uint32_t>(idx % f.q())};
    idx /= f.q();
  }
  p[degree] = f.one();
  return p;
}

inline bool field_poly_irreducible(const FieldPoly& p, const Field& f) {
  const unsigned n = static_cast<unsigned>(p.size() - 1);
  for (unsigned d = 1; d <= n / 2; ++d) {
    const auto count = saturating_pow(f.q(), d);
    for (std::uint64_t i = 0; i < count; ++i)
      if (field_poly_mod(p, monic_from_index(i, d, f), f).empty()) return false;
  }
  return n >= 1;
}

}  // namespace detail

/// A fixed monic irreducible of the given degree over GF(q): the built-in modulus of
/// GF(q^degree) when q is prime and that field is tabled, otherwise the first one in
/// base-q order of the low coefficients.
inline std::vector<Elem> default_irreducible(const FieldCtx& f, unsigned degree) {
  if (degree == 0) throw InvalidArgument("degree must be positive");
  if (f->e() == 1)
    for (const auto& d : detail::default_moduli())
      if (d.p == f->p() && d.e == degree) {
        std::vector<Elem> out;
        for (auto c : d.coeffs) out.push_back(Elem{c});
        return out;
      }
  const auto count = saturating_pow(f->q(), degree);
  require_budget(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    auto p = detail::monic_from_index(i, degree, *f);
    if (detail::field_poly_irreducible(p, *f)) return p;
  }
  throw InternalError("no irreducible polynomial found");
}

/// Companion matrix: ones on the subdiagonal, last column -c_0, ..., -c_{n-1}.
inline Matrix companion_matrix(const FieldCtx& f, const std::vector<Elem>& monic) {
  const std::size_t n = monic.size() - 1;
  Matrix p(f, n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) p.set(i + 1, i, f->one());
  for (std::size_t i = 0; i < n; ++i) p.set(i, n - 1, f->neg(monic[i]));
  return p;
}

/// F[P] = span{I, P, ..., P^{n-1}} for the companion P of a degree-n irreducible,
/// restricted to its first m columns: an n x m MRD code with d = m and |C| = q^n.
inline MatrixCode mrd_field_embedding(const FieldCtx& f, std::size_t n, std::size_t m) {
  if (m == 0 || m > n) throw InvalidArgument("field embedding needs 1 <= m <= n");
  const Matrix p = companion_matrix(f, default_irreducible(f, static_cast<unsigned>(n)));
  std::vector<std::size_t> rows(n), cols(m);
  for (std::size_t i = 0; i < n; ++i) rows[i] = i;
  for (std::size_t j = 0; j < m; ++j) cols[j] = j;
  std::vector<Matrix> gens;
  Matrix power = Matrix::identity(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    gens.push_back(power.submatrix(rows, cols));
    power = power * p;
  }
  return MatrixCode::span(f, n, m, gens);
}

inline MatrixCode mrd_field_embedding(const FieldCtx& f, std::size_t m) { return mrd_field_embedding(f, m, m); }

enum class PadMode {
  zero_pad,           // (A | 0)
  full_pad,           // (A | B), A in C1, B free
  full_pad_mirrored,  // (B | A), B free, A in C1
};

inline MatrixCode pad_code(const MatrixCode& c1, std::size_t m2, PadMode mode) {
  const auto& f = c1.field();
  const std::size_t n = c1.rows(), m1 = c1.cols(), m = m1 + m2;
  const std::size_t offset = mode == PadMode::full_pad_mirrored ? m2 : 0;
  std::vector<Matrix> gens;
  for (const auto& g : c1.basis()) {
    Matrix a(f, n, m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m1; ++j) a.set(i, offset + j, g.at(i, j));
    gens.push_back(a);
  }
  if (mode != PadMode::zero_pad) {
    const std::size_t free_offset = mode == PadMode::full_pad ? m1 : 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m2; ++j) gens.push_back(Matrix::unit(f, n, m, i, free_offset + j));
  }
  return MatrixCode::span(f, n, m, gens);
}

// ---------------------------------------------------------------------------
// Predicted distributions.

/// sum_{i<=u} [v,i] (-1)^{v-i} q^{C(v-i,2)} + sum_{i=u+1}^{v} [v,i] q^{n(i-u)} (-1)^{v-i} q^{C(v-i,2)}
inline BigInt predicted_rigid_rs(const BigInt& q, long n, long u, long v) {
  LaurentPoly s;
  for (long i = 0; i <= v; ++i) {
    const long d = v - i;
    LaurentPoly term = gaussian_binomial(v, i) * LaurentPoly::monomial(binom2(d), d % 2 == 0 ? 1 : -1);
    if (i > u) term = term.shifted(n * (i - u));
    s += term;
  }
  return s.evaluate(q);
}

/// Row-space count of an MRD code of minimum distance d on a v-dimensional block.
inline BigInt predicted_mrd_rs(const BigInt& q, long n, long d, long v) {
  if (d < 1) throw InvalidArgument("minimum distance must be at least 1");
  return predicted_rigid_rs(q, n, d - 1, v);
}

/// Pivot count of a code that is (lambda', piv)-extremal for all |lambda'| = u below lambda:
/// the rigid row-space value at v = |mu| summed over the q^{c(mu)} subspaces with pivot list mu.
inline BigInt predicted_rigid_piv(const BigInt& q, long n, long u, const PivotList& mu) {
  return ipow(q, rref_free_entries(mu)) * predicted_rigid_rs(q, n, u, static_cast<long>(mu.size()));
}

/// The same value with the factor |P^piv_mu| in place of q^{c(mu)}; kept for comparison only,
/// it overcounts by prod_{i<|mu|} (q^n - q^i).
inline BigInt predicted_rigid_piv_literal(const BigInt& q, long n, long u, const PivotList& mu) {
  return pivot_block_size(mu, q, n) * predicted_rigid_rs(q, n, u, static_cast<long>(mu.size()));
}

enum class PredictionKind { mrd_rs, rigid_rs, rigid_piv };

/// Predicted counts on the range the statement covers, zeros included:
/// mrd_rs over every V in L (param = d); rigid_rs over V <= T (param = u);
/// rigid_piv over mu ⊆ lambda (param = u).
inline std::vector<std::pair<PartitionLabel, BigInt>> predicted_distribution(PredictionKind kind, const FieldCtx& f, std::size_t n,
                                                                            std::size_t m, long param,
                                                                            const std::optional<Subspace>& t = std::nullopt,
                                                                            const std::optional<PivotList>& lambda = std::nullopt) {
  std::vector<std::pair<PartitionLabel, BigInt>> out;
  const BigInt q = f->q();
  const long nn = static_cast<long>(n);
  switch (kind) {
    case PredictionKind::mrd_rs:
      for (auto& v : subspaces(f, m)) out.emplace_back(v, predicted_mrd_rs(q, nn, param, static_cast<long>(v.dim())));
      break;
    case PredictionKind::rigid_rs: {
      const Subspace top = t ? *t : Subspace::full(f, m);
      for (auto& v : subspaces(f, m))
        if (v.is_subspace_of(top)) out.emplace_back(v, predicted_rigid_rs(q, nn, param, static_cast<long>(v.dim())));
      break;
    }
    case PredictionKind::rigid_piv: {
      const PivotList top = lambda ? *lambda : PivotList::full(static_cast<unsigned>(m));
      for (auto& mu : all_pivot_lists(static_cast<unsigned>(m)))
        if (mu.subset_of(top)) out.emplace_back(PivotLabel{mu}, predicted_rigid_piv(q, nn, param, mu));
      break;
    }
  }
  return out;
}

struct MomentSides {
  BigInt lhs, rhs;
};

/// sum_V [m - dim V, nu] P^rs(C,V)  versus  |C|/q^{n nu} sum_W [m - dim W, m - nu] P^rs(C^⊥,W).
inline MomentSides binomial_moment(const MatrixCode& c, long nu) {
  const long m = static_cast<long>(c.cols()), n = static_cast<long>(c.rows());
  if (nu < 0 || nu > m) throw InvalidArgument("nu outside [0, m]");
  const BigInt q = c.field()->q();
  MomentSides s;
  for (const auto& [label, count] : distribution(c, PartitionKind::rowspace).entries())
    s.lhs += gaussian_binomial_at(m - static_cast<long>(std::get<Subspace>(label).dim()), nu, q) * count;
  BigInt dual_sum = 0;
  for (const auto& [label, count] : distribution(c.dual(), PartitionKind::rowspace).entries())
    dual_sum += gaussian_binomial_at(m - static_cast<long>(std::get<Subspace>(label).dim()), m - nu, q) * count;
  const BigInt num = c.size() * dual_sum, den = ipow(q, static_cast<unsigned>(n * nu));
  if (num % den != 0) throw NonIntegerResult();
  s.rhs = num / den;
  return s;
}

// ---------------------------------------------------------------------------
// Random codes and the code file format.

/// A code of dimension k spanned by uniformly drawn matrices (redrawn until independent).
inline MatrixCode random_code(const FieldCtx& f, std::size_t n, std::size_t m, std::size_t k, std::mt19937_64& rng) {
  if (k > n * m) throw InvalidArgument("dimension above nm");
  std::vector<Matrix> gens;
  MatrixCode c = MatrixCode::zero(f, n, m);
  while (c.dim() < k) {
    Matrix a(f, n, m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) a.set(i, j, Elem{static_cast<std::uint32_t>(rng() % f->q())});
    if (c.contains(a)) continue;
    gens.push_back(a);
    c = MatrixCode::span(f, n, m, gens);
  }
  return c;
}

/// Seeded corpus: code i has dimension drawn uniformly from [0, nm].
inline std::vector<MatrixCode> random_code_corpus(const FieldCtx& f, std::size_t n, std::size_t m, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<MatrixCode> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_code(f, n, m, rng() % (n * m + 1), rng));
  return out;
}

/// "n m q k", then k generator matrices in the matrix text format, blank-line separated.
inline void write_code(std::ostream& os, const MatrixCode& c) {
  os << c.rows() << ' ' << c.cols() << ' ' << c.field()->q() << ' ' << c.dim() << '\n';
  for (const auto& g : c.basis()) {
    os << '\n';
    write_matrix(os, g);
  }
}

inline std::string code_to_text(const MatrixCode& c) {
  std::ostringstream os;
  write_code(os, c);
  return os.str();
}

inline MatrixCode read_code(std::istream& is, FieldCtx field = nullptr) {
  const auto n = detail::read_token(is, "row count");
  const auto m = detail::read_token(is, "column count");
  const auto q = detail::read_token(is, "field order");
  const auto k = detail::read_token(is, "generator count");
  if (!field) field = field_of_order(static_cast<std::uint32_t>(q));
  if (field->q() != q) throw ParseError("field order " + std::to_string(q) + " does not match context");
  std::vector<Matrix> gens;
  for (std::uint64_t i = 0; i < k; ++i) {
    Matrix g = read_matrix(is, field);
    if (g.rows() != n || g.cols() != m) throw ParseError("generator " + std::to_string(i + 1) + " has shape " + g.shape());
    gens.push_back(std::move(g));
  }
  std::string rest;
  if (is >> rest) throw ParseError("trailing content after the last generator");
  return MatrixCode::span(field, n, m, gens);
}

inline MatrixCode code_from_text(const std::string& s, FieldCtx field = nullptr) {
  std::istringstream is(s);
  return read_code(is, std::move(field));
}

}  // namespace qpart
