#pragma once

// Dense matrices over GF(q), echelon forms, pivot lists and canonical subspaces.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qpart/budget.hpp"
#include "qpart/gf.hpp"

namespace qpart {

/// A subset of [m] = {1, ..., m} stored as a bit-set; iteration is increasing.
class PivotList {
 public:
  static constexpr unsigned kMaxWidth = 64;

  PivotList() = default;
  explicit PivotList(unsigned width) : width_(width) {
    if (width > kMaxWidth) throw InvalidArgument("pivot list width above 64");
  }

  static PivotList from_indices(unsigned width, const std::vector<unsigned>& idx) {
    PivotList l(width);
    unsigned prev = 0;
    for (auto j : idx) {
      if (j <= prev || j > width) throw InvalidArgument("pivot indices must be strictly increasing within [1, m]");
      l.insert(j);
      prev = j;
    }
    return l;
  }

  static PivotList from_bits(unsigned width, std::uint64_t bits) {
    PivotList l(width);
    if (width < 64 && (bits >> width) != 0) throw InvalidArgument("pivot bits outside [1, m]");
    l.bits_ = bits;
    return l;
  }

  /// (1, 2, ..., m)
  static PivotList full(unsigned width) { return from_bits(width, width == 64 ? ~0ULL : ((1ULL << width) - 1)); }

  unsigned width() const { return width_; }
  std::uint64_t bits() const { return bits_; }
  unsigned size() const { return static_cast<unsigned>(__builtin_popcountll(bits_)); }
  bool empty() const { return bits_ == 0; }
  bool contains(unsigned j) const { return j >= 1 && j <= width_ && ((bits_ >> (j - 1)) & 1ULL); }

  void insert(unsigned j) {
    if (j < 1 || j > width_) throw InvalidArgument("pivot index out of range");
    bits_ |= 1ULL << (j - 1);
  }

  std::vector<unsigned> indices() const {
    std::vector<unsigned> r;
    for (unsigned j = 1; j <= width_; ++j)
      if (contains(j)) r.push_back(j);
    return r;
  }

  /// Dual pivot list: the complement in [m].
  PivotList complement() const { return from_bits(width_, full(width_).bits_ & ~bits_); }

  /// j -> m + 1 - j
  PivotList reversed() const {
    PivotList r(width_);
    for (unsigned j = 1; j <= width_; ++j)
      if (contains(j)) r.insert(width_ + 1 - j);
    return r;
  }

  bool subset_of(const PivotList& o) const { return (bits_ & ~o.bits_) == 0; }
  PivotList operator&(const PivotList& o) const { return from_bits(width_, bits_ & o.bits_); }
  PivotList operator|(const PivotList& o) const { return from_bits(width_, bits_ | o.bits_); }
  PivotList minus(const PivotList& o) const { return from_bits(width_, bits_ & ~o.bits_); }

  std::string to_string() const {
    std::string s = "(";
    bool first = true;
    for (auto j : indices()) {
      if (!first) s += ",";
      s += std::to_string(j);
      first = false;
    }
    return s + ")";
  }

  bool operator==(const PivotList& o) const = default;

  // Width, then length, then lexicographic on the index list.
  std::strong_ordering operator<=>(const PivotList& o) const {
    if (auto c = width_ <=> o.width_; c != 0) return c;
    if (auto c = size() <=> o.size(); c != 0) return c;
    const auto a = indices(), b = o.indices();
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
  }

 private:
  unsigned width_ = 0;
  std::uint64_t bits_ = 0;
};

/// All 2^m pivot lists over [m], ordered by length then lexicographically.
inline std::vector<PivotList> all_pivot_lists(unsigned m) {
  std::vector<PivotList> r;
  for (std::uint64_t b = 0; b < (1ULL << m); ++b) r.push_back(PivotList::from_bits(m, b));
  std::sort(r.begin(), r.end());
  return r;
}

class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldCtx f, std::size_t rows, std::size_t cols) : field_(std::move(f)), rows_(rows), cols_(cols), data_(rows * cols) {}

  Matrix(FieldCtx f, std::size_t rows, std::size_t cols, const std::vector<std::uint32_t>& values)
      : Matrix(std::move(f), rows, cols) {
    if (values.size() != rows * cols) throw ShapeMismatch("entry count does not match dimensions");
    for (std::size_t i = 0; i < values.size(); ++i) data_[i] = field_->elem(values[i]);
  }

  static Matrix identity(const FieldCtx& f, std::size_t n) {
    Matrix r(f, n, n);
    for (std::size_t i = 0; i < n; ++i) r.set(i, i, f->one());
    return r;
  }

  /// E_{ij} with 0-based (i, j).
  static Matrix unit(const FieldCtx& f, std::size_t rows, std::size_t cols, std::size_t i, std::size_t j) {
    Matrix r(f, rows, cols);
    r.set(i, j, f->one());
    return r;
  }

  /// Column-reversal permutation Z.
  static Matrix reversal(const FieldCtx& f, std::size_t m) {
    Matrix r(f, m, m);
    for (std::size_t i = 0; i < m; ++i) r.set(i, m - 1 - i, f->one());
    return r;
  }

  const FieldCtx& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Elem>& data() const { return data_; }

  Elem at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Elem v) { data_[i * cols_ + j] = v; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e.is_zero(); });
  }

  Matrix transposed() const {
    Matrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
  }

  /// A Z: columns in reverse order.
  Matrix reversed_columns() const {
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.set(i, cols_ - 1 - j, at(i, j));
    return r;
  }

  Matrix row(std::size_t i) const { return submatrix({i}, all_cols()); }

  Matrix submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
    Matrix r(field_, rs.size(), cs.size());
    for (std::size_t a = 0; a < rs.size(); ++a)
      for (std::size_t b = 0; b < cs.size(); ++b) r.set(a, b, at(rs[a], cs[b]));
    return r;
  }

  /// Row-concatenation as a 1 x (rows*cols) matrix.
  Matrix flattened() const {
    Matrix r = *this;
    r.rows_ = 1;
    r.cols_ = rows_ * cols_;
    return r;
  }

  Matrix reshaped(std::size_t rows, std::size_t cols) const {
    if (rows * cols != rows_ * cols_) throw ShapeMismatch("reshape");
    Matrix r = *this;
    r.rows_ = rows;
    r.cols_ = cols;
    return r;
  }

  Matrix scaled(Elem c) const {
    Matrix r = *this;
    for (auto& x : r.data_) x = field_->mul(c, x);
    return r;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b, "+");
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = a.field_->add(a.data_[i], b.data_[i]);
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b, "-");
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = a.field_->sub(a.data_[i], b.data_[i]);
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_field(a.field_, b.field_);
    if (a.cols_ != b.rows_) throw ShapeMismatch("product of " + a.shape() + " and " + b.shape());
    const auto& f = *a.field_;
    Matrix r(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Elem aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r.data_[i * r.cols_ + j] = f.add(r.data_[i * r.cols_ + j], f.mul(aik, b.at(k, j)));
      }
    return r;
  }

  /// Vertical concatenation (A over B).
  static Matrix stack(const Matrix& a, const Matrix& b) {
    require_same_field(a.field_, b.field_);
    if (a.cols_ != b.cols_) throw ShapeMismatch("stack of " + a.shape() + " and " + b.shape());
    Matrix r(a.field_, a.rows_ + b.rows_, a.cols_);
    std::copy(a.data_.begin(), a.data_.end(), r.data_.begin());
    std::copy(b.data_.begin(), b.data_.end(), r.data_.begin() + static_cast<std::ptrdiff_t>(a.data_.size()));
    return r;
  }

  /// Horizontal concatenation (A | B).
  static Matrix hconcat(const Matrix& a, const Matrix& b) {
    require_same_field(a.field_, b.field_);
    if (a.rows_ != b.rows_) throw ShapeMismatch("hconcat of " + a.shape() + " and " + b.shape());
    Matrix r(a.field_, a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t j = 0; j < a.cols_; ++j) r.set(i, j, a.at(i, j));
      for (std::size_t j = 0; j < b.cols_; ++j) r.set(i, a.cols_ + j, b.at(i, j));
    }
    return r;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  bool operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || data_ != o.data_) return false;
    return field_ == o.field_ || (field_ && o.field_ && *field_ == *o.field_);
  }

  // Shape, then entries lexicographically (row-major). Field is not part of the order.
  std::strong_ordering operator<=>(const Matrix& o) const {
    if (auto c = rows_ <=> o.rows_; c != 0) return c;
    if (auto c = cols_ <=> o.cols_; c != 0) return c;
    return std::lexicographical_compare_three_way(data_.begin(), data_.end(), o.data_.begin(), o.data_.end());
  }

 private:
  std::vector<std::size_t> all_cols() const {
    std::vector<std::size_t> c(cols_);
    for (std::size_t j = 0; j < cols_; ++j) c[j] = j;
    return c;
  }

  void check_same_shape(const Matrix& b, const char* op) const {
    require_same_field(field_, b.field_);
    if (rows_ != b.rows_ || cols_ != b.cols_) throw ShapeMismatch(std::string("operator") + op + " on " + shape() + " and " + b.shape());
  }

  FieldCtx field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> data_;
};

struct Echelon {
  Matrix reduced;
  PivotList pivots;
  std::size_t rank = 0;
};

/// Reduced row echelon form by Gauss-Jordan elimination; zero rows are kept at the bottom.
inline Echelon rref(const Matrix& a) {
  const auto& f = *a.field();
  Matrix r = a;
  PivotList piv(static_cast<unsigned>(a.cols()));
  std::size_t lead = 0;
  for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
    std::size_t sel = lead;
    while (sel < r.rows() && r.at(sel, col).is_zero()) ++sel;
    if (sel == r.rows()) continue;
    if (sel != lead)
      for (std::size_t j = 0; j < r.cols(); ++j) {
        const Elem t = r.at(sel, j);
        r.set(sel, j, r.at(lead, j));
        r.set(lead, j, t);
      }
    const Elem s = f.inv(r.at(lead, col));
    for (std::size_t j = col; j < r.cols(); ++j) r.set(lead, j, f.mul(s, r.at(lead, j)));
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == lead) continue;
      const Elem c = r.at(i, col);
      if (c.is_zero()) continue;
      for (std::size_t j = col; j < r.cols(); ++j) r.set(i, j, f.sub(r.at(i, j), f.mul(c, r.at(lead, j))));
    }
    piv.insert(static_cast<unsigned>(col + 1));
    ++lead;
  }
  return {std::move(r), piv, lead};
}

inline std::size_t rank(const Matrix& a) { return rref(a).rank; }
inline PivotList piv(const Matrix& a) { return rref(a).pivots; }

/// Reverse pivot indices: rpiv(A) = m + 1 - piv(AZ), listed increasingly.
inline PivotList rpiv(const Matrix& a) { return piv(a.reversed_columns()).reversed(); }

/// Reverse reduced row echelon form RREF(AZ) Z.
inline Matrix reverse_rref(const Matrix& a) { return rref(a.reversed_columns()).reduced.reversed_columns(); }

/// <A, B> = Tr(A B^T), the standard dot product of the row-concatenations.
inline Elem trace_product(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatch("trace product of " + a.shape() + " and " + b.shape());
  const auto& f = *a.field();
  Elem s = f.zero();
  for (std::size_t i = 0; i < a.data().size(); ++i) s = f.add(s, f.mul(a.data()[i], b.data()[i]));
  return s;
}

/// Nonzero rows of the RREF of a.
inline Matrix reduced_basis(const Matrix& a) {
  auto e = rref(a);
  std::vector<std::size_t> rows(e.rank), cols(a.cols());
  for (std::size_t i = 0; i < e.rank; ++i) rows[i] = i;
  for (std::size_t j = 0; j < a.cols(); ++j) cols[j] = j;
  return e.reduced.submatrix(rows, cols);
}

/// Rows spanning {x : a x^T = 0}, in RREF.
inline Matrix null_space(const Matrix& a) {
  const auto& f = a.field();
  auto e = rref(a);
  const auto m = a.cols();
  const auto piv_idx = e.pivots.indices();
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < m; ++j)
    if (!e.pivots.contains(static_cast<unsigned>(j + 1))) free_cols.push_back(j);
  Matrix k(f, free_cols.size(), m);
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    const auto fc = free_cols[t];
    k.set(t, fc, f->one());
    for (std::size_t i = 0; i < piv_idx.size(); ++i) k.set(t, piv_idx[i] - 1, f->neg(e.reduced.at(i, fc)));
  }
  return reduced_basis(k);
}

/// A subspace of F^m represented by its RREF basis (no zero rows).
class Subspace {
 public:
  Subspace() = default;

  /// Zero subspace of F^m.
  static Subspace zero(const FieldCtx& f, std::size_t m) { return Subspace(Matrix(f, 0, m)); }
  static Subspace full(const FieldCtx& f, std::size_t m) { return Subspace(Matrix::identity(f, m)); }

  /// Row space of an arbitrary matrix.
  static Subspace span(const Matrix& generators) { return Subspace(reduced_basis(generators)); }

  const Matrix& basis() const { return basis_; }
  const FieldCtx& field() const { return basis_.field(); }
  std::size_t ambient() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }

  PivotList pivots() const { return piv(basis_); }
  PivotList rpivots() const { return rpiv(basis_); }

  /// Orthogonal complement under the standard inner product.
  Subspace dual() const { return Subspace(null_space(basis_)); }

  bool is_subspace_of(const Subspace& o) const {
    if (dim() > o.dim()) return false;
    return rank(Matrix::stack(o.basis_, basis_)) == o.dim();
  }

  bool contains_rows_of(const Matrix& a) const { return rank(Matrix::stack(basis_, a)) == dim(); }

  Subspace operator+(const Subspace& o) const { return span(Matrix::stack(basis_, o.basis_)); }

  /// U ∩ V = (U^⊥ + V^⊥)^⊥
  Subspace intersect(const Subspace& o) const { return (dual() + o.dual()).dual(); }

  std::string to_string() const {
    std::string s = "<";
    for (std::size_t i = 0; i < dim(); ++i) {
      if (i) s += ";";
      for (std::size_t j = 0; j < ambient(); ++j) {
        if (j) s += " ";
        s += std::to_string(basis_.at(i, j).value);
      }
    }
    return s + ">";
  }

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

  // Ambient dimension, dimension, then the RREF entries lexicographically.
  std::strong_ordering operator<=>(const Subspace& o) const {
    if (auto c = ambient() <=> o.ambient(); c != 0) return c;
    if (auto c = dim() <=> o.dim(); c != 0) return c;
    return basis_ <=> o.basis_;
  }

 private:
  explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}
  Matrix basis_;
};

inline Subspace row_space(const Matrix& a) { return Subspace::span(a); }

// ---------------------------------------------------------------------------
// Enumeration of the ambient space F^{n x m} by base-q index (row-major digits).

inline Matrix matrix_from_index(const FieldCtx& f, std::size_t rows, std::size_t cols, std::uint64_t index) {
  Matrix r(f, rows, cols);
  const auto q = f->q();
  for (std::size_t t = 0; t < rows * cols; ++t) {
    r.set(t / cols, t % cols, Elem{static_cast<std::uint32_t>(index % q)});
    index /= q;
  }
  return r;
}

inline std::uint64_t matrix_index(const Matrix& a) {
  std::uint64_t idx = 0;
  const auto q = a.field()->q();
  for (std::size_t t = a.data().size(); t-- > 0;) idx = idx * q + a.data()[t].value;
  return idx;
}

inline std::uint64_t ambient_size(const FieldCtx& f, std::size_t rows, std::size_t cols) {
  return saturating_pow(f->q(), rows * cols);
}

/// Calls fn(A) for every A in F^{rows x cols}, in index order.
template <class Fn>
void for_each_matrix(const FieldCtx& f, std::size_t rows, std::size_t cols, Fn&& fn) {
  const auto total = ambient_size(f, rows, cols);
  require_budget(total);
  for (std::uint64_t i = 0; i < total; ++i) fn(matrix_from_index(f, rows, cols, i));
}

/// GL_n(F), in index order.
inline std::vector<Matrix> general_linear_group(const FieldCtx& f, std::size_t n) {
  std::vector<Matrix> r;
  for_each_matrix(f, n, n, [&](const Matrix& a) {
    if (rank(a) == n) r.push_back(a);
  });
  return r;
}

/// Invertible upper-triangular n x n matrices.
inline std::vector<Matrix> upper_triangular_group(const FieldCtx& f, std::size_t n) {
  std::vector<Matrix> r;
  for (auto& a : general_linear_group(f, n)) {
    bool upper = true;
    for (std::size_t i = 0; i < n && upper; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (!a.at(i, j).is_zero()) upper = false;
    if (upper) r.push_back(a);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Text format: "n m q" then n lines of m entries.

inline void write_matrix(std::ostream& os, const Matrix& a) {
  os << a.rows() << ' ' << a.cols() << ' ' << a.field()->q() << '\n';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) os << ' ';
      os << a.at(i, j).value;
    }
    os << '\n';
  }
}

inline std::string to_text(const Matrix& a) {
  std::ostringstream os;
  write_matrix(os, a);
  return os.str();
}

namespace detail {
inline std::uint64_t read_token(std::istream& is, const char* what) {
  long long v;
  if (!(is >> v)) throw ParseError(std::string("expected ") + what);
  if (v < 0) throw ParseError(std::string("negative ") + what);
  return static_cast<std::uint64_t>(v);
}
}  // namespace detail

/// Reads a matrix; when field is null the field is recovered from q via the built-in table.
inline Matrix read_matrix(std::istream& is, FieldCtx field = nullptr) {
  const auto n = detail::read_token(is, "row count");
  const auto m = detail::read_token(is, "column count");
  const auto q = detail::read_token(is, "field order");
  if (!field) field = field_of_order(static_cast<std::uint32_t>(q));
  if (field->q() != q) throw ParseError("field order " + std::to_string(q) + " does not match context");
  Matrix a(field, n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const auto v = detail::read_token(is, "matrix entry");
      if (v >= q) throw ParseError("entry " + std::to_string(v) + " out of range");
      a.set(i, j, Elem{static_cast<std::uint32_t>(v)});
    }
  return a;
}

inline Matrix matrix_from_text(const std::string& s, FieldCtx field = nullptr) {
  std::istringstream is(s);
  return read_matrix(is, std::move(field));
}

}  // namespace qpart

template <>
struct std::hash<qpart::Subspace> {
  std::size_t operator()(const qpart::Subspace& s) const noexcept {
    std::size_t h = s.ambient() * 1315423911u + s.dim();
    for (auto e : s.basis().data()) h = h * 1000003u ^ e.value;
    return h;
  }
};
