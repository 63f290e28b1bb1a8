#pragma once

// Linear maps on F^{n x m} that preserve rank, row space or pivots:
// application, exhaustive classification at tiny sizes, and extension search.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qpart/budget.hpp"
#include "qpart/codes.hpp"
#include "qpart/kraw.hpp"
#include "qpart/matgf.hpp"

namespace qpart {

/// A -> U A V, or A -> U A^T V when transposed (square only).
struct BilinearMap {
  Matrix u, v;
  bool transposed = false;

  Matrix apply(const Matrix& a) const {
    if (transposed) {
      if (a.rows() != a.cols()) throw ShapeMismatch("transpose branch on non-square " + a.shape());
      return u * a.transposed() * v;
    }
    return u * a * v;
  }
};

/// A -> vec(A) G on row-concatenations; row t of G is the image of the t-th unit matrix.
struct GeneralLinearMap {
  std::size_t rows = 0, cols = 0;
  Matrix g;

  Matrix apply(const Matrix& a) const {
    if (a.rows() != rows || a.cols() != cols) throw ShapeMismatch("map on " + std::to_string(rows) + "x" + std::to_string(cols) + " applied to " + a.shape());
    return (a.flattened() * g).reshaped(rows, cols);
  }

  /// (this after other)(A) = this(other(A))
  GeneralLinearMap after(const GeneralLinearMap& other) const { return {rows, cols, other.g * g}; }

  bool operator==(const GeneralLinearMap& o) const { return rows == o.rows && cols == o.cols && g == o.g; }
  auto operator<=>(const GeneralLinearMap& o) const { return g <=> o.g; }
};

template <class Map>
GeneralLinearMap to_general(const Map& f, const FieldCtx& field, std::size_t n, std::size_t m) {
  Matrix g(field, n * m, n * m);
  for (std::size_t t = 0; t < n * m; ++t) {
    const Matrix img = f.apply(Matrix::unit(field, n, m, t / m, t % m));
    for (std::size_t s = 0; s < n * m; ++s) g.set(t, s, img.data()[s]);
  }
  return {n, m, g};
}

template <class Map>
Matrix apply_map(const Map& f, const Matrix& a) {
  return f.apply(a);
}

/// Partition kinds for which preservation is defined (reverse pivots are not).
inline void require_preserver_kind(PartitionKind kind) {
  if (kind == PartitionKind::rpivot) throw InvalidArgument("preservation is defined for rank, rowspace and pivot");
}

template <class Map>
bool is_preserving(const Map& f, PartitionKind kind, const MatrixCode& domain) {
  require_preserver_kind(kind);
  bool ok = true;
  domain.for_each_codeword([&](const Matrix& a) {
    if (ok && !(label_of(kind, f.apply(a)) == label_of(kind, a))) ok = false;
  });
  return ok;
}

/// The structured normal forms: rowspace A -> UA; pivot A -> UAV with V upper triangular;
/// rank A -> UAV and, for n = m, A -> U A^T V. Distinct maps, sorted by matrix.
inline std::vector<GeneralLinearMap> structured_family(const FieldCtx& f, std::size_t n, std::size_t m, PartitionKind kind) {
  require_preserver_kind(kind);
  std::set<GeneralLinearMap> out;
  const auto gl_n = general_linear_group(f, n);
  if (kind == PartitionKind::rowspace) {
    const Matrix id = Matrix::identity(f, m);
    for (auto& u : gl_n) out.insert(to_general(BilinearMap{u, id, false}, f, n, m));
    return {out.begin(), out.end()};
  }
  const auto right = kind == PartitionKind::pivot ? upper_triangular_group(f, m) : general_linear_group(f, m);
  require_budget(gl_n.size() * right.size());
  for (auto& u : gl_n)
    for (auto& v : right) {
      out.insert(to_general(BilinearMap{u, v, false}, f, n, m));
      if (kind == PartitionKind::rank && n == m) out.insert(to_general(BilinearMap{u, v, true}, f, n, m));
    }
  return {out.begin(), out.end()};
}

/// Every invertible linear endomorphism of F^{n x m} preserving the partition on the whole space.
/// Gated to q = 2 and nm <= 4 (|GL_4(F_2)| = 20160 candidates).
inline std::vector<GeneralLinearMap> classify_preservers(const FieldCtx& f, std::size_t n, std::size_t m, PartitionKind kind) {
  require_preserver_kind(kind);
  if (f->q() != 2 || n * m > 4)
    throw BudgetExceeded("exhaustive classification is limited to q = 2 and nm <= 4");
  const std::size_t nm = n * m;
  std::vector<Matrix> space;
  std::vector<PartitionLabel> labels;
  for_each_matrix(f, n, m, [&](const Matrix& a) {
    space.push_back(a);
    labels.push_back(label_of(kind, a));
  });
  std::vector<GeneralLinearMap> out;
  for (auto& g : general_linear_group(f, nm)) {
    const GeneralLinearMap map{n, m, g};
    bool ok = true;
    for (std::size_t i = 0; i < space.size() && ok; ++i)
      if (!(label_of(kind, map.apply(space[i])) == labels[i])) ok = false;
    if (ok) out.push_back(map);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// A linear map given on a subcode by the images of its codewords.
struct SubcodeMap {
  MatrixCode domain;
  std::vector<std::pair<Matrix, Matrix>> pairs;  // (A, f(A)) for every codeword A
};

template <class Fn>
SubcodeMap subcode_map(const MatrixCode& c, Fn&& f) {
  SubcodeMap s{c, {}};
  c.for_each_codeword([&](const Matrix& a) { s.pairs.emplace_back(a, f(a)); });
  return s;
}

struct ExtensionResult {
  std::optional<BilinearMap> extension;
  std::uint64_t candidates = 0;  // structured (U, V[, transpose]) triples examined
};

/// Searches the structured normal forms of the kind (as parametrized pairs, not deduplicated)
/// for one agreeing with f on every codeword. Examines the whole family when none exists.
inline ExtensionResult extension_search(const SubcodeMap& f, PartitionKind kind) {
  require_preserver_kind(kind);
  const auto& field = f.domain.field();
  const std::size_t n = f.domain.rows(), m = f.domain.cols();
  const auto gl_n = general_linear_group(field, n);
  std::vector<Matrix> right;
  if (kind == PartitionKind::rowspace)
    right = {Matrix::identity(field, m)};
  else
    right = kind == PartitionKind::pivot ? upper_triangular_group(field, m) : general_linear_group(field, m);
  const bool with_transpose = kind == PartitionKind::rank && n == m;
  ExtensionResult r;
  for (auto& u : gl_n)
    for (auto& v : right)
      for (int t = 0; t <= (with_transpose ? 1 : 0); ++t) {
        ++r.candidates;
        const BilinearMap cand{u, v, t == 1};
        bool ok = true;
        for (const auto& [a, img] : f.pairs)
          if (!(cand.apply(a) == img)) {
            ok = false;
            break;
          }
        if (ok && !r.extension) r.extension = cand;
      }
  return r;
}

/// C = {(A | 0)} in F_2^{2 x 3} with f(A | 0) = (A^T | 0).
inline SubcodeMap not_extendable_rank_example() {
  const auto f = make_field(2, 1);
  const auto c = pad_code(MatrixCode::full(f, 2, 2), 1, PadMode::zero_pad);
  return subcode_map(c, [&](const Matrix& a) {
    Matrix b = a;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) b.set(i, j, a.at(j, i));
    return b;
  });
}

/// C = F_2[P] in F_2^{3 x 3}, P the companion of x^3 + x + 1, with f(A) = A^T.
inline SubcodeMap not_extendable_pivot_example() {
  const auto f = make_field(2, 1);
  return subcode_map(mrd_field_embedding(f, 3), [](const Matrix& a) { return a.transposed(); });
}

}  // namespace qpart
