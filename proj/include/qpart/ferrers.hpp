#pragma once

// Ferrers boards: rank distributions of matrices supported on a board,
// q-rook polynomials, and the identities tying them together.

#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "qpart/budget.hpp"
#include "qpart/lattice.hpp"
#include "qpart/laurent.hpp"
#include "qpart/matgf.hpp"

namespace qpart {

/// Column heights c_1 <= ... <= c_m of a top- and right-aligned board.
class FerrersBoard {
 public:
  FerrersBoard() = default;
  explicit FerrersBoard(std::vector<unsigned> cols) : cols_(std::move(cols)) {
    for (std::size_t j = 1; j < cols_.size(); ++j)
      if (cols_[j] < cols_[j - 1]) throw NonMonotone();
  }

  /// Parses "1,2,4,4,5". An empty string is the board with no columns.
  static FerrersBoard parse(const std::string& s) {
    std::vector<unsigned> cols;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) throw ParseError("empty column height in board literal '" + s + "'");
      std::size_t used = 0;
      long v = 0;
      try {
        v = std::stol(tok, &used);
      } catch (const std::exception&) {
        throw ParseError("bad column height '" + tok + "'");
      }
      if (used != tok.size()) throw ParseError("bad column height '" + tok + "'");
      if (v < 0) throw NonMonotone();
      cols.push_back(static_cast<unsigned>(v));
    }
    return FerrersBoard(std::move(cols));
  }

  const std::vector<unsigned>& cols() const { return cols_; }
  std::size_t width() const { return cols_.size(); }
  /// c_m, the number of nonempty rows (0 for an empty board).
  unsigned height() const { return cols_.empty() ? 0 : cols_.back(); }
  unsigned col(std::size_t j) const { return cols_[j - 1]; }  // 1-based

  unsigned cells() const {
    unsigned s = 0;
    for (auto c : cols_) s += c;
    return s;
  }

  /// Rows are numbered from the top; column j holds rows 1..c_j.
  bool contains(unsigned row, unsigned col) const { return col >= 1 && col <= cols_.size() && row >= 1 && row <= cols_[col - 1]; }

  /// The board without its last column.
  FerrersBoard without_last() const {
    return FerrersBoard(std::vector<unsigned>(cols_.begin(), cols_.end() - (cols_.empty() ? 0 : 1)));
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t j = 0; j < cols_.size(); ++j) s += (j ? "," : "") + std::to_string(cols_[j]);
    return s;
  }

  bool operator==(const FerrersBoard&) const = default;

 private:
  std::vector<unsigned> cols_;
};

inline FerrersBoard board_new(std::vector<unsigned> cols) { return FerrersBoard(std::move(cols)); }

namespace detail {

// Calls fn(i) for each increasing r-tuple i of [m] (1-based), lexicographically.
template <class Fn>
void for_each_increasing_tuple(unsigned r, unsigned m, Fn&& fn) {
  if (r > m) return;
  std::vector<unsigned> i(r);
  for (unsigned j = 0; j < r; ++j) i[j] = j + 1;
  while (true) {
    fn(static_cast<const std::vector<unsigned>&>(i));
    int k = static_cast<int>(r) - 1;
    while (k >= 0 && i[k] == m - r + static_cast<unsigned>(k) + 1) --k;
    if (k < 0) return;
    ++i[k];
    for (unsigned j = static_cast<unsigned>(k) + 1; j < r; ++j) i[j] = i[j - 1] + 1;
  }
}

}  // namespace detail

/// P_r(F) = sum over increasing i in [m]^r of q^{rm - |i|} prod_j (q^{c_{i_j} - j + 1} - 1).
inline LaurentPoly rank_dist(const FerrersBoard& f, unsigned r) {
  const auto m = static_cast<unsigned>(f.width());
  if (r == 0) return LaurentPoly(1);
  LaurentPoly total;
  detail::for_each_increasing_tuple(r, m, [&](const std::vector<unsigned>& i) {
    long len = 0;
    for (auto x : i) len += x;
    LaurentPoly term = LaurentPoly::monomial(static_cast<long>(r) * m - len);
    for (unsigned j = 1; j <= r; ++j) term *= q_power_diff(static_cast<long>(f.col(i[j - 1])) - j + 1, 0);
    total += term;
  });
  return total;
}

/// P_r via the last-column recursion
/// P_r(c_1..c_m) = P_{r-1}(c_1..c_{m-1}) (q^{c_m} - q^{r-1}) + P_r(c_1..c_{m-1}) q^r.
inline LaurentPoly rank_dist_recursive(const FerrersBoard& f, unsigned r) {
  if (r == 0) return LaurentPoly(1);
  const auto m = f.width();
  if (m == 0) return LaurentPoly();
  if (m == 1) return r == 1 ? q_power_diff(f.col(1), 0) : LaurentPoly();
  const auto prefix = f.without_last();
  return rank_dist_recursive(prefix, r - 1) * q_power_diff(f.col(m), static_cast<long>(r) - 1) +
         rank_dist_recursive(prefix, r).shifted(r);
}

/// deg P_r(F) from the index set I_{r,m}(F) = {i : c_{i_j} != j - 1 for all j};
/// LaurentPoly::kMinusInfinity when that set is empty.
inline long rank_dist_degree(const FerrersBoard& f, unsigned r) {
  const auto m = static_cast<unsigned>(f.width());
  if (r == 0) return 0;
  bool any = false;
  long best = 0;
  detail::for_each_increasing_tuple(r, m, [&](const std::vector<unsigned>& i) {
    long s = 0;
    for (unsigned j = 1; j <= r; ++j) {
      if (f.col(i[j - 1]) == j - 1) return;
      s += static_cast<long>(f.col(i[j - 1])) - static_cast<long>(i[j - 1]);
    }
    if (!any || s > best) best = s;
    any = true;
  });
  if (!any) return LaurentPoly::kMinusInfinity;
  return static_cast<long>(r) * m - binom2(r) + best;
}

/// A placement of non-attacking rooks, one (row, col) pair per rook, 1-based.
using RookPlacement = std::vector<std::pair<unsigned, unsigned>>;

/// inv(C, F): cells of F neither holding a rook, nor above a rook in its column,
/// nor to the right of a rook in its row.
inline unsigned rook_inversions(const FerrersBoard& f, const RookPlacement& rooks) {
  unsigned count = 0;
  for (unsigned j = 1; j <= f.width(); ++j)
    for (unsigned i = 1; i <= f.col(j); ++i) {
      bool crossed = false;
      for (auto [ri, rj] : rooks) {
        if ((ri == i && rj == j) || (rj == j && ri > i) || (ri == i && rj < j)) {
          crossed = true;
          break;
        }
      }
      if (!crossed) ++count;
    }
  return count;
}

/// Every placement of r non-attacking rooks on F (columns left to right).
inline std::vector<RookPlacement> rook_placements(const FerrersBoard& f, unsigned r) {
  std::vector<RookPlacement> out;
  RookPlacement cur;
  std::vector<bool> row_used(f.height() + 1, false);
  std::uint64_t visited = 0;
  const auto m = static_cast<unsigned>(f.width());
  auto rec = [&](auto&& self, unsigned col) -> void {
    if (++visited > enumeration_budget()) throw BudgetExceeded(visited, enumeration_budget());
    if (cur.size() == r) {
      out.push_back(cur);
      return;
    }
    if (col > m || (m - col + 1) < r - cur.size()) return;
    self(self, col + 1);
    for (unsigned i = 1; i <= f.col(col); ++i) {
      if (row_used[i]) continue;
      row_used[i] = true;
      cur.emplace_back(i, col);
      self(self, col + 1);
      cur.pop_back();
      row_used[i] = false;
    }
  };
  rec(rec, 1);
  return out;
}

/// R_r(F) = sum over placements of q^{inv(C, F)}.
inline LaurentPoly rook_poly_enum(const FerrersBoard& f, unsigned r) {
  LaurentPoly p;
  for (const auto& c : rook_placements(f, r)) p.add_term(rook_inversions(f, c), 1);
  return p;
}

/// Closed form q^{|F| - rm} sum_i prod_j (q^{i_j + j - c_{i_j} - 1} - q^{i_j}) / (1 - q)^r.
inline LaurentPoly rook_poly_closed(const FerrersBoard& f, unsigned r) {
  const auto m = static_cast<unsigned>(f.width());
  LaurentPoly num;
  if (r == 0) num = LaurentPoly(1);
  detail::for_each_increasing_tuple(r, m, [&](const std::vector<unsigned>& i) {
    if (r == 0) return;
    LaurentPoly term(1);
    for (unsigned j = 1; j <= r; ++j) {
      const long ij = i[j - 1];
      term *= q_power_diff(ij + j - static_cast<long>(f.col(ij)) - 1, ij);
    }
    num += term;
  });
  num = num.shifted(static_cast<long>(f.cells()) - static_cast<long>(r) * m);
  for (unsigned k = 0; k < r; ++k) num = num.divided_by_one_minus_q();
  return num;
}

/// (q - 1)^r q^{|F| - r} R_r(F)|_{q -> 1/q}, computed from the enumerated rook polynomial.
inline LaurentPoly haglund_transform(const FerrersBoard& f, unsigned r) {
  const LaurentPoly q_minus_one = q_power_diff(1, 0);
  return q_minus_one.pow(r) * rook_poly_enum(f, r).inverted().shifted(static_cast<long>(f.cells()) - static_cast<long>(r));
}

/// q-Stirling numbers S_{m,r}: S_{m+1,r} = q^{r-1} S_{m,r-1} + [r]_q S_{m,r}, S_{0,0} = 1.
inline LaurentPoly q_stirling(long m, long r) {
  if (r < 0 || r > m || m < 0) return LaurentPoly();
  if (m == 0) return LaurentPoly(1);
  static std::mutex mu;
  static std::map<std::pair<long, long>, LaurentPoly> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find({m, r}); it != memo.end()) return it->second;
  }
  LaurentPoly q_int;  // (q^r - 1)/(q - 1)
  for (long k = 0; k < r; ++k) q_int.add_term(k, 1);
  LaurentPoly v = q_stirling(m - 1, r - 1).shifted(r - 1) + q_int * q_stirling(m - 1, r);
  std::lock_guard lock(mu);
  memo.emplace(std::pair{m, r}, v);
  return v;
}

/// Exhaustive counts of matrices supported on F by rank; index r holds |{M in F[F] : rk M = r}|.
/// Matrices are c_m x m.
inline std::vector<BigInt> brute_rank_counts(const FerrersBoard& f, const FieldCtx& field) {
  const auto rows = f.height();
  const auto m = f.width();
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (unsigned j = 1; j <= m; ++j)
    for (unsigned i = 1; i <= f.col(j); ++i) cells.emplace_back(i - 1, j - 1);
  const auto total = saturating_pow(field->q(), cells.size());
  require_budget(total);
  std::vector<BigInt> counts(std::min<std::size_t>(rows, m) + 1);
  for (std::uint64_t code = 0; code < total; ++code) {
    Matrix a(field, rows, m);
    auto c = code;
    for (auto [i, j] : cells) {
      a.set(i, j, Elem{static_cast<std::uint32_t>(c % field->q())});
      c /= field->q();
    }
    ++counts[rank(a)];
  }
  return counts;
}

inline BigInt brute_count(const FerrersBoard& f, const FieldCtx& field, unsigned r) {
  const auto counts = brute_rank_counts(f, field);
  return r < counts.size() ? counts[r] : BigInt(0);
}

/// Data of the stacked-rank count: A in RREF with pivots lambda, B the unit-row
/// matrix with pivots sigma, and the number of A with rk(A; B) = |sigma| + r.
struct StackedRankCount {
  FerrersBoard board;   // [z_1, ..., z_y] built from lambda ∩ sigma and sigma-hat \ lambda
  unsigned x = 0, y = 0;
  long board_rank = 0;  // r - |lambda| + x
  unsigned outside_free = 0;  // free RREF entries of A outside the board; they never change the rank
  LaurentPoly board_poly;     // P_{r - a + x}(F)
  LaurentPoly count;          // q^{outside_free} P_{r - a + x}(F)
};

inline StackedRankCount lab_count(const PivotList& lambda, const PivotList& sigma, unsigned r) {
  if (lambda.width() != sigma.width()) throw InvalidArgument("pivot lists over different widths");
  const auto inter = (lambda & sigma).indices();                     // lambda_{alpha_1..x}
  const auto outside = sigma.complement().minus(lambda).indices();  // sigma-hat_{beta_1..y}
  StackedRankCount out;
  out.x = static_cast<unsigned>(inter.size());
  out.y = static_cast<unsigned>(outside.size());
  std::vector<unsigned> z;
  for (auto s : outside) {
    unsigned c = 0;
    for (auto l : inter)
      if (l < s) ++c;
    z.push_back(c);
  }
  out.board = FerrersBoard(std::move(z));
  out.outside_free = rref_free_entries(lambda) - out.board.cells();
  out.board_rank = static_cast<long>(r) - static_cast<long>(lambda.size()) + out.x;
  out.board_poly = out.board_rank < 0 ? LaurentPoly() : rank_dist(out.board, static_cast<unsigned>(out.board_rank));
  out.count = out.board_poly.shifted(out.outside_free);
  return out;
}

/// Exhaustive count of the same quantity over all RREF matrices with pivots lambda.
inline BigInt lab_count_brute(const FieldCtx& field, const PivotList& lambda, const PivotList& sigma, unsigned r) {
  if (lambda.width() != sigma.width()) throw InvalidArgument("pivot lists over different widths");
  const std::size_t m = lambda.width();
  Matrix b(field, sigma.size(), m);
  std::size_t row = 0;
  for (auto j : sigma.indices()) b.set(row++, j - 1, field->one());
  BigInt count = 0;
  for (const auto& a : rref_matrices(field, lambda))
    if (rank(Matrix::stack(a, b)) == sigma.size() + r) ++count;
  return count;
}

}  // namespace qpart
