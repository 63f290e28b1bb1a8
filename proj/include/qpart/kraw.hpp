#pragma once

// Partitions of F^{n x m} (rank, row space, pivots, reverse pivots), their
// Krawtchouk coefficients in closed form and as exact character sums, dual
// partitions, and the MacWilliams transform.

#include <algorithm>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "qpart/budget.hpp"
#include "qpart/cyclotomic.hpp"
#include "qpart/ferrers.hpp"
#include "qpart/lattice.hpp"
#include "qpart/laurent.hpp"
#include "qpart/matgf.hpp"

namespace qpart {

enum class PartitionKind { rank, rowspace, pivot, rpivot };

inline std::string to_string(PartitionKind k) {
  switch (k) {
    case PartitionKind::rank: return "rank";
    case PartitionKind::rowspace: return "rowspace";
    case PartitionKind::pivot: return "pivot";
    case PartitionKind::rpivot: return "rpivot";
  }
  return "?";
}

inline PartitionKind parse_partition_kind(const std::string& s) {
  if (s == "rank" || s == "rk") return PartitionKind::rank;
  if (s == "rowspace" || s == "rs") return PartitionKind::rowspace;
  if (s == "pivot" || s == "piv") return PartitionKind::pivot;
  if (s == "rpivot" || s == "rpiv") return PartitionKind::rpivot;
  throw ParseError("unknown partition kind '" + s + "'");
}

/// rank and row-space partitions are self-dual; pivots and reverse pivots are dual to each other.
inline PartitionKind dual_kind(PartitionKind k) {
  switch (k) {
    case PartitionKind::pivot: return PartitionKind::rpivot;
    case PartitionKind::rpivot: return PartitionKind::pivot;
    default: return k;
  }
}

struct RankLabel {
  unsigned r = 0;
  auto operator<=>(const RankLabel&) const = default;
};
struct PivotLabel {
  PivotList l;
  auto operator<=>(const PivotLabel&) const = default;
};
struct RPivotLabel {
  PivotList l;
  auto operator<=>(const RPivotLabel&) const = default;
};

using PartitionLabel = std::variant<RankLabel, Subspace, PivotLabel, RPivotLabel>;

inline PartitionKind kind_of(const PartitionLabel& l) { return static_cast<PartitionKind>(l.index()); }

inline std::string to_string(const PartitionLabel& l) {
  struct V {
    std::string operator()(const RankLabel& x) const { return "rk=" + std::to_string(x.r); }
    std::string operator()(const Subspace& x) const { return "rs=" + x.to_string(); }
    std::string operator()(const PivotLabel& x) const { return "piv=" + x.l.to_string(); }
    std::string operator()(const RPivotLabel& x) const { return "rpiv=" + x.l.to_string(); }
  };
  return std::visit(V{}, l);
}

inline PartitionLabel label_of(PartitionKind kind, const Matrix& a) {
  switch (kind) {
    case PartitionKind::rank: return RankLabel{static_cast<unsigned>(rank(a))};
    case PartitionKind::rowspace: return row_space(a);
    case PartitionKind::pivot: return PivotLabel{piv(a)};
    case PartitionKind::rpivot: return RPivotLabel{rpiv(a)};
  }
  throw InternalError("bad partition kind");
}

/// Labels of all nonempty blocks of the partition of F^{n x m}, in label order.
inline std::vector<PartitionLabel> all_labels(PartitionKind kind, const FieldCtx& f, std::size_t n, std::size_t m) {
  std::vector<PartitionLabel> out;
  switch (kind) {
    case PartitionKind::rank:
      for (unsigned r = 0; r <= std::min(n, m); ++r) out.emplace_back(RankLabel{r});
      break;
    case PartitionKind::rowspace:
      for (auto& u : subspaces(f, m))
        if (u.dim() <= n) out.emplace_back(u);
      break;
    case PartitionKind::pivot:
    case PartitionKind::rpivot:
      for (auto& l : all_pivot_lists(static_cast<unsigned>(m))) {
        if (l.size() > n) continue;
        if (kind == PartitionKind::pivot)
          out.emplace_back(PivotLabel{l});
        else
          out.emplace_back(RPivotLabel{l});
      }
      break;
  }
  return out;
}

/// |P^piv_mu| = q^{c(mu)} prod_{i<r} (q^n - q^i), c(mu) = sum (m - mu_i - r + i).
inline BigInt pivot_block_size(const PivotList& mu, const BigInt& q, long n) {
  return ipow(q, rref_free_entries(mu)) * falling_q_product(q, n, mu.size());
}

/// |P^rk_r| = [m, r] prod_{i<r} (q^n - q^i).
inline BigInt rank_block_size(unsigned r, const BigInt& q, long n, long m) {
  return gaussian_binomial_at(m, r, q) * falling_q_product(q, n, r);
}

inline BigInt block_size(const PartitionLabel& label, const BigInt& q, long n, long m) {
  if (auto* r = std::get_if<RankLabel>(&label)) return rank_block_size(r->r, q, n, m);
  if (auto* u = std::get_if<Subspace>(&label)) return falling_q_product(q, n, static_cast<long>(u->dim()));
  if (auto* p = std::get_if<PivotLabel>(&label)) return pivot_block_size(p->l, q, n);
  return pivot_block_size(std::get<RPivotLabel>(label).l.reversed(), q, n);
}

/// A fixed matrix of F^{n x m} lying in the given block.
inline Matrix representative(const PartitionLabel& label, const FieldCtx& f, std::size_t n, std::size_t m) {
  Matrix a(f, n, m);
  auto unit_rows = [&](const PivotList& l) {
    const auto idx = l.indices();
    if (idx.size() > n) throw InvalidArgument("pivot list longer than the row count");
    for (std::size_t i = 0; i < idx.size(); ++i) a.set(i, idx[i] - 1, f->one());
  };
  if (auto* r = std::get_if<RankLabel>(&label)) {
    if (r->r > std::min(n, m)) throw InvalidArgument("rank above min(n, m)");
    for (std::size_t i = 0; i < r->r; ++i) a.set(i, i, f->one());
  } else if (auto* u = std::get_if<Subspace>(&label)) {
    if (u->dim() > n || u->ambient() != m) throw InvalidArgument("subspace does not fit the matrix shape");
    for (std::size_t i = 0; i < u->dim(); ++i)
      for (std::size_t j = 0; j < m; ++j) a.set(i, j, u->basis().at(i, j));
  } else if (auto* p = std::get_if<PivotLabel>(&label)) {
    unit_rows(p->l);
  } else {
    unit_rows(std::get<RPivotLabel>(label).l);
  }
  return a;
}

// ---------------------------------------------------------------------------
// Closed forms, as polynomials in q (n fixed) and evaluated.

/// K(P^rk; r, s) = sum_i (-1)^{r-i} q^{ni + C(r-i,2)} [m-i, m-r] [m-s, i].
inline LaurentPoly kraw_rank_poly(long r, long s, long n, long m) {
  LaurentPoly k;
  for (long i = 0; i <= std::min(r, m); ++i) {
    const long d = r - i;
    k += LaurentPoly::monomial(n * i + binom2(d), d % 2 == 0 ? 1 : -1) * gaussian_binomial(m - i, m - r) * gaussian_binomial(m - s, i);
  }
  return k;
}

inline BigInt kraw_rank(long r, long s, const BigInt& q, long n, long m) { return kraw_rank_poly(r, s, n, m).evaluate(q); }

/// sum_t (-1)^{u-t} q^{nt + C(u-t,2)} [k, t] with u = dim U and k = dim(U ∩ V^⊥).
inline LaurentPoly kraw_rowspace_poly(long u, long k, long n) {
  LaurentPoly r;
  for (long t = 0; t <= std::min(u, k); ++t) {
    const long d = u - t;
    r += LaurentPoly::monomial(n * t + binom2(d), d % 2 == 0 ? 1 : -1) * gaussian_binomial(k, t);
  }
  return r;
}

inline BigInt kraw_rowspace(const Subspace& u, const Subspace& v, long n) {
  if (u.ambient() != v.ambient()) throw ShapeMismatch("subspaces of different ambient spaces");
  const auto k = u.intersect(v.dual()).dim();
  return kraw_rowspace_poly(static_cast<long>(u.dim()), static_cast<long>(k), n).evaluate(u.field()->q());
}

/// Ingredients of the pivot Krawtchouk coefficient for (lambda, mu).
struct PivotKrawtchoukData {
  FerrersBoard board;  // z_j = |{i : lambda_{alpha_i} < mu_{beta_j}}|, alpha over lambda \ mu, beta over mu \ lambda
  unsigned x = 0;      // |lambda \ mu|
  unsigned w = 0;      // free RREF entries of piv lambda outside the board: c(lambda) - |F|
  LaurentPoly literal;    // sum_t (-1)^{a-t} q^{nt + C(a-t,2)} sum_r P_r(F) [x - r, t]
  LaurentPoly corrected;  // q^w * literal
};

inline PivotKrawtchoukData kraw_pivot_data(const PivotList& lambda, const PivotList& mu, long n) {
  if (lambda.width() != mu.width()) throw InvalidArgument("pivot lists over different widths");
  const auto a = static_cast<long>(lambda.size());
  const auto lam_minus = lambda.minus(mu).indices();
  const auto mu_minus = mu.minus(lambda).indices();
  PivotKrawtchoukData d;
  d.x = static_cast<unsigned>(lam_minus.size());
  std::vector<unsigned> z;
  for (auto mb : mu_minus) {
    unsigned c = 0;
    for (auto la : lam_minus)
      if (la < mb) ++c;
    z.push_back(c);
  }
  d.board = FerrersBoard(std::move(z));
  d.w = rref_free_entries(lambda) - d.board.cells();
  std::vector<LaurentPoly> p(d.x + 1);
  for (unsigned r = 0; r <= d.x; ++r) p[r] = rank_dist(d.board, r);
  for (long t = 0; t <= static_cast<long>(d.x); ++t) {
    LaurentPoly inner;
    for (long r = 0; r <= static_cast<long>(d.x) - t; ++r) inner += p[r] * gaussian_binomial(d.x - r, t);
    const long e = a - t;
    d.literal += LaurentPoly::monomial(n * t + binom2(e), e % 2 == 0 ? 1 : -1) * inner;
  }
  d.corrected = d.literal.shifted(d.w);
  return d;
}

inline BigInt kraw_pivot(const PivotList& lambda, const PivotList& mu, const BigInt& q, long n) {
  return kraw_pivot_data(lambda, mu, n).corrected.evaluate(q);
}

/// K(P^rpiv; lambda, mu) = K(P^piv; rev lambda, rev mu): right multiplication by the
/// column reversal preserves the trace product and swaps the two partitions.
inline BigInt kraw_rpivot(const PivotList& lambda, const PivotList& mu, const BigInt& q, long n) {
  return kraw_pivot(lambda.reversed(), mu.reversed(), q, n);
}

/// K(P; i, j) for block i of P and block j of the dual partition.
inline BigInt krawtchouk(const PartitionLabel& i, const PartitionLabel& j, const BigInt& q, long n, long m) {
  if (kind_of(j) != dual_kind(kind_of(i))) throw InvalidArgument("column label is not a block of the dual partition");
  switch (kind_of(i)) {
    case PartitionKind::rank: return kraw_rank(std::get<RankLabel>(i).r, std::get<RankLabel>(j).r, q, n, m);
    case PartitionKind::rowspace: return kraw_rowspace(std::get<Subspace>(i), std::get<Subspace>(j), n);
    case PartitionKind::pivot: return kraw_pivot(std::get<PivotLabel>(i).l, std::get<RPivotLabel>(j).l, q, n);
    case PartitionKind::rpivot: return kraw_rpivot(std::get<RPivotLabel>(i).l, std::get<PivotLabel>(j).l, q, n);
  }
  throw InternalError("bad partition kind");
}

// ---------------------------------------------------------------------------
// Character sums.

/// sum_t counts[t] zeta^t
inline CycInt cyc_from_counts(unsigned p, const std::vector<std::uint64_t>& counts) {
  CycInt c(p);
  for (unsigned t = 0; t < counts.size(); ++t)
    if (counts[t]) c.add_root_power(t, counts[t]);
  return c;
}

/// The ambient space F^{n x m} with every matrix labelled by its block of one partition.
class CharacterOracle {
 public:
  CharacterOracle(FieldCtx f, std::size_t n, std::size_t m, PartitionKind kind) : f_(std::move(f)), n_(n), m_(m), kind_(kind) {
    const auto total = ambient_size(f_, n, m);
    require_budget(total);
    entries_.resize(total * n * m);
    std::map<PartitionLabel, std::size_t> index;
    std::vector<PartitionLabel> found;
    std::vector<std::size_t> raw(total);
    for (std::uint64_t i = 0; i < total; ++i) {
      const Matrix a = matrix_from_index(f_, n, m, i);
      for (std::size_t t = 0; t < n * m; ++t) entries_[i * n * m + t] = a.data()[t].value;
      auto [it, inserted] = index.try_emplace(label_of(kind, a), found.size());
      if (inserted) found.push_back(it->first);
      raw[i] = it->second;
    }
    // Renumber blocks in label order.
    labels_.clear();
    std::vector<std::size_t> remap(found.size());
    std::size_t k = 0;
    for (auto& [label, old] : index) {
      labels_.push_back(label);
      remap[old] = k++;
    }
    block_.resize(total);
    for (std::uint64_t i = 0; i < total; ++i) block_[i] = remap[raw[i]];
  }

  const FieldCtx& field() const { return f_; }
  std::size_t rows() const { return n_; }
  std::size_t cols() const { return m_; }
  PartitionKind kind() const { return kind_; }
  std::uint64_t size() const { return block_.size(); }
  const std::vector<PartitionLabel>& labels() const { return labels_; }
  std::size_t block_of(std::uint64_t index) const { return block_[index]; }

  std::size_t block_index(const PartitionLabel& l) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
    if (it == labels_.end() || !(*it == l)) throw InvalidArgument("label " + to_string(l) + " is not a block of this partition");
    return static_cast<std::size_t>(it - labels_.begin());
  }

  /// Tr(<A_index, B>) in GF(p).
  unsigned trace_with(std::uint64_t index, const std::vector<std::uint32_t>& b) const {
    const auto& f = *f_;
    Elem s = f.zero();
    const std::size_t nm = n_ * m_;
    const std::uint32_t* a = &entries_[index * nm];
    for (std::size_t t = 0; t < nm; ++t)
      if (a[t] && b[t]) s = f.add(s, f.mul(Elem{a[t]}, Elem{b[t]}));
    return f.trace(s);
  }

  /// Per block i, counts[i][t] = |{A in P_i : Tr<A, B> = t}|.
  std::vector<std::vector<std::uint64_t>> trace_counts(const Matrix& b) const {
    check(b);
    std::vector<std::uint32_t> bv(b.data().size());
    for (std::size_t t = 0; t < bv.size(); ++t) bv[t] = b.data()[t].value;
    std::vector<std::vector<std::uint64_t>> counts(labels_.size(), std::vector<std::uint64_t>(f_->p()));
    for (std::uint64_t i = 0; i < block_.size(); ++i) ++counts[block_[i]][trace_with(i, bv)];
    return counts;
  }

  /// Character sums of every block against B, in label order.
  std::vector<CycInt> sums(const Matrix& b) const {
    std::vector<CycInt> out;
    for (auto& c : trace_counts(b)) out.push_back(cyc_from_counts(f_->p(), c));
    return out;
  }

  CycInt sum(const PartitionLabel& block, const Matrix& b) const { return sums(b)[block_index(block)]; }

 private:
  void check(const Matrix& b) const {
    require_same_field(f_, b.field());
    if (b.rows() != n_ || b.cols() != m_) throw ShapeMismatch("character sum against " + b.shape());
  }

  FieldCtx f_;
  std::size_t n_, m_;
  PartitionKind kind_;
  std::vector<std::uint32_t> entries_;
  std::vector<PartitionLabel> labels_;
  std::vector<std::size_t> block_;
};

/// sum over A in the block of zeta_p^{Tr <A, B>}, by enumerating F^{n x m} where n x m is the shape of B.
inline CycInt char_sum(const PartitionLabel& block, const Matrix& b) {
  const auto& f = b.field();
  const auto total = ambient_size(f, b.rows(), b.cols());
  require_budget(total);
  std::vector<std::uint64_t> counts(f->p());
  const auto kind = kind_of(block);
  for_each_matrix(f, b.rows(), b.cols(), [&](const Matrix& a) {
    if (label_of(kind, a) == block) ++counts[f->trace(trace_product(a, b))];
  });
  return cyc_from_counts(f->p(), counts);
}

// ---------------------------------------------------------------------------
// Partitions of the ambient space as sets of matrix indices.

struct Partition {
  std::vector<std::vector<std::uint64_t>> blocks;  // each sorted; blocks sorted by first element

  void normalize() {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::erase_if(blocks, [](const auto& b) { return b.empty(); });
    std::sort(blocks.begin(), blocks.end());
  }
  bool operator==(const Partition&) const = default;
};

inline Partition partition_of(PartitionKind kind, const FieldCtx& f, std::size_t n, std::size_t m) {
  CharacterOracle o(f, n, m, kind);
  Partition p;
  p.blocks.resize(o.labels().size());
  for (std::uint64_t i = 0; i < o.size(); ++i) p.blocks[o.block_of(i)].push_back(i);
  p.normalize();
  return p;
}

/// Dual of an arbitrary partition of F^{n x m}: B ~ B' iff every block has the same character sum.
inline Partition dual_partition(const Partition& p, const FieldCtx& f, std::size_t n, std::size_t m) {
  const auto total = ambient_size(f, n, m);
  require_budget(total > 0 && total > enumeration_budget() / total ? std::numeric_limits<std::uint64_t>::max() : total * total);
  std::vector<std::size_t> block(total);
  for (std::size_t k = 0; k < p.blocks.size(); ++k)
    for (auto i : p.blocks[k]) {
      if (i >= total) throw InvalidArgument("partition index outside the ambient space");
      block[i] = k;
    }
  std::vector<std::vector<std::uint32_t>> entries(total);
  for (std::uint64_t i = 0; i < total; ++i) {
    const Matrix a = matrix_from_index(f, n, m, i);
    for (auto e : a.data()) entries[i].push_back(e.value);
  }
  std::map<std::vector<CycInt>, std::vector<std::uint64_t>> groups;
  std::vector<std::vector<std::uint64_t>> counts(p.blocks.size(), std::vector<std::uint64_t>(f->p()));
  for (std::uint64_t b = 0; b < total; ++b) {
    for (auto& c : counts) std::fill(c.begin(), c.end(), 0);
    for (std::uint64_t a = 0; a < total; ++a) {
      Elem s = f->zero();
      for (std::size_t t = 0; t < n * m; ++t) s = f->add(s, f->mul(Elem{entries[a][t]}, Elem{entries[b][t]}));
      ++counts[block[a]][f->trace(s)];
    }
    std::vector<CycInt> key;
    for (auto& c : counts) key.push_back(cyc_from_counts(f->p(), c));
    groups[std::move(key)].push_back(b);
  }
  Partition out;
  for (auto& [k, v] : groups) out.blocks.push_back(std::move(v));
  out.normalize();
  return out;
}

inline Partition dual_partition(PartitionKind kind, const FieldCtx& f, std::size_t n, std::size_t m) {
  return dual_partition(partition_of(kind, f, n, m), f, n, m);
}

// ---------------------------------------------------------------------------
// Distributions and the MacWilliams transform.

/// Block counts; zero counts are never stored.
class Distribution {
 public:
  void add(const PartitionLabel& l, const BigInt& c = 1) {
    if (c == 0) return;
    auto [it, inserted] = counts_.try_emplace(l, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) counts_.erase(it);
    }
  }
  BigInt at(const PartitionLabel& l) const {
    auto it = counts_.find(l);
    return it == counts_.end() ? BigInt(0) : it->second;
  }
  BigInt total() const {
    BigInt s = 0;
    for (auto& [l, c] : counts_) s += c;
    return s;
  }
  const std::map<PartitionLabel, BigInt>& entries() const& { return counts_; }
  std::map<PartitionLabel, BigInt> entries() && { return std::move(counts_); }
  bool operator==(const Distribution&) const = default;

 private:
  std::map<PartitionLabel, BigInt> counts_;
};

/// K(P; i, j) for all blocks i of P (rows) and j of the dual partition (columns), from the closed forms.
class KrawtchoukTable {
 public:
  KrawtchoukTable(PartitionKind kind, const FieldCtx& f, std::size_t n, std::size_t m)
      : kind_(kind), rows_(all_labels(kind, f, n, m)), cols_(all_labels(dual_kind(kind), f, n, m)) {
    values_.assign(rows_.size(), std::vector<BigInt>(cols_.size()));
    const BigInt q = f->q();
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (std::size_t j = 0; j < cols_.size(); ++j)
        values_[i][j] = krawtchouk(rows_[i], cols_[j], q, static_cast<long>(n), static_cast<long>(m));
  }

  /// Shared, lazily built table per (kind, field, n, m).
  static const KrawtchoukTable& cached(PartitionKind kind, const FieldCtx& f, std::size_t n, std::size_t m) {
    static std::mutex mu;
    static std::map<std::tuple<int, std::string, std::size_t, std::size_t>, std::unique_ptr<KrawtchoukTable>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[{static_cast<int>(kind), f->name(), n, m}];
    if (!slot) slot = std::make_unique<KrawtchoukTable>(kind, f, n, m);
    return *slot;
  }

  PartitionKind kind() const { return kind_; }
  const std::vector<PartitionLabel>& row_labels() const { return rows_; }
  const std::vector<PartitionLabel>& col_labels() const { return cols_; }
  const BigInt& at(std::size_t i, std::size_t j) const { return values_[i][j]; }

  std::size_t row_index(const PartitionLabel& l) const { return find(rows_, l); }
  std::size_t col_index(const PartitionLabel& l) const { return find(cols_, l); }

 private:
  static std::size_t find(const std::vector<PartitionLabel>& v, const PartitionLabel& l) {
    auto it = std::lower_bound(v.begin(), v.end(), l);
    if (it == v.end() || !(*it == l)) throw InvalidArgument("label " + to_string(l) + " not in Krawtchouk table");
    return static_cast<std::size_t>(it - v.begin());
  }

  PartitionKind kind_;
  std::vector<PartitionLabel> rows_, cols_;
  std::vector<std::vector<BigInt>> values_;
};

/// Q(C^⊥, j) = (1/|C|) sum_i K(Q; j, i) P(C, i), where dist is the P-distribution of C
/// and Q is the dual partition (rank <-> rank, rs <-> rs, piv <-> rpiv).
inline Distribution macwilliams_transform(const Distribution& dist, const BigInt& code_size, PartitionKind kind, const FieldCtx& f,
                                          std::size_t n, std::size_t m) {
  if (code_size <= 0) throw InvalidArgument("code size must be positive");
  const auto& table = KrawtchoukTable::cached(dual_kind(kind), f, n, m);
  Distribution out;
  for (std::size_t j = 0; j < table.row_labels().size(); ++j) {
    BigInt s = 0;
    for (const auto& [label, count] : dist.entries()) {
      if (kind_of(label) != kind) throw InvalidArgument("distribution label " + to_string(label) + " is not of kind " + to_string(kind));
      s += table.at(j, table.col_index(label)) * count;
    }
    if (s % code_size != 0) throw NonIntegerResult();
    out.add(table.row_labels()[j], s / code_size);
  }
  return out;
}

// ---------------------------------------------------------------------------
// The matrix form P^rs(C^⊥) = (1/|C|) P^rs(C) M with M = A diag(q^{n dim U^⊥}) B^{-1}.

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Exact inverse by Gauss-Jordan elimination; throws InvalidArgument if singular.
inline RationalMatrix rational_inverse(RationalMatrix a) {
  const std::size_t n = a.size();
  RationalMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && a[sel][col] == 0) ++sel;
    if (sel == n) throw InvalidArgument("singular rational matrix");
    std::swap(a[sel], a[col]);
    std::swap(inv[sel], inv[col]);
    const Rational s = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= s;
      inv[col][j] /= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      const Rational c = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= c * a[col][j];
        inv[i][j] -= c * inv[col][j];
      }
    }
  }
  return inv;
}

inline RationalMatrix rational_product(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RationalMatrix r(n, std::vector<Rational>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

struct MacWilliamsMatrices {
  std::vector<Subspace> lattice;  // row/column order of every matrix below
  RationalMatrix a, b, d, b_inv, m;
  bool b_inv_matches_moebius = false;
};

inline MacWilliamsMatrices macwilliams_matrices(const FieldCtx& f, std::size_t n, std::size_t m) {
  MacWilliamsMatrices r;
  r.lattice = subspaces(f, m);
  const std::size_t big_n = r.lattice.size();
  const BigInt q = f->q();
  std::map<Subspace, std::size_t> pos;
  for (std::size_t i = 0; i < big_n; ++i) pos[r.lattice[i]] = i;
  std::vector<Subspace> perp;
  for (auto& u : r.lattice) perp.push_back(u.dual());

  auto zero = [&] { return RationalMatrix(big_n, std::vector<Rational>(big_n)); };
  r.a = zero();
  r.b = zero();
  r.d = zero();
  RationalMatrix scale = zero(), moebius_inv = zero();
  for (std::size_t i = 0; i < big_n; ++i) {
    const auto& v = r.lattice[i];
    for (std::size_t j = 0; j < big_n; ++j) {
      if (v.is_subspace_of(r.lattice[j])) r.a[i][j] = 1;
      if (v.is_subspace_of(perp[j])) r.b[i][j] = 1;
      // B^{-1}(U, V) = mu(U^⊥, V)
      if (perp[i].is_subspace_of(r.lattice[j]))
        moebius_inv[i][j] = Rational(moebius_interval(static_cast<long>(perp[i].dim()), static_cast<long>(r.lattice[j].dim())).evaluate(q));
    }
    const auto e = ipow(q, static_cast<unsigned>(n * perp[i].dim()));
    r.d[i][i] = Rational(BigInt(1), e);
    scale[i][i] = Rational(e);
  }
  r.b_inv = rational_inverse(r.b);
  r.b_inv_matches_moebius = r.b_inv == moebius_inv;
  r.m = rational_product(rational_product(r.a, scale), r.b_inv);
  return r;
}

}  // namespace qpart
