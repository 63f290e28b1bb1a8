// qpart: command-line front end for the qpart library.
//
// Exit codes: 0 success, 1 failed check or internal error, 2 usage error,
// 3 enumeration budget exceeded.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qpart_io.hpp"

namespace {

using namespace qpart;
using io::Json;
using io::Table;

constexpr std::uint64_t kDefaultSeed = 42;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Runs a parser for one flag and reports library errors against that flag.
template <class Fn>
auto parse_flag(const std::string& flag, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const BudgetExceeded&) {
    throw;
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

struct Output {
  Json doc;
  Table table;
  std::vector<std::string> notes;  // "key: value" lines printed above the table in text mode
  std::optional<std::string> raw;  // replaces the table in text mode (code files)
  bool failed = false;
};

enum class Format { text, json, csv };

struct Globals {
  Format format = Format::text;
  std::optional<std::uint64_t> budget;
  std::uint64_t seed = kDefaultSeed;
};

Json header(const std::string& command) {
  Json j;
  j["schema"] = io::kSchema;
  j["command"] = command;
  return j;
}

std::string str(const BigInt& v) { return v.str(); }

std::string degree_text(long d) {
  if (d == LaurentPoly::kMinusInfinity) return "-inf";
  return std::to_string(d);
}

Json degree_json(long d) {
  if (d == LaurentPoly::kMinusInfinity) return "-inf";
  return d;
}

// ---------------------------------------------------------------------------
// Shared flag groups.

struct Shape {
  unsigned q = 2;
  std::size_t n = 2, m = 2;

  void add(CLI::App* app) {
    app->add_option("--q", q, "field order (2, 3, 4, 5, 7, 8, 9, 11, 13, 16)")->capture_default_str();
    app->add_option("--n", n, "rows")->capture_default_str()->check(CLI::PositiveNumber);
    app->add_option("--m", m, "columns")->capture_default_str()->check(CLI::PositiveNumber);
  }
  FieldCtx field() const {
    return parse_flag("--q", [&] { return field_of_order(q); });
  }
  void require_m_le_n() const {
    if (m > n) throw UsageError("--m: the formulas assume m <= n (got m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")");
  }
};

PartitionKind kind_flag(const std::string& flag, const std::string& s) {
  return parse_flag(flag, [&] { return parse_partition_kind(s); });
}

MatrixCode code_flag(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("--file: cannot open '" + path + "'");
  return parse_flag("--file", [&] { return read_code(in); });
}

FerrersBoard board_flag(const std::string& s) {
  return parse_flag("--board", [&] { return FerrersBoard::parse(s); });
}

// ---------------------------------------------------------------------------
// kraw

struct KrawArgs {
  std::string partition;
  Shape shape;
  bool oracle = false;
};

Output run_kraw(const KrawArgs& a) {
  const auto kind = kind_flag("--partition", a.partition);
  a.shape.require_m_le_n();
  const auto f = a.shape.field();
  const auto& t = KrawtchoukTable::cached(kind, f, a.shape.n, a.shape.m);
  Output o;
  o.doc = header("kraw");
  o.doc["partition"] = to_string(kind);
  o.doc["dual_partition"] = to_string(dual_kind(kind));
  o.doc["q"] = a.shape.q;
  o.doc["n"] = a.shape.n;
  o.doc["m"] = a.shape.m;
  Json rows = Json::array(), cols = Json::array(), values = Json::array();
  o.table.header.push_back("K");
  for (const auto& l : t.col_labels()) {
    cols.push_back(io::to_json(l));
    o.table.header.push_back(to_string(l));
  }
  for (std::size_t i = 0; i < t.row_labels().size(); ++i) {
    rows.push_back(io::to_json(t.row_labels()[i]));
    Json row = Json::array();
    std::vector<std::string> cells{to_string(t.row_labels()[i])};
    for (std::size_t j = 0; j < t.col_labels().size(); ++j) {
      row.push_back(io::to_json(t.at(i, j)));
      cells.push_back(str(t.at(i, j)));
    }
    values.push_back(std::move(row));
    o.table.rows.push_back(std::move(cells));
  }
  o.doc["rows"] = std::move(rows);
  o.doc["cols"] = std::move(cols);
  o.doc["table"] = std::move(values);
  if (a.oracle) {
    const CharacterOracle oracle(f, a.shape.n, a.shape.m, kind);
    std::uint64_t mismatches = 0;
    for (std::size_t j = 0; j < t.col_labels().size(); ++j) {
      const auto sums = oracle.sums(representative(t.col_labels()[j], f, a.shape.n, a.shape.m));
      for (std::size_t i = 0; i < t.row_labels().size(); ++i) {
        const auto& s = sums[oracle.block_index(t.row_labels()[i])];
        if (!s.is_rational() || s.rational_value() != t.at(i, j)) ++mismatches;
      }
    }
    o.doc["oracle_mismatches"] = mismatches;
    o.notes.push_back("oracle mismatches: " + std::to_string(mismatches));
    o.failed = mismatches != 0;
  }
  return o;
}

// ---------------------------------------------------------------------------
// dualpartition

struct DualArgs {
  std::string partition;
  Shape shape;
};

Output run_dualpartition(const DualArgs& a) {
  const auto kind = kind_flag("--partition", a.partition);
  const auto f = a.shape.field();
  const auto n = a.shape.n, m = a.shape.m;
  const auto dual = dual_partition(kind, f, n, m);
  std::optional<PartitionKind> equals;
  for (auto k : {PartitionKind::rank, PartitionKind::rowspace, PartitionKind::pivot, PartitionKind::rpivot})
    if (!equals && partition_of(k, f, n, m) == dual) equals = k;
  Output o;
  o.doc = header("dualpartition");
  o.doc["partition"] = to_string(kind);
  o.doc["q"] = a.shape.q;
  o.doc["n"] = n;
  o.doc["m"] = m;
  o.doc["equals"] = equals ? Json(to_string(*equals)) : Json(nullptr);
  o.notes.push_back("blocks: " + std::to_string(dual.blocks.size()));
  o.notes.push_back("equals: " + (equals ? to_string(*equals) : std::string("none")));
  o.table.header = {"block", "size", "label", "representative"};
  Json blocks = Json::array();
  for (std::size_t i = 0; i < dual.blocks.size(); ++i) {
    const auto rep = matrix_from_index(f, n, m, dual.blocks[i].front());
    Json b;
    b["size"] = dual.blocks[i].size();
    b["representative"] = io::to_json(rep);
    std::string label_text = "-";
    if (equals) {
      const auto l = label_of(*equals, rep);
      b["label"] = io::to_json(l);
      label_text = to_string(l);
    } else {
      b["label"] = nullptr;
    }
    std::string rep_text;
    for (auto e : rep.data()) rep_text += (rep_text.empty() ? "" : " ") + std::to_string(e.value);
    o.table.rows.push_back({std::to_string(i), std::to_string(dual.blocks[i].size()), label_text, rep_text});
    blocks.push_back(std::move(b));
  }
  o.doc["blocks"] = std::move(blocks);
  return o;
}

// ---------------------------------------------------------------------------
// macwilliams

struct MacWilliamsArgs {
  std::string file, partition;
  bool verify = false;
};

void distribution_table(Output& o, const Distribution& d) {
  o.table.header = {"label", "count"};
  for (const auto& [l, c] : d.entries()) o.table.rows.push_back({to_string(l), str(c)});
}

Output run_macwilliams(const MacWilliamsArgs& a) {
  const auto kind = kind_flag("--partition", a.partition);
  const auto c = code_flag(a.file);
  if (c.cols() > c.rows()) throw UsageError("--file: the transform assumes m <= n");
  const auto dist = distribution(c, kind);
  const auto out = macwilliams_transform(dist, c.size(), kind, c.field(), c.rows(), c.cols());
  Output o;
  o.doc = header("macwilliams");
  o.doc["partition"] = to_string(kind);
  o.doc["dual_partition"] = to_string(dual_kind(kind));
  o.doc["code_size"] = io::to_json(c.size());
  o.doc["distribution"] = io::to_json(dist);
  o.doc["dual_distribution"] = io::to_json(out);
  o.notes.push_back("code size: " + str(c.size()));
  o.notes.push_back("dual distribution (" + to_string(dual_kind(kind)) + "):");
  if (a.verify) {
    const bool ok = out == distribution(c.dual(), dual_kind(kind));
    o.doc["verified"] = ok;
    o.notes.insert(o.notes.begin() + 1, std::string("verified against the enumerated dual: ") + (ok ? "yes" : "NO"));
    o.failed = !ok;
  }
  distribution_table(o, out);
  return o;
}

// ---------------------------------------------------------------------------
// ferrers

struct FerrersArgs {
  std::string board;
  std::optional<unsigned> r;
  std::optional<unsigned> q;
};

std::vector<unsigned> r_range(const FerrersBoard& b, const std::optional<unsigned>& r) {
  if (r) return {*r};
  std::vector<unsigned> out;
  for (unsigned i = 0; i <= b.width(); ++i) out.push_back(i);
  return out;
}

std::optional<BigInt> q_value(const std::optional<unsigned>& q) {
  if (!q) return std::nullopt;
  parse_flag("--q", [&] { return field_of_order(*q); });
  return BigInt(*q);
}

Output run_rankdist(const FerrersArgs& a) {
  const auto b = board_flag(a.board);
  const auto q = q_value(a.q);
  Output o;
  o.doc = header("ferrers rankdist");
  o.doc["board"] = io::to_json(b);
  o.table.header = {"r", "P_r", "degree"};
  if (q) o.table.header.push_back("value");
  Json entries = Json::array();
  for (auto r : r_range(b, a.r)) {
    const auto p = rank_dist(b, r);
    if (!(p == rank_dist_recursive(b, r))) throw InternalError("explicit formula and recursion disagree");
    Json e;
    e["r"] = r;
    e["poly"] = io::to_json(p);
    e["text"] = p.to_string();
    e["degree"] = degree_json(rank_dist_degree(b, r));
    std::vector<std::string> row{std::to_string(r), p.to_string(), degree_text(rank_dist_degree(b, r))};
    if (q) {
      e["value"] = io::to_json(p.evaluate(*q));
      row.push_back(str(p.evaluate(*q)));
    }
    entries.push_back(std::move(e));
    o.table.rows.push_back(std::move(row));
  }
  o.doc["entries"] = std::move(entries);
  return o;
}

Output run_rook(const FerrersArgs& a) {
  const auto b = board_flag(a.board);
  const auto q = q_value(a.q);
  Output o;
  o.doc = header("ferrers rook");
  o.doc["board"] = io::to_json(b);
  o.table.header = {"r", "R_r", "placements"};
  if (q) o.table.header.push_back("value");
  Json entries = Json::array();
  for (auto r : r_range(b, a.r)) {
    const auto p = rook_poly_enum(b, r);
    if (!(p == rook_poly_closed(b, r))) throw InternalError("enumerated and closed-form rook polynomials disagree");
    const auto placements = rook_placements(b, r).size();
    Json e;
    e["r"] = r;
    e["poly"] = io::to_json(p);
    e["text"] = p.to_string();
    e["placements"] = placements;
    std::vector<std::string> row{std::to_string(r), p.to_string(), std::to_string(placements)};
    if (q) {
      e["value"] = io::to_json(p.evaluate(*q));
      row.push_back(str(p.evaluate(*q)));
    }
    entries.push_back(std::move(e));
    o.table.rows.push_back(std::move(row));
  }
  o.doc["entries"] = std::move(entries);
  return o;
}

struct StirlingArgs {
  unsigned m = 0;
  std::optional<unsigned> r;
};

Output run_stirling(const StirlingArgs& a) {
  Output o;
  o.doc = header("ferrers stirling");
  o.doc["m"] = a.m;
  o.table.header = {"r", "S_m,r"};
  Json entries = Json::array();
  std::vector<unsigned> rs;
  if (a.r)
    rs.push_back(*a.r);
  else
    for (unsigned r = 0; r <= a.m; ++r) rs.push_back(r);
  for (auto r : rs) {
    const auto s = q_stirling(a.m, r);
    entries.push_back(Json{{"r", r}, {"poly", io::to_json(s)}, {"text", s.to_string()}});
    o.table.rows.push_back({std::to_string(r), s.to_string()});
  }
  o.doc["entries"] = std::move(entries);
  return o;
}

// ---------------------------------------------------------------------------
// code

struct CodeArgs {
  std::string file;
  std::string dist = "rank";
  std::optional<std::string> u, lambda;
  std::string side = "piv";
};

Output run_analyze(const CodeArgs& a) {
  const auto kind = kind_flag("--dist", a.dist);
  const auto c = code_flag(a.file);
  const auto d = distribution(c, kind);
  Output o;
  o.doc = header("code analyze");
  o.doc["code"] = io::to_json(c);
  o.doc["size"] = io::to_json(c.size());
  o.doc["min_rank_distance"] = c.dim() ? Json(min_rank_distance(c)) : Json(nullptr);
  o.doc["mrd"] = c.cols() <= c.rows() ? Json(is_mrd(c)) : Json(nullptr);
  o.doc["partition"] = to_string(kind);
  o.doc["distribution"] = io::to_json(d);
  o.notes.push_back("shape: " + std::to_string(c.rows()) + "x" + std::to_string(c.cols()) + " over GF(" + std::to_string(c.field()->q()) + ")");
  o.notes.push_back("dimension: " + std::to_string(c.dim()) + ", size " + str(c.size()));
  o.notes.push_back("min rank distance: " + (c.dim() ? std::to_string(min_rank_distance(c)) : std::string("-")));
  if (c.cols() <= c.rows()) o.notes.push_back(std::string("mrd: ") + (is_mrd(c) ? "yes" : "no"));
  o.notes.push_back(to_string(kind) + " distribution:");
  distribution_table(o, d);
  return o;
}

Output run_dual(const CodeArgs& a) {
  const auto c = code_flag(a.file).dual();
  Output o;
  o.doc = header("code dual");
  o.doc["code"] = io::to_json(c);
  o.raw = code_to_text(c);
  o.table.header = {"generator", "entries"};
  std::size_t i = 0;
  for (const auto& g : c.basis()) {
    std::string s;
    for (auto e : g.data()) s += (s.empty() ? "" : " ") + std::to_string(e.value);
    o.table.rows.push_back({std::to_string(i++), s});
  }
  return o;
}

Output run_extremal(const CodeArgs& a) {
  const auto c = code_flag(a.file);
  if (c.cols() > c.rows()) throw UsageError("--file: extremality assumes m <= n");
  const auto side = a.side == "piv"    ? PivotSide::piv
                    : a.side == "rpiv" ? PivotSide::rpiv
                                       : throw UsageError("--side: expected piv or rpiv, got '" + a.side + "'");
  const auto& f = c.field();
  const auto m = c.cols();
  Output o;
  o.doc = header("code extremal");
  o.doc["mrd"] = is_mrd(c);
  o.notes.push_back(std::string("mrd: ") + (is_mrd(c) ? "yes" : "no"));
  o.table.header = {"kind", "label", "extremal"};
  Json rows = Json::array();
  auto add = [&](const std::string& kind, const PartitionLabel& l, bool ext) {
    rows.push_back(Json{{"kind", kind}, {"label", io::to_json(l)}, {"extremal", ext}});
    o.table.rows.push_back({kind, to_string(l), ext ? "yes" : "no"});
  };
  const bool all = !a.u && !a.lambda;
  if (a.u) {
    const auto u = parse_flag("--U", [&] { return io::parse_subspace(*a.u, f, m); });
    add("U", u, is_u_extremal(c, u));
  }
  if (a.lambda) {
    const auto l = parse_flag("--lambda", [&] { return io::parse_pivots(*a.lambda, static_cast<unsigned>(m)); });
    add(a.side, side == PivotSide::piv ? PartitionLabel(PivotLabel{l}) : PartitionLabel(RPivotLabel{l}), is_piv_extremal(c, l, side));
  }
  if (all) {
    for (const auto& u : subspaces(f, m)) add("U", u, is_u_extremal(c, u));
    for (const auto& l : all_pivot_lists(static_cast<unsigned>(m))) add("piv", PivotLabel{l}, is_piv_extremal(c, l, PivotSide::piv));
    for (const auto& l : all_pivot_lists(static_cast<unsigned>(m))) add("rpiv", RPivotLabel{l}, is_piv_extremal(c, l, PivotSide::rpiv));
  }
  o.doc["checks"] = std::move(rows);
  return o;
}

struct RandomArgs {
  Shape shape;
  std::size_t k = 1;
};

Output run_random(const RandomArgs& a, std::uint64_t seed) {
  const auto f = a.shape.field();
  if (a.k > a.shape.n * a.shape.m) throw UsageError("--k: dimension above n*m");
  std::mt19937_64 rng(seed);
  const auto c = random_code(f, a.shape.n, a.shape.m, a.k, rng);
  Output o;
  o.doc = header("code random");
  o.doc["seed"] = seed;
  o.doc["code"] = io::to_json(c);
  o.raw = code_to_text(c);
  o.table.header = {"generator", "entries"};
  std::size_t i = 0;
  for (const auto& g : c.basis()) {
    std::string s;
    for (auto e : g.data()) s += (s.empty() ? "" : " ") + std::to_string(e.value);
    o.table.rows.push_back({std::to_string(i++), s});
  }
  return o;
}

// ---------------------------------------------------------------------------
// preservers

struct ClassifyArgs {
  std::string partition;
  Shape shape;
};

Output run_classify(const ClassifyArgs& a) {
  const auto kind = kind_flag("--partition", a.partition);
  parse_flag("--partition", [&] {
    require_preserver_kind(kind);
    return 0;
  });
  const auto f = a.shape.field();
  const auto found = classify_preservers(f, a.shape.n, a.shape.m, kind);
  const auto family = structured_family(f, a.shape.n, a.shape.m, kind);
  Output o;
  o.doc = header("preservers classify");
  o.doc["partition"] = to_string(kind);
  o.doc["count"] = found.size();
  o.doc["structured_count"] = family.size();
  o.doc["equals_structured"] = found == family;
  o.notes.push_back("preservers: " + std::to_string(found.size()));
  o.notes.push_back("structured family: " + std::to_string(family.size()));
  o.notes.push_back(std::string("equal: ") + (found == family ? "yes" : "no"));
  o.table.header = {"map", "matrix"};
  Json maps = Json::array();
  for (std::size_t i = 0; i < found.size(); ++i) {
    maps.push_back(io::to_json(found[i].g));
    std::string s;
    for (auto e : found[i].g.data()) s += std::to_string(e.value);
    o.table.rows.push_back({std::to_string(i), s});
  }
  o.doc["maps"] = std::move(maps);
  o.failed = !(found == family);
  return o;
}

struct ExtendArgs {
  std::string example;
};

Output run_extend(const ExtendArgs& a) {
  SubcodeMap map;
  PartitionKind kind;
  if (a.example == "rank") {
    map = not_extendable_rank_example();
    kind = PartitionKind::rank;
  } else if (a.example == "pivot") {
    map = not_extendable_pivot_example();
    kind = PartitionKind::pivot;
  } else {
    throw UsageError("--example: expected rank or pivot, got '" + a.example + "'");
  }
  bool on_code = true;
  for (const auto& [x, y] : map.pairs)
    if (!(label_of(kind, x) == label_of(kind, y))) on_code = false;
  const auto r = extension_search(map, kind);
  Output o;
  o.doc = header("preservers extend");
  o.doc["example"] = a.example;
  o.doc["partition"] = to_string(kind);
  o.doc["code_dim"] = map.domain.dim();
  o.doc["preserving_on_code"] = on_code;
  o.doc["candidates"] = r.candidates;
  o.doc["extension"] = r.extension ? Json{{"u", io::to_json(r.extension->u)}, {"v", io::to_json(r.extension->v)}, {"transposed", r.extension->transposed}}
                                   : Json(nullptr);
  o.table.header = {"example", "partition", "preserving_on_code", "candidates", "extension"};
  o.table.rows.push_back({a.example, to_string(kind), on_code ? "yes" : "no", std::to_string(r.candidates), r.extension ? "found" : "none"});
  return o;
}

// ---------------------------------------------------------------------------
// selftest

Output run_selftest_cmd(std::uint64_t seed) {
  const auto checks = run_selftest(seed);
  Output o;
  o.doc = header("selftest");
  o.doc["seed"] = seed;
  o.table.header = {"check", "cases", "failures", "status"};
  Json arr = Json::array();
  for (const auto& c : checks) {
    arr.push_back(Json{{"name", c.name}, {"cases", c.cases}, {"failures", c.failures}, {"passed", c.passed()}});
    o.table.rows.push_back({c.name, std::to_string(c.cases), std::to_string(c.failures), c.passed() ? "pass" : "FAIL"});
    if (!c.passed()) o.failed = true;
  }
  o.doc["checks"] = std::move(arr);
  o.doc["passed"] = !o.failed;
  return o;
}

// ---------------------------------------------------------------------------

void emit(const Output& o, Format fmt) {
  switch (fmt) {
    case Format::json:
      std::cout << o.doc.dump(2) << '\n';
      return;
    case Format::csv:
      io::write_csv(std::cout, o.table);
      return;
    case Format::text:
      for (const auto& n : o.notes) std::cout << n << '\n';
      if (o.raw)
        std::cout << *o.raw;
      else
        io::write_text_table(std::cout, o.table);
      return;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qpart: partition distributions, Krawtchouk coefficients and MacWilliams transforms for matrix codes over GF(q)"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Globals g;
  std::string format = "text";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "csv"}))->capture_default_str();
  app.add_option("--budget", g.budget, "maximum number of objects any enumeration may visit (default 10000000)");
  app.add_option("--seed", g.seed, "seed for randomized corpora")->capture_default_str();

  std::function<Output()> action;

  KrawArgs kraw;
  auto* kraw_cmd = app.add_subcommand("kraw", "Krawtchouk table K(P; i, j) of a partition against its dual");
  kraw_cmd->add_option("--partition", kraw.partition, "rank, rowspace, pivot or rpivot")->required();
  kraw.shape.add(kraw_cmd);
  kraw_cmd->add_flag("--oracle", kraw.oracle, "also compare every entry with the exact character sum");
  kraw_cmd->callback([&] { action = [&] { return run_kraw(kraw); }; });

  DualArgs dual;
  auto* dual_cmd = app.add_subcommand("dualpartition", "dual partition of F^{n x m} by brute-force character sums");
  dual_cmd->add_option("--partition", dual.partition, "rank, rowspace, pivot or rpivot")->required();
  dual.shape.add(dual_cmd);
  dual_cmd->callback([&] { action = [&] { return run_dualpartition(dual); }; });

  MacWilliamsArgs mw;
  auto* mw_cmd = app.add_subcommand("macwilliams", "distribution of the dual code from the distribution of a code");
  mw_cmd->add_option("--file", mw.file, "code file")->required();
  mw_cmd->add_option("--partition", mw.partition, "partition of the input distribution")->required();
  mw_cmd->add_flag("--verify", mw.verify, "compare with the enumerated dual code");
  mw_cmd->callback([&] { action = [&] { return run_macwilliams(mw); }; });

  auto* fer_cmd = app.add_subcommand("ferrers", "Ferrers board rank distributions and q-rook polynomials");
  fer_cmd->require_subcommand(1);
  FerrersArgs fer;
  auto* rd_cmd = fer_cmd->add_subcommand("rankdist", "P_r(F): number of matrices supported on F with rank r");
  auto* rook_cmd = fer_cmd->add_subcommand("rook", "q-rook polynomial R_r(F)");
  for (auto* c : {rd_cmd, rook_cmd}) {
    c->add_option("--board", fer.board, "column heights, e.g. 1,2,4,4,5")->required();
    c->add_option("--r", fer.r, "rank (default: all)");
    c->add_option("--q", fer.q, "also evaluate at this field order");
  }
  rd_cmd->callback([&] { action = [&] { return run_rankdist(fer); }; });
  rook_cmd->callback([&] { action = [&] { return run_rook(fer); }; });
  StirlingArgs st;
  auto* st_cmd = fer_cmd->add_subcommand("stirling", "q-Stirling numbers S_{m,r}");
  st_cmd->add_option("--m", st.m, "index m")->required();
  st_cmd->add_option("--r", st.r, "index r (default: all)");
  st_cmd->callback([&] { action = [&] { return run_stirling(st); }; });

  auto* code_cmd = app.add_subcommand("code", "matrix code utilities");
  code_cmd->require_subcommand(1);
  CodeArgs code;
  auto* an_cmd = code_cmd->add_subcommand("analyze", "size, minimum rank distance and partition distribution");
  an_cmd->add_option("--file", code.file, "code file")->required();
  an_cmd->add_option("--dist", code.dist, "rank, rowspace, pivot or rpivot")->capture_default_str();
  an_cmd->callback([&] { action = [&] { return run_analyze(code); }; });
  auto* du_cmd = code_cmd->add_subcommand("dual", "dual code, written in the code file format");
  du_cmd->add_option("--file", code.file, "code file")->required();
  du_cmd->callback([&] { action = [&] { return run_dual(code); }; });
  auto* ex_cmd = code_cmd->add_subcommand("extremal", "MRD, U-extremality and pivot-extremality (all U and lambda by default)");
  ex_cmd->add_option("--file", code.file, "code file")->required();
  ex_cmd->add_option("--U", code.u, "subspace rows separated by ';', e.g. \"1 0 0;0 0 1\"");
  ex_cmd->add_option("--lambda", code.lambda, "pivot list, e.g. 1,3");
  ex_cmd->add_option("--side", code.side, "piv or rpiv for --lambda")->capture_default_str();
  ex_cmd->callback([&] { action = [&] { return run_extremal(code); }; });
  RandomArgs rnd;
  auto* rnd_cmd = code_cmd->add_subcommand("random", "random code of dimension k from --seed, in the code file format");
  rnd.shape.add(rnd_cmd);
  rnd_cmd->add_option("--k", rnd.k, "dimension")->capture_default_str();
  rnd_cmd->callback([&] { action = [&] { return run_random(rnd, g.seed); }; });

  auto* pre_cmd = app.add_subcommand("preservers", "partition-preserving linear maps");
  pre_cmd->require_subcommand(1);
  ClassifyArgs cls;
  auto* cls_cmd = pre_cmd->add_subcommand("classify", "exhaustive classification (q = 2, nm <= 4)");
  cls_cmd->add_option("--partition", cls.partition, "rank, rowspace or pivot")->required();
  cls.shape.add(cls_cmd);
  cls_cmd->callback([&] { action = [&] { return run_classify(cls); }; });
  ExtendArgs ext;
  auto* ext_cmd = pre_cmd->add_subcommand("extend", "search the structured maps for an extension of a non-extendable example");
  ext_cmd->add_option("--example", ext.example, "rank or pivot")->required();
  ext_cmd->callback([&] { action = [&] { return run_extend(ext); }; });

  auto* self_cmd = app.add_subcommand("selftest", "closed forms against brute-force oracles at small sizes");
  self_cmd->callback([&] { action = [&] { return run_selftest_cmd(g.seed); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  g.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;

  try {
    std::optional<ScopedBudget> budget;
    if (g.budget) budget.emplace(*g.budget);
    const Output o = action();
    emit(o, g.format);
    return o.failed ? 1 : 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << " (raise it with --budget)\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
