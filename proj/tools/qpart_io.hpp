#pragma once

// JSON, CSV and text rendering for the qpart command line, plus the
// inverse parsers for labels, boards and polynomials.

#include <cstdint>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qpart/qpart.hpp"

namespace qpart::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "qpart/1";

// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
inline Json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw ParseError("expected an integer");
}

/// Exponent -> coefficient, exponents as decimal strings (JSON keys), ascending.
inline Json to_json(const LaurentPoly& p) {
  Json j = Json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = to_json(c);
  return j;
}

inline LaurentPoly poly_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("polynomial must be an object");
  LaurentPoly p;
  for (const auto& [k, v] : j.items()) {
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(k, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != k.size()) throw ParseError("bad exponent '" + k + "'");
    p.add_term(e, bigint_from_json(v));
  }
  return p;
}

inline Json to_json(const Matrix& a) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a.at(i, j).value);
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Matrix matrix_from_json(const Json& j, const FieldCtx& f, std::size_t cols) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  std::vector<std::uint32_t> values;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) throw ParseError("matrix row of wrong length");
    for (const auto& v : row) {
      if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= f->q()) throw ParseError("matrix entry out of range");
      values.push_back(v.get<std::uint32_t>());
    }
  }
  return Matrix(f, j.size(), cols, values);
}

inline Json to_json(const PivotList& l) {
  Json j = Json::array();
  for (auto i : l.indices()) j.push_back(i);
  return j;
}

inline PivotList pivots_from_json(const Json& j, unsigned width) {
  if (!j.is_array()) throw ParseError("pivot list must be an array");
  std::vector<unsigned> idx;
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) throw ParseError("pivot index must be a positive integer");
    idx.push_back(v.get<unsigned>());
  }
  return PivotList::from_indices(width, idx);
}

inline Json to_json(const PartitionLabel& l) {
  Json j;
  j["kind"] = to_string(kind_of(l));
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, RankLabel>) {
          j["r"] = x.r;
        } else if constexpr (std::is_same_v<T, Subspace>) {
          j["m"] = x.ambient();
          j["basis"] = to_json(x.basis());
        } else {
          j["m"] = x.l.width();
          j["list"] = to_json(x.l);
        }
      },
      l);
  return j;
}

/// The field is needed for row-space labels only.
inline PartitionLabel label_from_json(const Json& j, const FieldCtx& f) {
  const auto kind = parse_partition_kind(j.at("kind").get<std::string>());
  switch (kind) {
    case PartitionKind::rank:
      return RankLabel{j.at("r").get<unsigned>()};
    case PartitionKind::rowspace: {
      const auto m = j.at("m").get<std::size_t>();
      const auto basis = matrix_from_json(j.at("basis"), f, m);
      const auto u = Subspace::span(basis);
      if (!(u.basis() == basis)) throw ParseError("row-space basis is not in reduced row echelon form");
      return u;
    }
    case PartitionKind::pivot:
      return PivotLabel{pivots_from_json(j.at("list"), j.at("m").get<unsigned>())};
    case PartitionKind::rpivot:
      return RPivotLabel{pivots_from_json(j.at("list"), j.at("m").get<unsigned>())};
  }
  throw InternalError("unhandled partition kind");
}

inline Json to_json(const FerrersBoard& b) { return Json(b.cols()); }

inline FerrersBoard board_from_json(const Json& j) { return FerrersBoard(j.get<std::vector<unsigned>>()); }

inline Json to_json(const Distribution& d) {
  Json arr = Json::array();
  for (const auto& [label, count] : d.entries()) arr.push_back(Json{{"label", to_json(label)}, {"count", to_json(count)}});
  return arr;
}

inline Json to_json(const MatrixCode& c) {
  Json j;
  j["n"] = c.rows();
  j["m"] = c.cols();
  j["q"] = c.field()->q();
  j["k"] = c.dim();
  Json gens = Json::array();
  for (const auto& g : c.basis()) gens.push_back(to_json(g));
  j["generators"] = std::move(gens);
  return j;
}

/// Comma-separated list of pivot indices, e.g. "1,3"; "" or "()" is the empty list.
inline PivotList parse_pivots(const std::string& s, unsigned width) {
  std::string t;
  for (char ch : s)
    if (ch != '(' && ch != ')' && ch != ' ') t += ch;
  std::vector<unsigned> idx;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item.find_first_not_of("0123456789") != std::string::npos) throw ParseError("bad pivot index '" + item + "'");
    idx.push_back(static_cast<unsigned>(std::stoul(item)));
  }
  return PivotList::from_indices(width, idx);
}

/// Rows separated by ';', entries by spaces or commas: "1 0 0;0 0 1". "" is the zero subspace.
inline Subspace parse_subspace(const std::string& s, const FieldCtx& f, std::size_t m) {
  std::vector<std::uint32_t> values;
  std::size_t rows = 0;
  std::stringstream ss(s);
  std::string row;
  while (std::getline(ss, row, ';')) {
    for (auto& ch : row)
      if (ch == ',') ch = ' ';
    std::istringstream rs(row);
    std::vector<std::uint32_t> r;
    long long v;
    while (rs >> v) {
      if (v < 0 || static_cast<unsigned long long>(v) >= f->q()) throw ParseError("subspace entry out of range");
      r.push_back(static_cast<std::uint32_t>(v));
    }
    if (!rs.eof()) throw ParseError("bad subspace row '" + row + "'");
    if (r.empty()) continue;
    if (r.size() != m) throw ParseError("subspace row of length " + std::to_string(r.size()) + ", expected " + std::to_string(m));
    values.insert(values.end(), r.begin(), r.end());
    ++rows;
  }
  return Subspace::span(Matrix(f, rows, m, values));
}

// ---------------------------------------------------------------------------
// Tabular output shared by the text and CSV renderers.

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

inline std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

inline void write_csv(std::ostream& os, const Table& t) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_cell(cells[i]);
    os << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
}

inline void write_text_table(std::ostream& os, const Table& t) {
  std::vector<std::size_t> width(t.header.size(), 0);
  auto widen = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) width[i] = std::max(width[i], cells[i].size());
  };
  widen(t.header);
  for (const auto& r : t.rows) widen(r);
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) s += "  ";
      s += cells[i];
      if (i + 1 < cells.size()) s.append(width[i] - cells[i].size(), ' ');
    }
    os << s << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
}

}  // namespace qpart::io
