#include <gtest/gtest.h>

#include <sstream>

#include "qpart/selftest.hpp"
#include "qpart_io.hpp"

using namespace qpart;
using qpart::io::Json;

TEST(Io, BigIntJson) {
  EXPECT_TRUE(io::to_json(BigInt(42)).is_number_integer());
  const BigInt big = ipow(BigInt(2), 70);
  EXPECT_EQ(io::to_json(big), Json("1180591620717411303424"));
  EXPECT_EQ(io::bigint_from_json(io::to_json(big)), big);
  EXPECT_EQ(io::bigint_from_json(io::to_json(BigInt(-7))), -7);
  EXPECT_THROW(io::bigint_from_json(Json(1.5)), ParseError);
}

TEST(Io, PolynomialRoundTrip) {
  LaurentPoly p;
  p.add_term(-2, 3);
  p.add_term(5, ipow(BigInt(3), 50));
  EXPECT_EQ(io::poly_from_json(io::to_json(p)), p);
  EXPECT_EQ(io::to_json(LaurentPoly()).dump(), "{}");
  EXPECT_THROW(io::poly_from_json(Json::parse(R"({"x": 1})")), ParseError);
  EXPECT_THROW(io::poly_from_json(Json::array()), ParseError);
}

TEST(Io, LabelRoundTrip) {
  for (unsigned q : {2u, 3u}) {
    const auto f = field_of_order(q);
    for (auto kind : {PartitionKind::rank, PartitionKind::rowspace, PartitionKind::pivot, PartitionKind::rpivot})
      for (const auto& l : all_labels(kind, f, 2, 3)) EXPECT_EQ(io::label_from_json(io::to_json(l), f), l) << to_string(l);
  }
  const auto f = field_of_order(2);
  EXPECT_THROW(io::label_from_json(Json::parse(R"({"kind":"rs","m":2,"basis":[[1,1],[0,1]]})"), f), ParseError);
  EXPECT_THROW(io::label_from_json(Json::parse(R"({"kind":"weight"})"), f), ParseError);
}

TEST(Io, BoardsAndMatrices) {
  const FerrersBoard b({1, 2, 4, 4, 5});
  EXPECT_EQ(io::board_from_json(io::to_json(b)), b);
  const auto f = field_of_order(4);
  const Matrix a(f, 2, 3, {0, 1, 2, 3, 0, 1});
  EXPECT_EQ(io::matrix_from_json(io::to_json(a), f, 3), a);
  EXPECT_THROW(io::matrix_from_json(Json::parse("[[0,1,4]]"), f, 3), ParseError);
  EXPECT_THROW(io::matrix_from_json(Json::parse("[[0,1]]"), f, 3), ParseError);
  const auto c = mrd_field_embedding(field_of_order(2), 2);
  const auto j = io::to_json(c);
  EXPECT_EQ(j["k"], 2);
  EXPECT_EQ(j["generators"].size(), 2u);
}

TEST(Io, FlagParsers) {
  EXPECT_EQ(io::parse_pivots("1,3", 4), PivotList::from_indices(4, {1, 3}));
  EXPECT_EQ(io::parse_pivots("(2, 4)", 4), PivotList::from_indices(4, {2, 4}));
  EXPECT_EQ(io::parse_pivots("()", 3), PivotList(3));
  EXPECT_EQ(io::parse_pivots("", 3), PivotList(3));
  EXPECT_THROW(io::parse_pivots("1,a", 3), ParseError);
  EXPECT_THROW(io::parse_pivots("5", 3), InvalidArgument);
  const auto f = field_of_order(3);
  EXPECT_EQ(io::parse_subspace("1 0 0;0 0 1", f, 3), Subspace::span(Matrix(f, 2, 3, {1, 0, 0, 0, 0, 1})));
  EXPECT_EQ(io::parse_subspace("1,2,0", f, 3), Subspace::span(Matrix(f, 1, 3, {1, 2, 0})));
  EXPECT_EQ(io::parse_subspace("", f, 3), Subspace::zero(f, 3));
  EXPECT_THROW(io::parse_subspace("1 0", f, 3), ParseError);
  EXPECT_THROW(io::parse_subspace("1 0 3", f, 3), ParseError);
  EXPECT_THROW(io::parse_subspace("1 x 0", f, 3), ParseError);
}

TEST(Io, Tables) {
  EXPECT_EQ(io::csv_cell("plain"), "plain");
  EXPECT_EQ(io::csv_cell("a,b"), "\"a,b\"");
  EXPECT_EQ(io::csv_cell("say \"hi\""), "\"say \"\"hi\"\"\"");
  io::Table t{{"r", "poly"}, {{"1", "2q^2 - q - 1"}, {"2", "q^3, maybe"}}};
  std::ostringstream csv;
  io::write_csv(csv, t);
  EXPECT_EQ(csv.str(), "r,poly\n1,2q^2 - q - 1\n2,\"q^3, maybe\"\n");
  std::ostringstream text;
  io::write_text_table(text, t);
  EXPECT_EQ(text.str(), "r  poly\n1  2q^2 - q - 1\n2  q^3, maybe\n");
}

TEST(Selftest, AllChecksPass) {
  const auto checks = run_selftest(42);
  EXPECT_EQ(checks.size(), 10u);
  for (const auto& c : checks) {
    EXPECT_GT(c.cases, 0u) << c.name;
    EXPECT_TRUE(c.passed()) << c.name << ": " << c.failures << " of " << c.cases;
  }
}
