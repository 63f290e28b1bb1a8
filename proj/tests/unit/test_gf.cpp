#include <gtest/gtest.h>

#include "qpart/gf.hpp"

using namespace qpart;

TEST(Gf, PrimeFieldOrder) {
  const auto f = make_field(2, 1);
  EXPECT_EQ(f->q(), 2u);
  EXPECT_EQ(f->p(), 2u);
  EXPECT_EQ(f->e(), 1u);
}

TEST(Gf, ConstructionErrors) {
  EXPECT_THROW(make_field(4, 1), NonPrime);
  EXPECT_THROW(make_field(2, 5), UnsupportedSize);
  EXPECT_THROW(make_field(2, 2, std::vector<unsigned>{1, 0, 1}), ReducibleModulus);  // x^2 + 1 = (x + 1)^2
  EXPECT_THROW(make_field(3, 2, std::vector<unsigned>{2, 0, 1}), ReducibleModulus);  // x^2 - 1
  EXPECT_THROW(make_field(3, 2, std::vector<unsigned>{1, 0, 2}), ReducibleModulus);  // not monic
}

TEST(Gf, ExplicitModulusAccepted) {
  const auto f = make_field(3, 2, std::vector<unsigned>{1, 0, 1});  // x^2 + 1 has no root mod 3
  EXPECT_EQ(f->q(), 9u);
  EXPECT_EQ(f->mul(Elem{3}, Elem{3}).value, 2u);  // x * x = -1
}

TEST(Gf, FieldOrderTable) {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) EXPECT_EQ(field_of_order(q)->q(), q);
  EXPECT_THROW(field_of_order(6), InvalidArgument);
  EXPECT_THROW(field_of_order(27), InvalidArgument);
}

class FieldAxioms : public ::testing::TestWithParam<unsigned> {};

TEST_P(FieldAxioms, Exhaustive) {
  const auto f = field_of_order(GetParam());
  const auto q = f->q();
  for (std::uint32_t a = 0; a < q; ++a) {
    const Elem x{a};
    EXPECT_EQ(f->add(x, f->neg(x)), f->zero());
    EXPECT_EQ(f->mul(x, f->one()), x);
    if (a) { EXPECT_EQ(f->mul(x, f->inv(x)), f->one()); }
    for (std::uint32_t b = 0; b < q; ++b) {
      const Elem y{b};
      EXPECT_EQ(f->add(x, y), f->add(y, x));
      EXPECT_EQ(f->mul(x, y), f->mul(y, x));
      for (std::uint32_t c = 0; c < q; ++c) {
        const Elem z{c};
        EXPECT_EQ(f->mul(x, f->add(y, z)), f->add(f->mul(x, y), f->mul(x, z)));
        EXPECT_EQ(f->mul(f->mul(x, y), z), f->mul(x, f->mul(y, z)));
      }
    }
  }
}

// The trace is additive, Frobenius-invariant, lands in GF(p), and hits every value equally often.
TEST_P(FieldAxioms, TraceIsBalancedAndLinear) {
  const auto f = field_of_order(GetParam());
  std::vector<unsigned> hits(f->p(), 0);
  for (std::uint32_t a = 0; a < f->q(); ++a) {
    const Elem x{a};
    const auto t = f->trace(x);
    ASSERT_LT(t, f->p());
    ++hits[t];
    EXPECT_EQ(f->trace(f->pow(x, f->p())), t);
    for (std::uint32_t b = 0; b < f->q(); ++b) EXPECT_EQ(f->trace(f->add(x, Elem{b})), (t + f->trace(Elem{b})) % f->p());
  }
  for (auto h : hits) EXPECT_EQ(h, f->q() / f->p());
}

TEST_P(FieldAxioms, MultiplicativeGroupOrder) {
  const auto f = field_of_order(GetParam());
  for (std::uint32_t a = 1; a < f->q(); ++a) EXPECT_EQ(f->pow(Elem{a}, f->q() - 1), f->one());
}

INSTANTIATE_TEST_SUITE_P(Orders, FieldAxioms, ::testing::Values(2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u));

TEST(Gf, InverseOfZero) { EXPECT_THROW(field_of_order(4)->inv(Elem{0}), DivisionByZero); }

TEST(Gf, ElementRange) {
  const auto f = field_of_order(4);
  EXPECT_THROW(f->elem(4), InvalidArgument);
  EXPECT_EQ(f->elem(3).value, 3u);
}

// GF(4) with modulus x^2 + x + 1: x * x = x + 1, i.e. 2 * 2 = 3.
TEST(Gf, Gf4Multiplication) {
  const auto f = field_of_order(4);
  EXPECT_EQ(f->mul(Elem{2}, Elem{2}).value, 3u);
  EXPECT_EQ(f->mul(Elem{2}, Elem{3}).value, 1u);
  EXPECT_EQ(f->trace(Elem{1}), 0u);
  EXPECT_EQ(f->trace(Elem{2}), 1u);
}

TEST(Gf, Deterministic) {
  const auto a = field_of_order(8), b = field_of_order(8);
  EXPECT_EQ(*a, *b);
  for (std::uint32_t x = 0; x < 8; ++x)
    for (std::uint32_t y = 0; y < 8; ++y) EXPECT_EQ(a->mul(Elem{x}, Elem{y}), b->mul(Elem{x}, Elem{y}));
}
