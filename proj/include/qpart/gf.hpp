#pragma once

// Arithmetic in GF(p^e). Elements are integers in [0, q) read as base-p
// coefficient vectors (least significant digit = constant term) of residues
// modulo a fixed monic irreducible polynomial.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qpart/errors.hpp"

namespace qpart {

struct Elem {
  std::uint32_t value = 0;

  constexpr Elem() = default;
  constexpr explicit Elem(std::uint32_t v) : value(v) {}
  constexpr bool is_zero() const { return value == 0; }
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

class Field;
using FieldCtx = std::shared_ptr<const Field>;

inline bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace detail {

// Polynomials over GF(p), coefficient vectors low to high, trimmed.
using PrimePoly = std::vector<unsigned>;

inline void trim(PrimePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline unsigned inv_mod_p(unsigned a, unsigned p) {
  // p is tiny; Fermat by repeated multiplication
  unsigned r = 1;
  for (unsigned i = 0; i + 2 < p; ++i) r = r * a % p;
  return r;
}

// Remainder of a modulo monic-or-not b (b nonzero, trimmed).
inline PrimePoly poly_mod(PrimePoly a, const PrimePoly& b, unsigned p) {
  trim(a);
  const auto db = b.size() - 1;
  const unsigned lead_inv = inv_mod_p(b.back(), p);
  while (a.size() >= b.size()) {
    const unsigned c = a.back() * lead_inv % p;
    const auto shift = a.size() - 1 - db;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + p * p - c * b[i] % p) % p;
    trim(a);
  }
  return a;
}

// Exhaustive search for a monic factor of degree 1..deg/2.
inline bool is_irreducible(const PrimePoly& f, unsigned p) {
  const auto deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      PrimePoly g(d + 1, 0);
      auto c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<unsigned>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

struct DefaultModulus {
  unsigned p, e;
  std::vector<unsigned> coeffs;
};

// Conway polynomials for every prime power up to 16.
inline const std::vector<DefaultModulus>& default_moduli() {
  static const std::vector<DefaultModulus> table = {
      {2, 1, {1, 1}},    {3, 1, {1, 1}},       {5, 1, {3, 1}},          {7, 1, {4, 1}},
      {11, 1, {9, 1}},   {13, 1, {11, 1}},     {2, 2, {1, 1, 1}},       {2, 3, {1, 1, 0, 1}},
      {2, 4, {1, 1, 0, 0, 1}}, {3, 2, {2, 2, 1}},
  };
  return table;
}

}  // namespace detail

/// Immutable finite field context. Construct with make_field() or field_of_order().
class Field {
 public:
  unsigned p() const { return p_; }
  unsigned e() const { return e_; }
  std::uint32_t q() const { return q_; }
  const std::vector<unsigned>& modulus() const { return modulus_; }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }

  Elem elem(std::uint32_t v) const {
    if (v >= q_) throw InvalidArgument("field element " + std::to_string(v) + " out of range for q=" + std::to_string(q_));
    return Elem{v};
  }

  Elem add(Elem a, Elem b) const { return tabled_ ? add_[a.value * q_ + b.value] : add_slow(a, b); }
  Elem neg(Elem a) const { return tabled_ ? neg_[a.value] : neg_slow(a); }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const { return tabled_ ? mul_[a.value * q_ + b.value] : mul_slow(a, b); }

  Elem inv(Elem a) const {
    if (a.is_zero()) throw DivisionByZero();
    if (tabled_) return inv_[a.value];
    return pow(a, q_ - 2);
  }

  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem pow(Elem a, std::uint64_t k) const {
    Elem r = one();
    Elem base = a;
    while (k) {
      if (k & 1) r = mul(r, base);
      base = mul(base, base);
      k >>= 1;
    }
    return r;
  }

  /// Absolute trace Tr_{GF(p^e)/GF(p)}(a) = a + a^p + ... + a^{p^{e-1}}; value in [0, p).
  unsigned trace(Elem a) const {
    if (tabled_) return trace_[a.value];
    return trace_slow(a);
  }

  /// Embedding of the prime field.
  Elem from_prime(unsigned c) const { return Elem{c % p_}; }

  bool operator==(const Field& o) const { return p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_; }

  std::string name() const {
    return e_ == 1 ? "GF(" + std::to_string(p_) + ")" : "GF(" + std::to_string(p_) + "^" + std::to_string(e_) + ")";
  }

  // Use make_field(); public only for std::make_shared.
  Field(unsigned p, unsigned e, std::vector<unsigned> modulus) : p_(p), e_(e), modulus_(std::move(modulus)) {
    q_ = 1;
    for (unsigned i = 0; i < e_; ++i) q_ *= p_;
    tabled_ = q_ <= kTableLimit;
    if (tabled_) build_tables();
  }

 private:
  static constexpr std::uint32_t kTableLimit = 256;

  detail::PrimePoly digits(Elem a) const {
    detail::PrimePoly d(e_, 0);
    auto v = a.value;
    for (unsigned i = 0; i < e_; ++i) {
      d[i] = v % p_;
      v /= p_;
    }
    return d;
  }

  Elem from_digits(const detail::PrimePoly& d) const {
    std::uint32_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p_ + d[i];
    return Elem{v};
  }

  Elem add_slow(Elem a, Elem b) const {
    auto da = digits(a), db = digits(b);
    for (unsigned i = 0; i < e_; ++i) da[i] = (da[i] + db[i]) % p_;
    return from_digits(da);
  }

  Elem neg_slow(Elem a) const {
    auto d = digits(a);
    for (auto& x : d) x = (p_ - x) % p_;
    return from_digits(d);
  }

  Elem mul_slow(Elem a, Elem b) const {
    auto da = digits(a), db = digits(b);
    detail::PrimePoly prod(2 * e_, 0);
    for (unsigned i = 0; i < e_; ++i)
      for (unsigned j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    auto r = detail::poly_mod(prod, modulus_, p_);
    r.resize(e_, 0);
    return from_digits(r);
  }

  unsigned trace_slow(Elem a) const {
    Elem acc = zero();
    Elem frob = a;
    for (unsigned i = 0; i < e_; ++i) {
      acc = add_slow(acc, frob);
      frob = pow_slow(frob, p_);
    }
    if (acc.value >= p_) throw InternalError("trace left the prime subfield");
    return acc.value;
  }

  Elem pow_slow(Elem a, unsigned k) const {
    Elem r = one();
    for (unsigned i = 0; i < k; ++i) r = mul_slow(r, a);
    return r;
  }

  void build_tables() {
    const std::size_t qq = static_cast<std::size_t>(q_) * q_;
    add_.resize(qq);
    mul_.resize(qq);
    neg_.resize(q_);
    inv_.resize(q_);
    trace_.resize(q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
      neg_[a] = neg_slow(Elem{a});
      for (std::uint32_t b = 0; b < q_; ++b) {
        add_[a * q_ + b] = add_slow(Elem{a}, Elem{b});
        mul_[a * q_ + b] = mul_slow(Elem{a}, Elem{b});
      }
    }
    for (std::uint32_t a = 1; a < q_; ++a)
      for (std::uint32_t b = 1; b < q_; ++b)
        if (mul_[a * q_ + b].value == 1) inv_[a] = Elem{b};
    for (std::uint32_t a = 0; a < q_; ++a) trace_[a] = trace_slow(Elem{a});
  }

  unsigned p_, e_;
  std::uint32_t q_ = 1;
  std::vector<unsigned> modulus_;
  bool tabled_ = false;
  std::vector<Elem> add_, mul_, neg_, inv_;
  std::vector<unsigned> trace_;
};

/// Builds GF(p^e). Without a modulus the built-in Conway table (p^e <= 16) is used.
/// The modulus is given low-to-high and must be monic irreducible of degree e.
inline FieldCtx make_field(unsigned p, unsigned e, std::optional<std::vector<unsigned>> modulus = std::nullopt) {
  if (!is_prime(p)) throw NonPrime(p);
  if (e == 0) throw InvalidArgument("extension degree must be at least 1");
  std::vector<unsigned> f;
  if (modulus) {
    f = *modulus;
    for (auto c : f)
      if (c >= p) throw ReducibleModulus();
    if (f.size() != e + 1 || f.back() != 1) throw ReducibleModulus();
  } else {
    bool found = false;
    for (const auto& d : detail::default_moduli())
      if (d.p == p && d.e == e) {
        f = d.coeffs;
        found = true;
      }
    if (!found) throw UnsupportedSize(p, e);
  }
  if (!detail::is_irreducible(f, p)) throw ReducibleModulus();
  return std::make_shared<const Field>(p, e, std::move(f));
}

/// Recovers (p, e) from q and returns the built-in field of that order.
inline FieldCtx field_of_order(std::uint32_t q) {
  for (const auto& d : detail::default_moduli()) {
    std::uint32_t order = 1;
    for (unsigned i = 0; i < d.e; ++i) order *= d.p;
    if (order == q) return make_field(d.p, d.e);
  }
  throw InvalidArgument("no built-in field of order " + std::to_string(q));
}

inline void require_same_field(const FieldCtx& a, const FieldCtx& b) {
  if (a != b && !(*a == *b)) throw FieldMismatch();
}

}  // namespace qpart
