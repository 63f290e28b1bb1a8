#pragma once

// Laurent polynomials in one indeterminate q with arbitrary-precision integer
// coefficients. Stored sparse, never holding a zero coefficient.

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <map>
#include <ostream>
#include <optional>
#include <string>

#include "qpart/errors.hpp"

namespace qpart {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt ipow(const BigInt& base, unsigned exp) { return boost::multiprecision::pow(base, exp); }

class LaurentPoly {
 public:
  static constexpr long kMinusInfinity = std::numeric_limits<long>::min();
  static constexpr long kPlusInfinity = std::numeric_limits<long>::max();

  LaurentPoly() = default;
  LaurentPoly(long c) { add_term(0, BigInt(c)); }  // NOLINT: integers embed as constants
  LaurentPoly(const BigInt& c) { add_term(0, c); }  // NOLINT

  /// c q^e
  static LaurentPoly monomial(long e, const BigInt& c = 1) {
    LaurentPoly p;
    p.add_term(e, c);
    return p;
  }

  static LaurentPoly q() { return monomial(1); }

  const std::map<long, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BigInt coeff(long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  /// Degree; kMinusInfinity for the zero polynomial.
  long degree() const { return terms_.empty() ? kMinusInfinity : terms_.rbegin()->first; }
  /// Trailing degree; kPlusInfinity for the zero polynomial.
  long trailing_degree() const { return terms_.empty() ? kPlusInfinity : terms_.begin()->first; }

  bool is_polynomial() const { return terms_.empty() || terms_.begin()->first >= 0; }

  void add_term(long e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) { return LaurentPoly() - a; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }

  LaurentPoly pow(unsigned k) const {
    LaurentPoly r(1);
    for (unsigned i = 0; i < k; ++i) r *= *this;
    return r;
  }

  /// Multiplication by q^s.
  LaurentPoly shifted(long s) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + s, c);
    return r;
  }

  /// The substitution q -> q^{-1}.
  LaurentPoly inverted() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
  }

  /// Exact division by (1 - q). Throws InexactDivision when (1 - q) does not divide.
  LaurentPoly divided_by_one_minus_q() const {
    // s_k - s_{k-1} = a_k, run from the trailing degree upward.
    LaurentPoly s;
    if (is_zero()) return s;
    BigInt run = 0;
    for (long k = trailing_degree(); k < degree(); ++k) {
      run += coeff(k);
      s.add_term(k, run);
    }
    if (run + coeff(degree()) != 0) throw InexactDivision();
    return s;
  }

  /// Evaluation at an integer. Throws if a negative power would be needed and x does not divide.
  BigInt evaluate(const BigInt& x) const {
    Rational v = evaluate_rational(Rational(x));
    if (boost::multiprecision::denominator(v) != 1) throw InvalidArgument("Laurent evaluation is not an integer");
    return boost::multiprecision::numerator(v);
  }

  Rational evaluate_rational(const Rational& x) const {
    Rational r = 0;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      if (e >= 0)
        for (long i = 0; i < e; ++i) t *= x;
      else
        for (long i = 0; i < -e; ++i) t /= x;
      r += t;
    }
    return r;
  }

  /// Human-readable, descending powers: "2q^2 - q - 1", "q^-1 + 3", "0".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const long e = it->first;
      BigInt c = it->second;
      const bool neg = c < 0;
      if (neg) c = -c;
      if (first)
        s += neg ? "-" : "";
      else
        s += neg ? " - " : " + ";
      first = false;
      if (e == 0) {
        s += c.str();
        continue;
      }
      if (c != 1) s += c.str();
      s += "q";
      if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
  }

  bool operator==(const LaurentPoly& o) const = default;

  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

 private:
  std::map<long, BigInt> terms_;
};

/// q^e - q^f style helper: the binomial q^a - q^b as a Laurent polynomial.
inline LaurentPoly q_power_diff(long a, long b) { return LaurentPoly::monomial(a) - LaurentPoly::monomial(b); }

/// Binomial coefficient C(k, 2) for any integer k (k(k-1)/2).
constexpr long binom2(long k) { return k * (k - 1) / 2; }

}  // namespace qpart
