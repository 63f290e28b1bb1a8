#pragma once

// Exact elements of Z[zeta_p] on the power basis 1, zeta, ..., zeta^{p-2}.

#include <compare>
#include <string>
#include <vector>

#include "qpart/gf.hpp"
#include "qpart/laurent.hpp"

namespace qpart {

class CycInt {
 public:
  explicit CycInt(unsigned p) : p_(p), coords_(p - 1) {
    if (!is_prime(p)) throw NonPrime(p);
  }

  static CycInt integer(unsigned p, const BigInt& v) {
    CycInt c(p);
    c.coords_[0] = v;
    return c;
  }

  unsigned p() const { return p_; }
  const std::vector<BigInt>& coords() const { return coords_; }

  /// this += zeta^k, reducing zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2}).
  void add_root_power(unsigned k, const BigInt& mult = 1) {
    k %= p_;
    if (k + 1 < p_) {
      coords_[k] += mult;
    } else {
      for (auto& c : coords_) c -= mult;
    }
  }

  CycInt& operator+=(const CycInt& o) {
    check(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  CycInt& operator-=(const CycInt& o) {
    check(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }

  friend CycInt operator*(const CycInt& a, const CycInt& b) {
    a.check(b);
    CycInt r(a.p_);
    for (std::size_t i = 0; i < a.coords_.size(); ++i) {
      if (a.coords_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coords_.size(); ++j) r.add_root_power(static_cast<unsigned>(i + j), a.coords_[i] * b.coords_[j]);
    }
    return r;
  }

  /// True when every non-constant coordinate vanishes.
  bool is_rational() const {
    for (std::size_t i = 1; i < coords_.size(); ++i)
      if (coords_[i] != 0) return false;
    return true;
  }

  const BigInt& rational_value() const {
    if (!is_rational()) throw InvalidArgument("cyclotomic integer is not rational: " + to_string());
    return coords_[0];
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ",";
      s += coords_[i].str();
    }
    return s + "]";
  }

  bool operator==(const CycInt& o) const = default;
  std::strong_ordering operator<=>(const CycInt& o) const {
    if (auto c = p_ <=> o.p_; c != 0) return c;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (coords_[i] < o.coords_[i]) return std::strong_ordering::less;
      if (coords_[i] > o.coords_[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

 private:
  void check(const CycInt& o) const {
    if (p_ != o.p_) throw InvalidArgument("cyclotomic integers of different root orders");
  }

  unsigned p_;
  std::vector<BigInt> coords_;
};

}  // namespace qpart
