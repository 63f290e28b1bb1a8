#pragma once

#include <atomic>
#include <cstdint>
#include <limits>

#include "qpart/errors.hpp"

namespace qpart {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

namespace detail {
inline std::atomic<std::uint64_t>& budget_slot() {
  static std::atomic<std::uint64_t> slot{kDefaultBudget};
  return slot;
}
}  // namespace detail

/// Upper bound on the number of objects any brute-force enumeration may visit.
inline std::uint64_t enumeration_budget() { return detail::budget_slot().load(std::memory_order_relaxed); }

inline void set_enumeration_budget(std::uint64_t b) { detail::budget_slot().store(b, std::memory_order_relaxed); }

/// RAII override of the global budget (tests, CLI --budget).
class ScopedBudget {
 public:
  explicit ScopedBudget(std::uint64_t b) : saved_(enumeration_budget()) { set_enumeration_budget(b); }
  ~ScopedBudget() { set_enumeration_budget(saved_); }
  ScopedBudget(const ScopedBudget&) = delete;
  ScopedBudget& operator=(const ScopedBudget&) = delete;

 private:
  std::uint64_t saved_;
};

/// base^exp saturated at UINT64_MAX.
inline std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    r *= base;
  }
  return r;
}

inline void require_budget(std::uint64_t count) {
  const auto b = enumeration_budget();
  if (count > b) throw BudgetExceeded(count, b);
}

}  // namespace qpart
