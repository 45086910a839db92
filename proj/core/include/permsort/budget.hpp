#pragma once

#include <atomic>
#include <cstdint>

#include "permsort/errors.hpp"

namespace permsort {

/// Shared counter of generated nodes (trees or permutations) for preimage
/// searches. Safe to charge from several threads.
class Budget {
 public:
  static constexpr std::uint64_t kDefaultLimit = 50'000'000;

  explicit Budget(std::uint64_t limit = kDefaultLimit) : limit_(limit) {}

  Budget(const Budget&) = delete;
  Budget& operator=(const Budget&) = delete;

  void charge(std::uint64_t nodes) {
    const auto used = used_.fetch_add(nodes, std::memory_order_relaxed) + nodes;
    if (used > limit_) throw BudgetExceeded(limit_);
  }

  std::uint64_t limit() const noexcept { return limit_; }
  std::uint64_t used() const noexcept { return used_.load(std::memory_order_relaxed); }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> used_{0};
};

}  // namespace permsort
