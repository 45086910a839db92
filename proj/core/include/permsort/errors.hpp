#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace permsort {

// Malformed permutation input (duplicates, values outside 1..n, bad text).
class InvalidPermutation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation was called outside its domain, e.g. P on a 231-containing
// permutation.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Raised when a preimage computation produces more nodes than allowed.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t limit)
      : std::runtime_error("scale limit: node budget of " + std::to_string(limit) +
                           " exceeded"),
        limit_(limit) {}

  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
};

}  // namespace permsort
