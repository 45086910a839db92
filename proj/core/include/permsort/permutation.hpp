#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permsort/errors.hpp"

namespace permsort {

/// A permutation of [n] in one-line notation. Values are 1-based; indexing
/// through operator[] is 0-based. The default-constructed value is the
/// empty permutation.
class Permutation {
 public:
  Permutation() = default;

  /// Throws InvalidPermutation unless `values` is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> values);
  Permutation(std::initializer_list<int> values);

  static Permutation identity(int n);

  /// Order-isomorphic permutation of any sequence of distinct integers.
  static Permutation standardize(std::span<const int> values);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  bool empty() const noexcept { return values_.empty(); }

  int operator[](std::size_t index) const { return values_[index]; }
  std::span<const int> values() const noexcept { return values_; }

  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  /// pos[v] = 0-based index of value v; pos[0] is unused.
  std::vector<int> positions() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

Permutation reverse(const Permutation& perm);

/// alpha (+) beta: beta shifted above alpha and placed after it.
Permutation direct_sum(const Permutation& alpha, const Permutation& beta);

/// alpha (-) beta: alpha shifted above beta and placed before it.
Permutation skew_sum(const Permutation& alpha, const Permutation& beta);

/// (outer o inner)(i) = outer(inner(i)).
Permutation compose(const Permutation& outer, const Permutation& inner);

Permutation inverse(const Permutation& perm);

/// Reads space- and/or comma-separated integers, standardizing them.
/// "", "e" and "ε" denote the empty permutation.
Permutation parse_permutation(std::string_view text);

/// Space separated; the empty permutation renders as "e".
std::string to_string(const Permutation& perm);

std::ostream& operator<<(std::ostream& os, const Permutation& perm);

}  // namespace permsort
