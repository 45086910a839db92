#pragma once

#include <cstdint>
#include <functional>
#include <iterator>
#include <span>
#include <vector>

#include "permsort/permutation.hpp"

namespace permsort {

/// True iff some subsequence of `sequence` is order-isomorphic to `pattern`.
/// Works on any sequence of distinct integers; every sequence contains the
/// empty pattern.
bool contains(std::span<const int> sequence, const Permutation& pattern);

inline bool contains(const Permutation& perm, const Permutation& pattern) {
  return contains(perm.values(), pattern);
}

bool avoids_all(const Permutation& perm, std::span<const Permutation> basis);

/// Lexicographic range over the permutations of [n] with ranks in
/// [first, last). Ranks index the full lexicographic order, so disjoint rank
/// ranges can be handed to separate workers.
class PermutationRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;
    using pointer = const Permutation*;
    using reference = const Permutation&;

    iterator() = default;

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& a, const iterator& b) { return a.rank_ == b.rank_; }

   private:
    friend class PermutationRange;
    iterator(Permutation current, std::uint64_t rank) : current_(std::move(current)), rank_(rank) {}

    Permutation current_;
    std::uint64_t rank_ = 0;
  };

  explicit PermutationRange(int n);
  PermutationRange(int n, std::uint64_t first, std::uint64_t last);

  iterator begin() const;
  iterator end() const;
  std::uint64_t size() const noexcept { return last_ - first_; }

 private:
  int n_;
  std::uint64_t first_;
  std::uint64_t last_;
};

std::uint64_t factorial(int n);

/// The permutation of [n] with the given 0-based lexicographic rank.
Permutation unrank_lex(int n, std::uint64_t rank);

/// All n! permutations of [n] in lexicographic order.
inline PermutationRange enumerate(int n) { return PermutationRange(n); }

std::vector<Permutation> all_permutations(int n);

/// Visits Av(basis) at size n in lexicographic order. Prefixes that already
/// contain a basis element are pruned, since containment is inherited by
/// every extension.
void for_each_avoider(std::span<const Permutation> basis, int n,
                      const std::function<void(const Permutation&)>& visit);

std::vector<Permutation> enumerate_avoiders(std::span<const Permutation> basis, int n);

inline std::vector<Permutation> enumerate_avoiders(std::initializer_list<Permutation> basis,
                                                   int n) {
  return enumerate_avoiders(std::span<const Permutation>(basis.begin(), basis.size()), n);
}

}  // namespace permsort
