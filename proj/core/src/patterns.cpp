#include "permsort/patterns.hpp"

#include <algorithm>

namespace permsort {

namespace {

// Extends a partial embedding of pattern[0..depth) whose last chosen index
// is `from - 1`. `chosen[j]` holds the sequence value matched to pattern[j].
class Embedder {
 public:
  Embedder(std::span<const int> sequence, const Permutation& pattern)
      : seq_(sequence), pat_(pattern), chosen_(pattern.values().size()) {}

  bool search(std::size_t depth, std::size_t from) {
    const std::size_t k = chosen_.size();
    if (depth == k) return true;
    // Not enough positions left to finish the embedding.
    for (std::size_t i = from; i + (k - depth) <= seq_.size(); ++i) {
      if (!consistent(depth, seq_[i])) continue;
      chosen_[depth] = seq_[i];
      if (search(depth + 1, i + 1)) return true;
    }
    return false;
  }

 private:
  bool consistent(std::size_t depth, int value) const {
    const int p = pat_[depth];
    for (std::size_t j = 0; j < depth; ++j) {
      if ((pat_[j] < p) != (chosen_[j] < value)) return false;
    }
    return true;
  }

  std::span<const int> seq_;
  const Permutation& pat_;
  std::vector<int> chosen_;
};

}  // namespace

bool contains(std::span<const int> sequence, const Permutation& pattern) {
  if (pattern.empty()) return true;
  if (pattern.values().size() > sequence.size()) return false;
  return Embedder(sequence, pattern).search(0, 0);
}

bool avoids_all(const Permutation& perm, std::span<const Permutation> basis) {
  return std::none_of(basis.begin(), basis.end(),
                      [&](const Permutation& b) { return contains(perm, b); });
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

Permutation unrank_lex(int n, std::uint64_t rank) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[i] = i + 1;
  std::vector<int> out;
  out.reserve(pool.size());
  for (int remaining = n; remaining > 0; --remaining) {
    const auto block = factorial(remaining - 1);
    const auto idx = static_cast<std::size_t>(rank / block);
    rank %= block;
    out.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return Permutation(std::move(out));
}

PermutationRange::PermutationRange(int n) : PermutationRange(n, 0, factorial(n)) {}

PermutationRange::PermutationRange(int n, std::uint64_t first, std::uint64_t last)
    : n_(n), first_(first), last_(std::min(last, factorial(n))) {
  if (first_ > last_) first_ = last_;
}

PermutationRange::iterator PermutationRange::begin() const {
  if (first_ == last_) return end();
  return iterator(unrank_lex(n_, first_), first_);
}

PermutationRange::iterator PermutationRange::end() const { return iterator({}, last_); }

PermutationRange::iterator& PermutationRange::iterator::operator++() {
  std::vector<int> v(current_.begin(), current_.end());
  std::next_permutation(v.begin(), v.end());
  current_ = Permutation(std::move(v));
  ++rank_;
  return *this;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  for (const auto& p : enumerate(n)) out.push_back(p);
  return out;
}

void for_each_avoider(std::span<const Permutation> basis, int n,
                      const std::function<void(const Permutation&)>& visit) {
  std::vector<int> prefix;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  prefix.reserve(static_cast<std::size_t>(n));

  auto prefix_ok = [&] {
    return std::none_of(basis.begin(), basis.end(),
                        [&](const Permutation& b) { return contains(prefix, b); });
  };

  std::function<void()> extend = [&] {
    if (static_cast<int>(prefix.size()) == n) {
      visit(Permutation(prefix));
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      prefix.push_back(v);
      if (prefix_ok()) {
        used[v] = true;
        extend();
        used[v] = false;
      }
      prefix.pop_back();
    }
  };
  if (n == 0) {
    if (prefix_ok()) visit(Permutation{});
    return;
  }
  extend();
}

std::vector<Permutation> enumerate_avoiders(std::span<const Permutation> basis, int n) {
  std::vector<Permutation> out;
  for_each_avoider(basis, n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

}  // namespace permsort
