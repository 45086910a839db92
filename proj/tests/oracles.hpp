#pragma once

// Brute-force reference implementations used only by the tests. None of
// these call into the library's algorithms beyond the Permutation value
// type, so they can serve as independent oracles.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "permsort/permutation.hpp"

namespace oracle {

using permsort::Permutation;

inline std::vector<int> standardized(const std::vector<int>& v) {
  std::vector<int> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out;
  for (int x : v) {
    out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin()) + 1);
  }
  return out;
}

// Tries every index subset of the right size.
inline bool contains(const std::vector<int>& seq, const std::vector<int>& pattern) {
  const std::size_t n = seq.size();
  const std::size_t k = pattern.size();
  if (k == 0) return true;
  if (k > n) return false;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<int> sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (pick[i]) sub.push_back(seq[i]);
    }
    if (standardized(sub) == pattern) return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

inline bool contains(const Permutation& p, const Permutation& pattern) {
  return contains(std::vector<int>(p.begin(), p.end()), std::vector<int>(pattern.begin(), pattern.end()));
}

inline std::vector<Permutation> all_perms(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// The push/pop procedure with a single stack: before pushing x, pop every
// smaller element on top of the stack to the output.
inline Permutation stack_sort(const Permutation& p) {
  std::vector<int> stack, out;
  for (int x : p) {
    while (!stack.empty() && stack.back() < x) {
      out.push_back(stack.back());
      stack.pop_back();
    }
    stack.push_back(x);
  }
  while (!stack.empty()) {
    out.push_back(stack.back());
    stack.pop_back();
  }
  return Permutation(out);
}

inline Permutation reversed(const Permutation& p) {
  std::vector<int> v(p.begin(), p.end());
  std::reverse(v.begin(), v.end());
  return Permutation(v);
}

// Word in functional notation: the last letter acts first.
inline Permutation apply_word(const std::string& word, Permutation p) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) p = *it == 'S' ? stack_sort(p) : reversed(p);
  return p;
}

inline std::vector<Permutation> preimages_by_scan(const std::string& word, const Permutation& target) {
  std::vector<Permutation> out;
  for (const auto& theta : all_perms(target.size())) {
    if (apply_word(word, theta) == target) out.push_back(theta);
  }
  return out;
}

// image -> sorted list of preimages, over all of S_n.
inline std::map<Permutation, std::vector<Permutation>> fibers_by_scan(const std::string& word, int n) {
  std::map<Permutation, std::vector<Permutation>> out;
  for (const auto& theta : all_perms(n)) out[apply_word(word, theta)].push_back(theta);
  return out;
}

inline std::vector<Permutation> avoiders(const std::vector<Permutation>& basis, int n) {
  std::vector<Permutation> out;
  for (const auto& p : all_perms(n)) {
    if (std::none_of(basis.begin(), basis.end(), [&](const Permutation& b) { return contains(p, b); })) {
      out.push_back(p);
    }
  }
  return out;
}

inline std::uint64_t catalan(int n) {
  std::uint64_t c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

// 2 (3n)! / ((n+1)! (2n+1)!): permutations sorted by two passes of S.
inline std::uint64_t two_pass_count(int n) {
  auto fact = [](int m) {
    __int128 f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
  };
  return static_cast<std::uint64_t>(2 * fact(3 * n) / (fact(n + 1) * fact(2 * n + 1)));
}

// Positions (1-based) i such that every later entry is smaller.
inline std::vector<int> rl_maxima(const Permutation& p) {
  std::vector<int> out;
  for (int i = 0; i < p.size(); ++i) {
    bool is_max = true;
    for (int j = i + 1; j < p.size(); ++j) is_max = is_max && p[j] < p[i];
    if (is_max) out.push_back(i + 1);
  }
  return out;
}

inline std::vector<int> lr_maxima(const Permutation& p) {
  std::vector<int> out;
  for (int i = 0; i < p.size(); ++i) {
    bool is_max = true;
    for (int j = 0; j < i; ++j) is_max = is_max && p[j] < p[i];
    if (is_max) out.push_back(i + 1);
  }
  return out;
}

// Longest run n, n-1, ..., n-k+1 appearing as a subword, found by testing
// each candidate k with a subsequence scan.
inline int zeil(const Permutation& p) {
  const int n = p.size();
  int best = 0;
  for (int k = 1; k <= n; ++k) {
    int want = n;
    for (int x : p) {
      if (x == want && want > n - k) --want;
    }
    if (want == n - k) best = k;
  }
  return best;
}

inline int rzeil(const Permutation& p) {
  const int n = p.size();
  int best = 0;
  for (int k = 1; k <= n; ++k) {
    int want = n - k + 1;
    for (int x : p) {
      if (x == want && want <= n) ++want;
    }
    if (want == n + 1) best = k;
  }
  return best;
}

}  // namespace oracle
