#pragma once

#include <string>
#include <vector>

#include "permsort/permutation.hpp"

namespace permsort {

/// Statistics tracked for equidistribution checks. Positions are 1-based.
/// The list is open-ended; fields derived from the up-down word (descent
/// set, major index, peaks) are kept alongside it for reporting.
struct StatVector {
  std::vector<int> lr_maxima_positions;
  std::vector<int> rl_maxima_positions;
  std::string updown_word;  // over {u, d}, length n - 1
  std::vector<int> descent_set;
  int major_index = 0;
  int peak_count = 0;
  int inversions = 0;
  int zeil = 0;
  int rzeil = 0;

  friend bool operator==(const StatVector&, const StatVector&) = default;
};

std::vector<int> lr_maxima_positions(const Permutation& perm);
std::vector<int> rl_maxima_positions(const Permutation& perm);
std::string updown_word(const Permutation& perm);
std::vector<int> descent_set(const Permutation& perm);
int major_index(const Permutation& perm);
int peak_count(const Permutation& perm);
int inversions(const Permutation& perm);

/// Largest k such that n, n-1, ..., n-k+1 appear in this order. 0 for the
/// empty permutation.
int zeil(const Permutation& perm);

/// Largest k such that n-k+1, ..., n-1, n appear in this order.
int rzeil(const Permutation& perm);

StatVector stats(const Permutation& perm);

/// Names accepted by stat_key, in reporting order.
const std::vector<std::string>& stat_names();

/// Canonical text form of one named statistic; used for multiset
/// comparisons so that equal keys mean equal values. Throws
/// std::invalid_argument on an unknown name.
std::string stat_key(const StatVector& sv, const std::string& name);

}  // namespace permsort
