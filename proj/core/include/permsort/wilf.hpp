#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permsort/permutation.hpp"
#include "permsort/power_series.hpp"

namespace permsort {

/// lambda_0 = e, lambda_1 = 1, lambda_{n+1} = 1 (-) rho_n.
Permutation lambda_family(int n);

/// rho_0 = e, rho_1 = 1, rho_{n+1} = lambda_n (+) 1.
Permutation rho_family(int n);

/// lambda_k (+) (1 (-) rho_{n-k-1}) for 0 <= k <= n-1; the empty
/// permutation when n = 0 (any k). Throws std::out_of_range otherwise.
Permutation wedge_pattern(int n, int k);

struct ClassBijection {
  bool holds = true;
  std::optional<Permutation> witness;  // first failing sigma (by size, then lex)
  int size_bound = 0;
};

/// Tests, for every sigma in Av(231) of size <= size_bound, that
/// sigma contains `pattern` iff P(sigma) contains P(pattern). A positive
/// answer is "verified up to size_bound", not a proof. Throws
/// PreconditionError if `pattern` contains 231.
ClassBijection p_bijects_classes(const Permutation& pattern, int size_bound);

/// Members of Av_n(231) passing p_bijects_classes at `size_bound`, sorted.
std::vector<Permutation> classify_patterns(int n, int size_bound);

/// F_1 = 1 and F_{m+1} = 1 / (1 - t F_m), truncated after t^order.
PowerSeries series_F(int n, int order);

struct ClassCountRow {
  int k = 0;
  Permutation pattern;
  std::vector<std::uint64_t> counts;  // |Av_m(231, pattern)| for m = 0..order
  bool matches = true;
};

struct ClassGfReport {
  int n = 0;
  int order = 0;
  PowerSeries series{0};
  std::vector<ClassCountRow> rows;
  std::vector<std::string> mismatches;

  bool passed() const noexcept { return mismatches.empty(); }
};

/// Compares the coefficients of F_n with brute-force class counts of
/// Av(231, wedge_pattern(n, k)) for every k.
ClassGfReport check_class_gf(int n, int order);

struct WilfPairReport {
  int n = 0;
  int k = 0;
  int partner_k = 0;  // n - k - 1
  Permutation pattern;
  Permutation partner_pattern;
  bool partner_formula_holds = true;  // R(P(pattern)) == partner_pattern
  bool self_paired = false;
  std::vector<std::uint64_t> source_counts;
  std::vector<std::uint64_t> target_counts;
  bool bijective = true;
  std::vector<std::string> failures;

  bool passed() const noexcept { return failures.empty(); }
};

/// Checks that sigma -> R(P(sigma)) maps Av(231, wedge(n, k)) bijectively
/// onto Av(231, wedge(n, n-k-1)) at every size 0..order.
WilfPairReport check_wilf_pair(int n, int k, int order);

}  // namespace permsort
