#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permsort/budget.hpp"
#include "permsort/operators.hpp"
#include "permsort/permutation.hpp"

namespace permsort {

struct AnalysisOptions {
  unsigned jobs = 1;  // 0 = hardware concurrency
  std::uint64_t node_budget = Budget::kDefaultLimit;
};

enum class Status { kPass, kFail, kScaleLimit };

std::string to_string(Status status);
Status status_from_string(const std::string& text);

struct CheckResult {
  std::string name;
  bool passed = true;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

/// Outcome of an exhaustive check at one size. `counterexamples` is
/// non-empty exactly when some check failed; a scale-limit abort carries
/// its reason in `message` instead.
struct VerificationReport {
  std::string kind;  // "theorem" or "respects_P"
  OperatorExpr op;
  int size = 0;
  Status status = Status::kPass;
  std::uint64_t count_SA = 0;
  std::uint64_t count_SRA = 0;
  std::vector<CheckResult> equidistributed_stats;
  bool phi_bijective = true;
  std::vector<CheckResult> phi_pointwise_preserved;
  std::vector<std::string> counterexamples;
  std::string message;

  bool passed() const noexcept { return status == Status::kPass; }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Permutations of size n sorted by S o A, i.e. with A(theta) avoiding 231,
/// in lexicographic order. Built as the union of A^{-1}(pi) over
/// pi in Av_n(231).
std::vector<Permutation> sorted_set(const OperatorExpr& op, int n,
                                    const AnalysisOptions& options = {});

/// |sorted_set(op, n)| for n = 1..n_max.
std::vector<std::uint64_t> count_sorted(const OperatorExpr& op, int n_max,
                                        const AnalysisOptions& options = {});

/// Compares the sets sorted by S o A and S o R o A at size n: equal counts,
/// Phi_A bijective between them, pointwise preservation of the left-to-right
/// and right-to-left maxima positions and the up-down word (plus zeil when
/// A = A0 o S and rzeil when A = B0 o S o R o S^k), and equidistribution of
/// those statistics and the ones derived from the up-down word.
VerificationReport verify_theorem(const OperatorExpr& op, int n,
                                  const AnalysisOptions& options = {});

/// For every pi in Av_n(231) in the image of A: A(Phi_A(theta)) = P(pi),
/// tin(Phi_A(theta)) = lambda_pi(tin(theta)), and Phi_A bijects A^{-1}(pi)
/// onto A^{-1}(P(pi)).
VerificationReport verify_respects_P(const OperatorExpr& op, int n,
                                     const AnalysisOptions& options = {});

/// Statistics checked pointwise by verify_theorem for this operator.
std::vector<std::string> preserved_stat_names(const OperatorExpr& op);

}  // namespace permsort
