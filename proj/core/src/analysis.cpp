#include "permsort/analysis.hpp"

#include <algorithm>
#include <stdexcept>

#include "permsort/bijection.hpp"
#include "permsort/parallel.hpp"
#include "permsort/patterns.hpp"
#include "permsort/stats.hpp"
#include "permsort/tree.hpp"

namespace permsort {

namespace {

constexpr std::size_t kMaxCounterexamples = 20;

const Permutation& pattern_231() {
  static const Permutation p{2, 3, 1};
  return p;
}

std::vector<Permutation> avoiders_231(int n) {
  const Permutation basis[] = {pattern_231()};
  return enumerate_avoiders(basis, n);
}

void add_counterexample(VerificationReport& report, std::string text) {
  report.status = Status::kFail;
  if (report.counterexamples.size() < kMaxCounterexamples) {
    report.counterexamples.push_back(std::move(text));
  }
}

CheckResult& check_named(std::vector<CheckResult>& checks, const std::string& name) {
  for (auto& c : checks) {
    if (c.name == name) return c;
  }
  checks.push_back({name, true});
  return checks.back();
}

std::vector<std::string> equidistribution_names(const OperatorExpr& op) {
  auto names = preserved_stat_names(op);
  for (const char* derived : {"descent_set", "major_index", "peak_count"}) {
    names.emplace_back(derived);
  }
  return names;
}

}  // namespace

std::string to_string(Status status) {
  switch (status) {
    case Status::kPass:
      return "pass";
    case Status::kFail:
      return "fail";
    case Status::kScaleLimit:
      return "scale_limit";
  }
  return "fail";
}

Status status_from_string(const std::string& text) {
  if (text == "pass") return Status::kPass;
  if (text == "fail") return Status::kFail;
  if (text == "scale_limit") return Status::kScaleLimit;
  throw std::invalid_argument("unknown status: " + text);
}

std::vector<std::string> preserved_stat_names(const OperatorExpr& op) {
  std::vector<std::string> names = {"lr_maxima_positions", "rl_maxima_positions", "updown_word"};
  if (op.ends_with_S()) names.emplace_back("zeil");
  if (op.has_SR_before_trailing_S()) names.emplace_back("rzeil");
  return names;
}

std::vector<Permutation> sorted_set(const OperatorExpr& op, int n, const AnalysisOptions& options) {
  Budget budget(options.node_budget);
  const auto targets = avoiders_231(n);
  auto fibers = parallel_map(targets.size(), options.jobs, [&](std::size_t i) {
    return preimages(op, targets[i], n, &budget);
  });
  std::vector<Permutation> out;
  for (auto& fiber : fibers) {
    out.insert(out.end(), std::make_move_iterator(fiber.begin()),
               std::make_move_iterator(fiber.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> count_sorted(const OperatorExpr& op, int n_max,
                                        const AnalysisOptions& options) {
  std::vector<std::uint64_t> counts;
  for (int n = 1; n <= n_max; ++n) counts.push_back(sorted_set(op, n, options).size());
  return counts;
}

VerificationReport verify_theorem(const OperatorExpr& op, int n, const AnalysisOptions& options) {
  VerificationReport report;
  report.kind = "theorem";
  report.op = op;
  report.size = n;

  std::vector<Permutation> sorted_a, sorted_ra;
  try {
    sorted_a = sorted_set(op, n, options);
    sorted_ra = sorted_set(op.with_reversal(), n, options);
  } catch (const BudgetExceeded& e) {
    report.status = Status::kScaleLimit;
    report.message = e.what();
    return report;
  }
  report.count_SA = sorted_a.size();
  report.count_SRA = sorted_ra.size();
  if (report.count_SA != report.count_SRA) {
    add_counterexample(report, "count mismatch: " + std::to_string(report.count_SA) + " sorted by S" +
                                   op.to_string() + " vs " + std::to_string(report.count_SRA) +
                                   " sorted by SR" + op.to_string());
  }

  auto images = parallel_map(sorted_a.size(), options.jobs,
                             [&](std::size_t i) { return phi(op, sorted_a[i]); });

  // Bijectivity, checked constructively.
  auto sorted_images = images;
  std::sort(sorted_images.begin(), sorted_images.end());
  if (sorted_images != sorted_ra) {
    report.phi_bijective = false;
    const auto dup = std::adjacent_find(sorted_images.begin(), sorted_images.end());
    if (dup != sorted_images.end()) {
      add_counterexample(report, "phi not injective: image " + to_string(*dup) + " hit twice");
    }
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (!std::binary_search(sorted_ra.begin(), sorted_ra.end(), images[i])) {
        add_counterexample(report, "phi(" + to_string(sorted_a[i]) + ") = " + to_string(images[i]) +
                                       " is not sorted by SR" + op.to_string());
        break;
      }
    }
    if (report.counterexamples.empty()) add_counterexample(report, "phi image differs from target set");
  }

  const auto pointwise = preserved_stat_names(op);
  const auto equi = equidistribution_names(op);
  for (const auto& name : pointwise) check_named(report.phi_pointwise_preserved, name);
  for (const auto& name : equi) check_named(report.equidistributed_stats, name);

  std::vector<StatVector> stats_a, stats_image, stats_ra;
  stats_a.reserve(sorted_a.size());
  for (const auto& p : sorted_a) stats_a.push_back(stats(p));
  for (const auto& p : images) stats_image.push_back(stats(p));
  for (const auto& p : sorted_ra) stats_ra.push_back(stats(p));

  for (const auto& name : pointwise) {
    auto& check = check_named(report.phi_pointwise_preserved, name);
    for (std::size_t i = 0; i < sorted_a.size(); ++i) {
      const auto before = stat_key(stats_a[i], name);
      const auto after = stat_key(stats_image[i], name);
      if (before != after) {
        check.passed = false;
        add_counterexample(report, name + " changed: " + to_string(sorted_a[i]) + " [" + before +
                                       "] -> " + to_string(images[i]) + " [" + after + "]");
        break;
      }
    }
  }

  for (const auto& name : equi) {
    std::vector<std::string> left, right;
    for (const auto& sv : stats_a) left.push_back(stat_key(sv, name));
    for (const auto& sv : stats_ra) right.push_back(stat_key(sv, name));
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    if (left != right) {
      check_named(report.equidistributed_stats, name).passed = false;
      add_counterexample(report, name + " not equidistributed at size " + std::to_string(n));
    }
  }
  return report;
}

namespace {

struct FiberResult {
  std::uint64_t source = 0;
  std::uint64_t target = 0;
  bool image_is_P = true;
  bool tin_relabeled = true;
  bool bijective = true;
  std::vector<std::string> failures;
};

FiberResult check_fiber(const OperatorExpr& op, const Permutation& pi, int n, Budget& budget) {
  FiberResult r;
  const auto fiber = preimages(op, pi, n, &budget);
  if (fiber.empty()) return r;
  const auto p_pi = apply_P(pi);
  const auto lambda = lambda_of(pi);
  const auto target = preimages(op, p_pi, n, &budget);
  r.source = fiber.size();
  r.target = target.size();

  std::vector<Permutation> images;
  images.reserve(fiber.size());
  for (const auto& theta : fiber) {
    const auto image = phi(op, theta);
    if (apply(op, image) != p_pi) {
      if (r.image_is_P) {
        r.failures.push_back("A(phi(" + to_string(theta) + ")) != P(" + to_string(pi) + ")");
      }
      r.image_is_P = false;
    }
    if (lambda.apply(tin(theta)) != tin(image)) {
      if (r.tin_relabeled) {
        r.failures.push_back("tin(phi(" + to_string(theta) + ")) != lambda(tin(theta))");
      }
      r.tin_relabeled = false;
    }
    images.push_back(image);
  }
  std::sort(images.begin(), images.end());
  if (images != target) {
    r.bijective = false;
    r.failures.push_back("phi does not biject A^-1(" + to_string(pi) + ") onto A^-1(" +
                         to_string(p_pi) + ")");
  }
  return r;
}

}  // namespace

VerificationReport verify_respects_P(const OperatorExpr& op, int n, const AnalysisOptions& options) {
  VerificationReport report;
  report.kind = "respects_P";
  report.op = op;
  report.size = n;
  auto image_ok = true;
  auto tin_ok = true;

  Budget budget(options.node_budget);
  const auto targets = avoiders_231(n);
  std::vector<FiberResult> fibers;
  try {
    fibers = parallel_map(targets.size(), options.jobs, [&](std::size_t i) {
      return check_fiber(op, targets[i], n, budget);
    });
  } catch (const BudgetExceeded& e) {
    report.status = Status::kScaleLimit;
    report.message = e.what();
    return report;
  }

  for (const auto& f : fibers) {
    report.count_SA += f.source;
    report.count_SRA += f.target;
    image_ok = image_ok && f.image_is_P;
    tin_ok = tin_ok && f.tin_relabeled;
    report.phi_bijective = report.phi_bijective && f.bijective;
    for (const auto& text : f.failures) add_counterexample(report, text);
  }
  report.phi_pointwise_preserved = {{"image_is_P", image_ok}, {"tin_relabeled", tin_ok}};
  if (report.count_SA != report.count_SRA) {
    add_counterexample(report, "fiber totals differ: " + std::to_string(report.count_SA) + " vs " +
                                   std::to_string(report.count_SRA));
  }
  return report;
}

}  // namespace permsort
