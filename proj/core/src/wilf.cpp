#include "permsort/wilf.hpp"

#include <algorithm>
#include <stdexcept>

#include "permsort/bijection.hpp"
#include "permsort/errors.hpp"
#include "permsort/patterns.hpp"

namespace permsort {

namespace {

const Permutation kPattern231{2, 3, 1};

struct Sample {
  Permutation sigma;
  Permutation image;  // P(sigma)
};

std::vector<Sample> av231_with_images(int size_bound) {
  std::vector<Sample> out;
  const Permutation basis[] = {kPattern231};
  for (int m = 0; m <= size_bound; ++m) {
    for_each_avoider(basis, m, [&](const Permutation& s) { out.push_back({s, apply_P(s)}); });
  }
  return out;
}

ClassBijection bijects_over(const Permutation& pattern, const std::vector<Sample>& sample,
                            int size_bound) {
  const auto p_pattern = apply_P(pattern);
  ClassBijection result;
  result.size_bound = size_bound;
  for (const auto& s : sample) {
    if (contains(s.sigma, pattern) != contains(s.image, p_pattern)) {
      result.holds = false;
      result.witness = s.sigma;
      break;
    }
  }
  return result;
}

std::vector<std::uint64_t> class_counts(const Permutation& pattern, int order) {
  const Permutation basis[] = {kPattern231, pattern};
  std::vector<std::uint64_t> counts;
  for (int m = 0; m <= order; ++m) {
    std::uint64_t c = 0;
    for_each_avoider(basis, m, [&](const Permutation&) { ++c; });
    counts.push_back(c);
  }
  return counts;
}

}  // namespace

Permutation lambda_family(int n) {
  if (n < 0) throw std::out_of_range("lambda_family needs n >= 0");
  if (n == 0) return {};
  return skew_sum(Permutation{1}, rho_family(n - 1));
}

Permutation rho_family(int n) {
  if (n < 0) throw std::out_of_range("rho_family needs n >= 0");
  if (n == 0) return {};
  return direct_sum(lambda_family(n - 1), Permutation{1});
}

Permutation wedge_pattern(int n, int k) {
  if (n == 0) return {};
  if (n < 0 || k < 0 || k > n - 1) {
    throw std::out_of_range("wedge_pattern needs 0 <= k <= n-1 (n = " + std::to_string(n) +
                            ", k = " + std::to_string(k) + ")");
  }
  return direct_sum(lambda_family(k), skew_sum(Permutation{1}, rho_family(n - k - 1)));
}

ClassBijection p_bijects_classes(const Permutation& pattern, int size_bound) {
  if (contains(pattern, kPattern231)) {
    throw PreconditionError("pattern " + to_string(pattern) + " contains 231");
  }
  return bijects_over(pattern, av231_with_images(size_bound), size_bound);
}

std::vector<Permutation> classify_patterns(int n, int size_bound) {
  const auto sample = av231_with_images(size_bound);
  std::vector<Permutation> out;
  const Permutation basis[] = {kPattern231};
  for_each_avoider(basis, n, [&](const Permutation& pattern) {
    if (bijects_over(pattern, sample, size_bound).holds) out.push_back(pattern);
  });
  return out;
}

PowerSeries series_F(int n, int order) {
  if (n < 1) throw std::out_of_range("series_F needs n >= 1");
  auto f = PowerSeries::constant(1, order);
  const auto one = PowerSeries::constant(1, order);
  for (int m = 1; m < n; ++m) f = (one - f.times_t()).reciprocal();
  return f;
}

ClassGfReport check_class_gf(int n, int order) {
  ClassGfReport report;
  report.n = n;
  report.order = order;
  report.series = series_F(n, order);
  for (int k = 0; k < n; ++k) {
    ClassCountRow row;
    row.k = k;
    row.pattern = wedge_pattern(n, k);
    row.counts = class_counts(row.pattern, order);
    for (int m = 0; m <= order; ++m) {
      if (Coefficient(row.counts[m]) != report.series[m]) {
        row.matches = false;
        report.mismatches.push_back("k=" + std::to_string(k) + " size " + std::to_string(m) +
                                    ": class has " + std::to_string(row.counts[m]) +
                                    ", F_n coefficient " + report.series[m].str());
      }
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

WilfPairReport check_wilf_pair(int n, int k, int order) {
  WilfPairReport report;
  report.n = n;
  report.k = k;
  report.partner_k = n - k - 1;
  report.pattern = wedge_pattern(n, k);
  report.partner_pattern = wedge_pattern(n, report.partner_k);
  report.self_paired = report.partner_k == k;
  report.partner_formula_holds = reverse(apply_P(report.pattern)) == report.partner_pattern;
  if (!report.partner_formula_holds) {
    report.failures.push_back("R(P(" + to_string(report.pattern) + ")) != " +
                              to_string(report.partner_pattern));
  }

  const Permutation source_basis[] = {kPattern231, report.pattern};
  const Permutation target_basis[] = {kPattern231, report.partner_pattern};
  for (int m = 0; m <= order; ++m) {
    const auto source = enumerate_avoiders(source_basis, m);
    const auto target = enumerate_avoiders(target_basis, m);
    report.source_counts.push_back(source.size());
    report.target_counts.push_back(target.size());
    std::vector<Permutation> images;
    images.reserve(source.size());
    for (const auto& s : source) images.push_back(reverse(apply_P(s)));
    std::sort(images.begin(), images.end());
    if (images != target) {
      report.bijective = false;
      report.failures.push_back("R o P is not a bijection at size " + std::to_string(m));
    }
  }
  return report;
}

}  // namespace permsort
