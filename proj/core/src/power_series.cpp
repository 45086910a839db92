#include "permsort/power_series.hpp"

#include <stdexcept>

namespace permsort {

PowerSeries::PowerSeries(int order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Coefficient(0));
}

PowerSeries::PowerSeries(std::vector<Coefficient> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
}

PowerSeries PowerSeries::constant(Coefficient value, int order) {
  PowerSeries s(order);
  s.coeffs_[0] = value;
  return s;
}

void PowerSeries::require_same_order(const PowerSeries& other) const {
  if (order() != other.order()) throw std::invalid_argument("series orders differ");
}

PowerSeries PowerSeries::operator+(const PowerSeries& other) const {
  require_same_order(other);
  PowerSeries out(order());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] + other.coeffs_[i];
  return out;
}

PowerSeries PowerSeries::operator-(const PowerSeries& other) const {
  require_same_order(other);
  PowerSeries out(order());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] - other.coeffs_[i];
  return out;
}

PowerSeries PowerSeries::operator*(const PowerSeries& other) const {
  require_same_order(other);
  PowerSeries out(order());
  const auto n = coeffs_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) out.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  return out;
}

PowerSeries PowerSeries::times_t() const {
  PowerSeries out(order());
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i - 1];
  return out;
}

PowerSeries PowerSeries::reciprocal() const {
  const Coefficient a0 = coeffs_[0];
  if (a0 != 1 && a0 != -1) {
    throw std::domain_error("reciprocal needs a unit constant term");
  }
  PowerSeries out(order());
  out.coeffs_[0] = a0;  // 1/a0 == a0 for a0 = +-1
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    Coefficient acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += coeffs_[i] * out.coeffs_[k - i];
    out.coeffs_[k] = -a0 * acc;
  }
  return out;
}

std::vector<std::string> coefficient_strings(const PowerSeries& series) {
  std::vector<std::string> out;
  for (const auto& c : series.coefficients()) out.push_back(c.str());
  return out;
}

std::string to_string(const PowerSeries& series) {
  std::string out;
  for (const auto& c : series.coefficients()) {
    if (!out.empty()) out += ' ';
    out += c.str();
  }
  return out;
}

}  // namespace permsort
