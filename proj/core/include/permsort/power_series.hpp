#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace permsort {

/// 128-bit signed integer that throws std::overflow_error instead of
/// wrapping.
using Coefficient = boost::multiprecision::checked_int128_t;

/// Formal power series in t truncated after t^order, with exact integer
/// coefficients. Binary operations require equal orders.
class PowerSeries {
 public:
  explicit PowerSeries(int order);
  explicit PowerSeries(std::vector<Coefficient> coefficients);

  static PowerSeries constant(Coefficient value, int order);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Coefficient& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  Coefficient& operator[](int i) { return coeffs_.at(static_cast<std::size_t>(i)); }
  const std::vector<Coefficient>& coefficients() const noexcept { return coeffs_; }

  PowerSeries operator+(const PowerSeries& other) const;
  PowerSeries operator-(const PowerSeries& other) const;
  PowerSeries operator*(const PowerSeries& other) const;

  /// t * this, truncated.
  PowerSeries times_t() const;

  /// Multiplicative inverse; the constant term must be 1 or -1, otherwise
  /// std::domain_error.
  PowerSeries reciprocal() const;

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  void require_same_order(const PowerSeries& other) const;

  std::vector<Coefficient> coeffs_;
};

/// Space-separated coefficient list, lowest degree first.
std::string to_string(const PowerSeries& series);

/// Decimal strings of the coefficients, lowest degree first.
std::vector<std::string> coefficient_strings(const PowerSeries& series);

}  // namespace permsort
