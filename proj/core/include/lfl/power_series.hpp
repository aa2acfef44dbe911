#pragma once

#include <string>
#include <vector>

#include "lfl/laurent_poly.hpp"

namespace lfl {

/// Truncated power series c_0 + c_1 t + ... + c_N t^N; N is the truncation order.
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t order) : coeffs_(order + 1) {}
  explicit PowerSeries(std::vector<Scalar> coeffs);

  static PowerSeries from_poly(const LaurentPoly& p, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Scalar& operator[](std::size_t k) const { return coeffs_.at(k); }
  Scalar& operator[](std::size_t k) { return coeffs_.at(k); }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  PowerSeries truncated(std::size_t order) const;
  /// Polynomial c_0 + ... + c_N.
  LaurentPoly to_poly() const;

  PowerSeries& operator+=(const PowerSeries& o);
  PowerSeries& operator-=(const PowerSeries& o);
  PowerSeries& operator*=(const Scalar& c);
  friend PowerSeries operator+(PowerSeries x, const PowerSeries& y) { return x += y; }
  friend PowerSeries operator-(PowerSeries x, const PowerSeries& y) { return x -= y; }
  friend PowerSeries operator*(PowerSeries x, const Scalar& c) { return x *= c; }
  friend PowerSeries operator*(const PowerSeries& x, const PowerSeries& y);
  /// Product with a polynomial, truncated at this series' order.
  friend PowerSeries operator*(const PowerSeries& x, const LaurentPoly& p);
  /// Equal through the common truncation order.
  friend bool operator==(const PowerSeries& x, const PowerSeries& y);

 private:
  std::vector<Scalar> coeffs_;
};

}  // namespace lfl
