#include "lfl/power_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace lfl {

PowerSeries::PowerSeries(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("power series needs at least one coefficient");
}

PowerSeries PowerSeries::from_poly(const LaurentPoly& p, std::size_t order) {
  if (!p.is_polynomial()) throw std::domain_error("pole at origin");
  PowerSeries s(order);
  for (const auto& [e, c] : p.terms()) {
    if (e <= static_cast<long>(order)) s[static_cast<std::size_t>(e)] = c;
  }
  return s;
}

bool PowerSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c.is_zero(); });
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
  if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
  return PowerSeries(std::vector<Scalar>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

LaurentPoly PowerSeries::to_poly() const { return LaurentPoly::from_coefficients(coeffs_); }

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
  std::size_t n = std::min(order(), o.order());
  coeffs_.resize(n + 1);
  for (std::size_t k = 0; k <= n; ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
  std::size_t n = std::min(order(), o.order());
  coeffs_.resize(n + 1);
  for (std::size_t k = 0; k <= n; ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const Scalar& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

PowerSeries operator*(const PowerSeries& x, const PowerSeries& y) {
  std::size_t n = std::min(x.order(), y.order());
  PowerSeries r(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (x.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) r.coeffs_[i + j] += x.coeffs_[i] * y.coeffs_[j];
  }
  return r;
}

PowerSeries operator*(const PowerSeries& x, const LaurentPoly& p) {
  return x * PowerSeries::from_poly(p, x.order());
}

bool operator==(const PowerSeries& x, const PowerSeries& y) {
  std::size_t n = std::min(x.order(), y.order());
  for (std::size_t k = 0; k <= n; ++k) {
    if (x.coeffs_[k] != y.coeffs_[k]) return false;
  }
  return true;
}

}  // namespace lfl
