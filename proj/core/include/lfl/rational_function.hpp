#pragma once

#include <string>
#include <vector>

#include "lfl/laurent_poly.hpp"
#include "lfl/power_series.hpp"

namespace lfl {

/// num/den in reduced form: gcd(num, den) is a unit and den(0) = 1.
/// Powers of t are moved into the numerator, so den is a polynomial with
/// nonzero constant term.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(1) {}
  RationalFunction(LaurentPoly num, LaurentPoly den);  // NOLINT
  RationalFunction(LaurentPoly num)  // NOLINT(google-explicit-constructor)
      : RationalFunction(std::move(num), LaurentPoly(1)) {}

  /// 1 / P.
  static RationalFunction reciprocal(const LaurentPoly& p) { return {LaurentPoly(1), p}; }

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator+(const RationalFunction& o) const;
  friend bool operator==(const RationalFunction& x, const RationalFunction& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend bool operator!=(const RationalFunction& x, const RationalFunction& y) { return !(x == y); }

  std::string str() const;

 private:
  LaurentPoly num_;
  LaurentPoly den_;
};

/// Taylor expansion at t = 0 through `order`. Throws "pole at origin".
PowerSeries series_from_rational(const RationalFunction& r, std::size_t order);

/// Padé recognition through a Hankel solve: finds r = P/Q with deg P <= num_deg,
/// deg Q <= den_deg, Q(0) = 1, whose expansion equals s through its full order.
RationalFunction recognize_rational(const PowerSeries& s, std::size_t num_deg, std::size_t den_deg);

/// Normalised generator of the fractional ideal of C[t, t^{-1}] spanned by fs.
RationalFunction ideal_generator(const std::vector<RationalFunction>& fs);

}  // namespace lfl
