#pragma once

#include <map>
#include <string>
#include <utility>

#include "lfl/scalar.hpp"

namespace lfl {

/// Finite Laurent polynomial in t over Scalar. Zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(Scalar constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long constant) : LaurentPoly(Scalar(constant)) {}  // NOLINT

  /// c * t^k.
  static LaurentPoly monomial(Scalar c, long k);
  /// c0 + c1 t + ... from a coefficient list.
  static LaurentPoly from_coefficients(const std::vector<Scalar>& coeffs);
  /// 1 - a t^d.
  static LaurentPoly one_minus(const Scalar& a, long d = 1);

  bool is_zero() const { return terms_.empty(); }
  const std::map<long, Scalar>& terms() const { return terms_; }
  Scalar coeff(long k) const;
  void set_coeff(long k, Scalar c);

  /// Lowest and highest exponents; undefined for zero.
  long low_degree() const { return terms_.begin()->first; }
  long high_degree() const { return terms_.rbegin()->first; }
  Scalar leading_coeff() const { return terms_.rbegin()->second; }
  Scalar trailing_coeff() const { return terms_.begin()->second; }
  bool is_polynomial() const { return is_zero() || low_degree() >= 0; }

  LaurentPoly shifted(long k) const;
  /// Strip the lowest power of t: returns (t^{-low} * p, low).
  std::pair<LaurentPoly, long> strip_t_power() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Scalar& c);
  friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
  friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
  friend LaurentPoly operator*(LaurentPoly x, const Scalar& c) { return x *= c; }
  friend bool operator==(const LaurentPoly& x, const LaurentPoly& y) { return x.terms_ == y.terms_; }
  friend bool operator!=(const LaurentPoly& x, const LaurentPoly& y) { return !(x == y); }

  Scalar evaluate(const Scalar& t) const;
  std::string str(const std::string& var = "t") const;

 private:
  std::map<long, Scalar> terms_;
};

/// Division with remainder of polynomials (non-negative exponents only).
std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b);
/// Monic gcd of polynomials; gcd(0, 0) = 0.
LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b);
/// gcd in the Laurent ring (t is a unit): polynomial gcd of the t-stripped parts,
/// normalised to constant term 1.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);
/// Exact quotient a / b in the Laurent ring; throws if b does not divide a.
LaurentPoly laurent_exact_divide(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace lfl
