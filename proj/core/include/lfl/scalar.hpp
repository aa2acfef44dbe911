#pragma once

/// Exact scalars in Q(v) with v^2 = q.
///
/// Every scalar is a + b*v with a, b rational. The radical symbol is attached
/// to a fixed positive rational q; when q is a perfect square v is replaced by
/// its rational square root, so the coefficient ring is always a field.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace lfl {

using Rational = mpq_class;

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

class Scalar {
 public:
  Scalar() : a_(0), b_(0), q_(0) {}
  Scalar(long value) : a_(value), b_(0), q_(0) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational value) : a_(std::move(value)), b_(0), q_(0) {  // NOLINT
    a_.canonicalize();
  }

  /// a + b*sqrt(q). Collapses to a rational when q is a perfect square.
  static Scalar with_radical(Rational a, Rational b, const Rational& q);

  const Rational& rational_part() const { return a_; }
  const Rational& radical_part() const { return b_; }
  /// q of the radical, or 0 when the scalar is rational.
  const Rational& radicand() const { return q_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_one() const { return a_ == 1 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (sgn(x.b_) == 0 || x.q_ == y.q_);
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  Scalar inverse() const;
  Scalar pow(long exponent) const;

  /// "3/2", "-1/2*sqrt(2)", "1+3*sqrt(2)". Deterministic.
  std::string str() const;

 private:
  void merge_radicand(const Scalar& o);
  void normalize();

  Rational a_;
  Rational b_;
  Rational q_;
};

/// The fixed positive rational q together with its square root symbol.
class QField {
 public:
  explicit QField(Rational q);

  const Rational& q_rational() const { return q_; }
  Scalar q() const { return Scalar(q_); }
  Scalar sqrt_q() const { return sqrt_q_; }
  /// q^{k/2} for any integer k.
  Scalar q_half_power(long k) const;
  /// q^k.
  Scalar q_power(long k) const { return q_half_power(2 * k); }

 private:
  Rational q_;
  Scalar sqrt_q_;
};

}  // namespace lfl
