#include "lfl/scalar.hpp"

#include <sstream>

namespace lfl {
namespace {

bool rational_sqrt(const Rational& x, Rational& out) {
  if (sgn(x) < 0) return false;
  mpz_class num = x.get_num();
  mpz_class den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t())) {
    return false;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  out = Rational(rn, rd);
  out.canonicalize();
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char c : text) {
    if (c != ' ') t.push_back(c);
  }
  if (t.empty()) throw std::invalid_argument("empty rational");
  if (t.front() == '+') t.erase(t.begin());
  for (std::size_t i = 0; i < t.size(); ++i) {
    char c = t[i];
    bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
    if (!ok) throw std::invalid_argument("malformed rational: " + text);
  }
  Rational r;
  if (r.set_str(t, 10) != 0) throw std::invalid_argument("malformed rational: " + text);
  if (sgn(r.get_den()) == 0) throw std::invalid_argument("zero denominator: " + text);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Scalar Scalar::with_radical(Rational a, Rational b, const Rational& q) {
  if (sgn(q) <= 0) throw std::invalid_argument("radicand must be positive");
  Scalar s;
  a.canonicalize();
  b.canonicalize();
  Rational root;
  if (rational_sqrt(q, root)) {
    s.a_ = a + b * root;
    s.a_.canonicalize();
    return s;
  }
  s.a_ = a;
  s.b_ = b;
  s.q_ = q;
  s.normalize();
  return s;
}

void Scalar::normalize() {
  if (sgn(b_) == 0) q_ = 0;
}

void Scalar::merge_radicand(const Scalar& o) {
  if (sgn(o.b_) == 0) return;
  if (sgn(b_) == 0) {
    q_ = o.q_;
    return;
  }
  if (q_ != o.q_) throw std::domain_error("scalars over different radicands");
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  merge_radicand(o);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  merge_radicand(o);
  a_ -= o.a_;
  b_ -= o.b_;
  normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(b_) == 0 && sgn(o.b_) == 0) {
    a_ *= o.a_;
    return *this;
  }
  merge_radicand(o);
  Rational na = a_ * o.a_ + b_ * o.b_ * q_;
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = na;
  b_ = nb;
  normalize();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (sgn(b_) == 0) return Scalar(Rational(1) / a_);
  // (a + bv)^{-1} = (a - bv) / (a^2 - b^2 q); the norm is nonzero since q is not a square.
  Rational norm = a_ * a_ - b_ * b_ * q_;
  Scalar r;
  r.a_ = a_ / norm;
  r.b_ = -b_ / norm;
  r.q_ = q_;
  r.normalize();
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::pow(long exponent) const {
  Scalar base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                 : static_cast<unsigned long>(exponent);
  Scalar result(1);
  while (e) {
    if (e & 1UL) result *= base;
    base *= base;
    e >>= 1UL;
  }
  return result;
}

std::string Scalar::str() const {
  if (sgn(b_) == 0) return a_.get_str();
  std::ostringstream os;
  std::string root = "sqrt(" + q_.get_str() + ")";
  if (sgn(a_) != 0) os << a_.get_str();
  if (sgn(a_) != 0 && sgn(b_) > 0) os << "+";
  if (b_ == 1) {
    os << root;
  } else if (b_ == -1) {
    os << "-" << root;
  } else {
    os << b_.get_str() << "*" << root;
  }
  return os.str();
}

QField::QField(Rational q) : q_(std::move(q)) {
  q_.canonicalize();
  if (sgn(q_) <= 0) throw std::invalid_argument("q must be a positive rational");
  sqrt_q_ = Scalar::with_radical(0, 1, q_);
}

Scalar QField::q_half_power(long k) const {
  long half = k / 2;
  Scalar r = Scalar(q_).pow(half);
  if (k % 2 != 0) {
    r *= k > 0 ? sqrt_q_ : sqrt_q_.inverse();
  }
  return r;
}

}  // namespace lfl
