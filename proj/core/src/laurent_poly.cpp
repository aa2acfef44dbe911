#include "lfl/laurent_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace lfl {

LaurentPoly::LaurentPoly(Scalar constant) {
  if (!constant.is_zero()) terms_.emplace(0, std::move(constant));
}

LaurentPoly LaurentPoly::monomial(Scalar c, long k) {
  LaurentPoly p;
  p.set_coeff(k, std::move(c));
  return p;
}

LaurentPoly LaurentPoly::from_coefficients(const std::vector<Scalar>& coeffs) {
  LaurentPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.set_coeff(static_cast<long>(i), coeffs[i]);
  return p;
}

LaurentPoly LaurentPoly::one_minus(const Scalar& a, long d) {
  return LaurentPoly(1) - monomial(a, d);
}

Scalar LaurentPoly::coeff(long k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void LaurentPoly::set_coeff(long k, Scalar c) {
  if (c.is_zero()) {
    terms_.erase(k);
  } else {
    terms_[k] = std::move(c);
  }
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
  return r;
}

std::pair<LaurentPoly, long> LaurentPoly::strip_t_power() const {
  if (is_zero()) return {*this, 0};
  long low = low_degree();
  return {shifted(-low), low};
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) set_coeff(e, coeff(e) + c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) set_coeff(e, coeff(e) - c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
  std::map<long, Scalar> acc;
  for (const auto& [e1, c1] : x.terms_) {
    for (const auto& [e2, c2] : y.terms_) acc[e1 + e2] += c1 * c2;
  }
  LaurentPoly r;
  for (auto& [e, c] : acc) r.set_coeff(e, std::move(c));
  return r;
}

Scalar LaurentPoly::evaluate(const Scalar& t) const {
  Scalar s(0);
  for (const auto& [e, c] : terms_) s += c * t.pow(e);
  return s;
}

std::string LaurentPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string cs = c.str();
    bool compound = !c.is_rational() && sgn(c.rational_part()) != 0;
    if (compound) cs = "(" + cs + ")";
    if (!first) {
      if (cs.front() == '-') {
        os << " - ";
        cs.erase(cs.begin());
      } else {
        os << " + ";
      }
    }
    first = false;
    if (e == 0) {
      os << cs;
      continue;
    }
    if (cs == "1") {
      cs.clear();
    } else if (cs == "-1") {
      cs = "-";
    } else {
      cs += "*";
    }
    os << cs << var;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (!a.is_polynomial() || !b.is_polynomial()) {
    throw std::invalid_argument("poly_divmod expects polynomials");
  }
  LaurentPoly quotient;
  LaurentPoly rem = a;
  const long db = b.high_degree();
  const Scalar lead_inv = b.leading_coeff().inverse();
  while (!rem.is_zero() && rem.high_degree() >= db) {
    long shift = rem.high_degree() - db;
    Scalar c = rem.leading_coeff() * lead_inv;
    quotient.set_coeff(shift, quotient.coeff(shift) + c);
    rem -= b.shifted(shift) * c;
  }
  return {quotient, rem};
}

LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
  while (!b.is_zero()) {
    LaurentPoly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * a.leading_coeff().inverse();
}

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly g = poly_gcd(a.strip_t_power().first, b.strip_t_power().first);
  if (g.is_zero()) return g;
  return g * g.coeff(0).inverse();
}

LaurentPoly laurent_exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return a;
  auto [as, ak] = a.strip_t_power();
  auto [bs, bk] = b.strip_t_power();
  auto [q, r] = poly_divmod(as, bs);
  if (!r.is_zero()) throw std::domain_error("not divisible in the Laurent ring");
  return q.shifted(ak - bk);
}

}  // namespace lfl
