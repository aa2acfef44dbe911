#include "lfl/rational_function.hpp"

#include "lfl/errors.hpp"
#include "lfl/linear_algebra.hpp"

namespace lfl {

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den) {
  if (den.is_zero()) throw ComputationError("zero denominator");
  if (num.is_zero()) {
    num_ = LaurentPoly();
    den_ = LaurentPoly(1);
    return;
  }
  auto [ns, nk] = num.strip_t_power();
  auto [ds, dk] = den.strip_t_power();
  LaurentPoly g = poly_gcd(ns, ds);
  ns = poly_divmod(ns, g).first;
  ds = poly_divmod(ds, g).first;
  Scalar c = ds.coeff(0).inverse();
  num_ = ns.shifted(nk - dk) * c;
  den_ = ds * c;
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return {num_ * o.num_, den_ * o.den_};
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
}

std::string RationalFunction::str() const {
  if (den_ == LaurentPoly(1)) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

PowerSeries series_from_rational(const RationalFunction& r, std::size_t order) {
  const LaurentPoly& den = r.denominator();
  if (den.coeff(0).is_zero()) throw ComputationError("pole at origin");
  if (!r.numerator().is_polynomial()) throw ComputationError("pole at origin");
  // den(0) = 1 by construction: c_k = n_k - sum_{j>=1} d_j c_{k-j}.
  Scalar inv0 = den.coeff(0).inverse();
  PowerSeries s(order);
  for (std::size_t k = 0; k <= order; ++k) {
    Scalar acc = r.numerator().coeff(static_cast<long>(k));
    for (const auto& [j, dj] : den.terms()) {
      if (j == 0 || static_cast<std::size_t>(j) > k) continue;
      acc -= dj * s[k - static_cast<std::size_t>(j)];
    }
    s[k] = acc * inv0;
  }
  return s;
}

RationalFunction recognize_rational(const PowerSeries& s, std::size_t num_deg, std::size_t den_deg) {
  const std::size_t n = s.order();
  if (n < num_deg + den_deg + 1) throw ComputationError("insufficient order");
  // Unknowns q_1..q_m; for k in (num_deg, n]: s_k + sum_j q_j s_{k-j} = 0.
  Matrix a;
  Vector b;
  for (std::size_t k = num_deg + 1; k <= n; ++k) {
    Vector row(den_deg);
    for (std::size_t j = 1; j <= den_deg; ++j) {
      if (j <= k) row[j - 1] = s[k - j];
    }
    a.push_back(std::move(row));
    b.push_back(-s[k]);
  }
  Vector qcoef;
  if (den_deg > 0) {
    auto sol = solve_linear(a, b);
    if (!sol) throw ComputationError("not rational within bounds");
    qcoef = sol->x;
  } else {
    for (const auto& v : b) {
      if (!v.is_zero()) throw ComputationError("not rational within bounds");
    }
  }
  LaurentPoly q(1);
  for (std::size_t j = 1; j <= den_deg; ++j) q.set_coeff(static_cast<long>(j), qcoef[j - 1]);
  LaurentPoly p;
  for (std::size_t k = 0; k <= num_deg; ++k) {
    Scalar acc = s[k];
    for (std::size_t j = 1; j <= std::min(k, den_deg); ++j) acc += qcoef[j - 1] * s[k - j];
    p.set_coeff(static_cast<long>(k), acc);
  }
  RationalFunction r(p, q);
  if (!(series_from_rational(r, n) == s)) throw ComputationError("not rational within bounds");
  return r;
}

RationalFunction ideal_generator(const std::vector<RationalFunction>& fs) {
  LaurentPoly common(1);
  bool any = false;
  for (const auto& f : fs) {
    if (f.is_zero()) continue;
    any = true;
    LaurentPoly g = poly_gcd(common, f.denominator());
    common = poly_divmod(common * f.denominator(), g).first;
  }
  if (!any) throw ComputationError("zero ideal");
  common = common * common.coeff(0).inverse();
  LaurentPoly g;
  for (const auto& f : fs) {
    if (f.is_zero()) continue;
    LaurentPoly scaled = f.numerator() * laurent_exact_divide(common, f.denominator());
    g = g.is_zero() ? laurent_gcd(scaled, scaled) : laurent_gcd(g, scaled);
  }
  return RationalFunction(g, common);
}

}  // namespace lfl
