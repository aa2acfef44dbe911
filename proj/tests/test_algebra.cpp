#include <gtest/gtest.h>

#include "lfl/errors.hpp"
#include "lfl/laurent_poly.hpp"
#include "lfl/power_series.hpp"
#include "lfl/rational_function.hpp"
#include "support.hpp"

namespace lfl {
namespace {

using test::S;
using test::throws_with;

LaurentPoly poly(std::initializer_list<const char*> cs) {
  std::vector<Scalar> v;
  for (const char* c : cs) v.push_back(S(c));
  return LaurentPoly::from_coefficients(v);
}

PowerSeries series(std::initializer_list<long> cs) {
  std::vector<Scalar> v(cs.begin(), cs.end());
  return PowerSeries(v);
}

TEST(Scalar, RadicalSquaresToQ) {
  const QField f{Rational(2)};
  EXPECT_FALSE(f.sqrt_q().is_rational());
  EXPECT_EQ(f.sqrt_q() * f.sqrt_q(), Scalar(2));
  EXPECT_EQ(f.q_half_power(3), Scalar(2) * f.sqrt_q());
  EXPECT_EQ(f.q_half_power(-1) * f.sqrt_q(), Scalar(1));
}

TEST(Scalar, PerfectSquareCollapses) {
  const QField f{Rational(9, 4)};
  EXPECT_TRUE(f.sqrt_q().is_rational());
  EXPECT_EQ(f.sqrt_q(), S("3/2"));
}

TEST(Scalar, InverseAndParse) {
  const QField f{Rational(5)};
  const Scalar x = Scalar(1) + Scalar(3) * f.sqrt_q();
  EXPECT_EQ(x * x.inverse(), Scalar(1));
  EXPECT_EQ(S("-6/4").str(), "-3/2");
  EXPECT_THROW(parse_rational("1/0"), std::exception);
  EXPECT_THROW(parse_rational("abc"), std::exception);
}

TEST(Scalar, ZeroHasNoInverse) { EXPECT_THROW(Scalar(0).inverse(), std::exception); }

TEST(LaurentPoly, NoStoredZeros) {
  LaurentPoly p = poly({"1", "2"});
  p -= poly({"0", "2"});
  EXPECT_EQ(p.terms().size(), 1u);
  EXPECT_EQ(p, LaurentPoly(1));
}

TEST(LaurentPoly, GcdInLaurentRing) {
  const LaurentPoly a = poly({"1", "-1"}) * poly({"1", "-2"});
  const LaurentPoly b = (poly({"1", "-1"}) * LaurentPoly::monomial(Scalar(3), 4));
  EXPECT_EQ(laurent_gcd(a, b), poly({"1", "-1"}));
}

TEST(LaurentPoly, RingAxiomsOnRandomInputs) {
  std::mt19937_64 rng(11);
  auto rand_poly = [&] {
    LaurentPoly p;
    for (long k = -2; k <= 3; ++k) {
      if (rng() % 2) p.set_coeff(k, test::random_rational(rng));
    }
    return p;
  };
  for (int i = 0; i < 100; ++i) {
    const LaurentPoly a = rand_poly();
    const LaurentPoly b = rand_poly();
    const LaurentPoly c = rand_poly();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(PowerSeries, TruncationIsMinimumOfOperands) {
  const PowerSeries a = series({1, 1, 1, 1, 1});
  const PowerSeries b = series({1, 2, 3});
  EXPECT_EQ((a * b).order(), 2u);
  EXPECT_EQ((a + b).order(), 2u);
}

TEST(SeriesFromRational, Examples) {
  EXPECT_EQ(series_from_rational(RationalFunction::reciprocal(poly({"1", "-1"})), 3), series({1, 1, 1, 1}));
  EXPECT_EQ(series_from_rational(RationalFunction(poly({"1", "-1"})), 2), series({1, -1, 0}));
  EXPECT_EQ(series_from_rational(RationalFunction::reciprocal(LaurentPoly::one_minus(Scalar(2)) *
                                                              LaurentPoly::one_minus(Scalar(3))),
                                 2),
            series({1, 5, 19}));
}

TEST(SeriesFromRational, PoleAtOrigin) {
  // 1/t cannot be expanded at t = 0.
  EXPECT_TRUE(throws_with(
      [] { series_from_rational(RationalFunction(LaurentPoly(1), LaurentPoly::monomial(Scalar(1), 1)), 3); },
      "pole at origin"));
}

TEST(RecognizeRational, Examples) {
  const RationalFunction geo = RationalFunction::reciprocal(LaurentPoly::one_minus(Scalar(2)));
  EXPECT_EQ(recognize_rational(series_from_rational(geo, 4), 0, 1), geo);
  const RationalFunction fib = RationalFunction::reciprocal(poly({"1", "-1", "-1"}));
  EXPECT_EQ(recognize_rational(series({1, 1, 2, 3, 5, 8}), 1, 2), fib);
  EXPECT_TRUE(throws_with([] { recognize_rational(series({1, 1, 1, 2}), 0, 1); }, "not rational within bounds"));
  EXPECT_TRUE(throws_with([] { recognize_rational(series({1, 1}), 1, 1); }, "insufficient order"));
}

TEST(RecognizeRational, RoundTripOnRandomRationals) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 200; ++i) {
    const std::size_t nd = rng() % 3;
    const std::size_t dd = 1 + rng() % 3;
    std::vector<Scalar> num(nd + 1);
    std::vector<Scalar> den(dd + 1);
    for (auto& c : num) c = test::random_rational(rng);
    den[0] = Scalar(1);
    for (std::size_t k = 1; k <= dd; ++k) den[k] = test::random_rational(rng);
    const RationalFunction r(LaurentPoly::from_coefficients(num), LaurentPoly::from_coefficients(den));
    const RationalFunction back = recognize_rational(series_from_rational(r, nd + dd + 4), nd, dd);
    EXPECT_EQ(back, r) << r.str();
  }
}

TEST(IdealGenerator, Examples) {
  const LaurentPoly one_minus_t = poly({"1", "-1"});
  const LaurentPoly one_minus_2t = LaurentPoly::one_minus(Scalar(2));
  EXPECT_EQ(ideal_generator({RationalFunction::reciprocal(one_minus_t),
                             RationalFunction(LaurentPoly::monomial(Scalar(1), 1), one_minus_t)}),
            RationalFunction::reciprocal(one_minus_t));
  EXPECT_EQ(ideal_generator({RationalFunction(one_minus_t)}), RationalFunction(one_minus_t));
  EXPECT_EQ(ideal_generator({RationalFunction::reciprocal(one_minus_t * one_minus_2t),
                             RationalFunction(one_minus_t, one_minus_2t)}),
            RationalFunction::reciprocal(one_minus_t * one_minus_2t));
  EXPECT_TRUE(throws_with([] { ideal_generator({RationalFunction(LaurentPoly())}); }, "zero ideal"));
}

TEST(IdealGenerator, UnitInvarianceAndDivisibility) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 50; ++i) {
    std::vector<Scalar> num{test::random_rational(rng), test::random_rational(rng)};
    std::vector<Scalar> den{Scalar(1), test::random_rational(rng), test::random_rational(rng)};
    const RationalFunction f(LaurentPoly::from_coefficients(num), LaurentPoly::from_coefficients(den));
    const RationalFunction g = ideal_generator({f});
    const Scalar c = test::random_rational(rng);
    const long k = static_cast<long>(rng() % 5) - 2;
    EXPECT_EQ(ideal_generator({f * RationalFunction(LaurentPoly::monomial(c, k))}), g);
    // f / g is a Laurent polynomial.
    const RationalFunction quotient = f * RationalFunction(g.denominator(), g.numerator());
    EXPECT_EQ(quotient.denominator(), LaurentPoly(1));
  }
}

TEST(RationalFunction, ReducedFormInvariant) {
  const LaurentPoly a = poly({"1", "-1"});
  const RationalFunction r(a * poly({"2", "1"}), a * poly({"1", "3"}));
  EXPECT_EQ(r.denominator().coeff(0), Scalar(1));
  EXPECT_EQ(laurent_gcd(r.numerator(), r.denominator()), LaurentPoly(1));
}

}  // namespace
}  // namespace lfl
