#include <gtest/gtest.h>

#include <random>

#include "lfl/langlands.hpp"
#include "lfl/zeta.hpp"
#include "support.hpp"

namespace lfl {
namespace {

using test::params;
using test::S;

const GroupData kGL2 = GroupData::gl(2);

GradedRep standard_rep(const GroupData& g) {
  std::vector<long> top(g.rank(), 0);
  top[0] = 1;
  return {g, irreducible_character(Coweight(top), g)};
}

TEST(Zeta, UnitGivesConstantSeries) {
  const LocalSetting s{kGL2, QField(Rational(4))};
  const ZetaSeries z = spherical_zeta(spherical_unit(kGL2), params({"2", "3"}), 5, s);
  PowerSeries one(5);
  one[0] = Scalar(1);
  EXPECT_EQ(z.series, one);
}

TEST(Zeta, TorusGeometricSeries) {
  const GroupData t = GroupData::torus(1, Coweight{1});
  const LocalSetting s{t, QField(Rational(9))};
  const GradedRep rho{t, Character{{Coweight{1}, 1}}};
  const auto family = basic_function_family(rho, 6, s);
  const Scalar a = S("-5/2");
  EXPECT_EQ(spherical_zeta(family, {a}, 6, s).series,
            series_from_rational(RationalFunction::reciprocal(LaurentPoly::one_minus(a)), 6));
}

TEST(Zeta, StandardGL2MatchesLFactor) {
  for (long q : {4L, 9L}) {
    const LocalSetting s{kGL2, QField(Rational(q))};
    const SatakeParameter alpha = params({"2", "3"});
    const auto family = basic_function_family(standard_rep(kGL2), 8, s);
    const ZetaSeries z = spherical_zeta(family, alpha, 8, s);
    // The standard-case basic function carries the sgn twist: 1 / ((1 + a t)(1 + b t)).
    EXPECT_EQ(z.series[1], Scalar(-5));
    EXPECT_EQ(z.series[2], Scalar(19));
    const LFactor lf = l_factor(make_parameter(kGL2, alpha, {}, true, s.field), Realization::standard(kGL2));
    EXPECT_EQ(z.series, series_from_rational(lf.value, 8));
  }
}

TEST(Zeta, SingleElementSplitsByDegree) {
  const LocalSetting s{kGL2, QField(Rational(4))};
  const auto family = basic_function_family(standard_rep(kGL2), 4, s);
  SphericalElement flat;
  for (const auto& fd : family) flat = add(flat, fd);
  const SatakeParameter alpha = params({"1/2", "-3"});
  EXPECT_EQ(spherical_zeta(flat, alpha, 4, s).series, spherical_zeta(family, alpha, 4, s).series);
  EXPECT_TRUE(test::throws_with(
      [&] { spherical_zeta(SphericalElement{{{0, -1}, Scalar(1)}}, alpha, 4, s); }, "pole at origin"));
}

TEST(Zeta, BimoduleCompatibilityAndLocality) {
  std::mt19937_64 rng(77);
  for (const GroupData& g : {kGL2, GroupData::gl(3)}) {
    const LocalSetting s{g, QField(Rational(4))};
    const std::size_t order = g.gl_rank() == 2 ? 8 : 5;
    const auto family = basic_function_family(standard_rep(g), static_cast<long>(order), s);
    for (int i = 0; i < 3; ++i) {
      SatakeParameter alpha;
      for (std::size_t k = 0; k < g.rank(); ++k) alpha.push_back(test::random_rational(rng));
      const SphericalElement h = random_degree_zero(g, rng);
      const ZetaSeries lhs = spherical_zeta(convolve_family(family, h, s), alpha, order, s);
      const ZetaSeries rhs = spherical_zeta(family, alpha, order, s);
      EXPECT_EQ(lhs.series, rhs.series * satake_eigenvalue(h, alpha, s));
      auto changed = family;
      changed[order] = add(changed[order], spherical_unit(g));
      const ZetaSeries z2 = spherical_zeta(changed, alpha, order, s);
      for (std::size_t d = 0; d < order; ++d) EXPECT_EQ(z2.series[d], rhs.series[d]);
    }
  }
}

TEST(Zeta, IwahoriUnitAndPrincipalSeries) {
  const QField f{Rational(9)};
  const SatakeParameter alpha = params({"5", "-7"});
  const IwahoriMatrixCoefficient sph{principal_series_module(alpha, f), {Scalar(1), Scalar(0)},
                                     {Scalar(1), Scalar(0)}};
  const ZetaSeries one = iwahori_zeta({hecke_basis(affine_gl2::identity())}, sph, 4, f);
  EXPECT_EQ(one.series[0], Scalar(1));
  for (std::size_t d = 1; d <= 4; ++d) EXPECT_TRUE(one.series[d].is_zero());
  const LocalSetting s{kGL2, f};
  const ZetaSeries iw = iwahori_zeta(iwahori_family(8, f, false), sph, 8, f);
  const ZetaSeries sp = spherical_zeta(basic_function_family(standard_rep(kGL2), 8, s), alpha, 8, s);
  EXPECT_EQ(iw.series, sp.series * (Scalar(1) + f.q()));
}

TEST(Zeta, SteinbergAgainstMatOVanishes) {
  // Mat_2(O) is K-biinvariant and the Steinberg module has no K-fixed vector.
  const QField f{Rational(4)};
  const IwahoriMatrixCoefficient st{steinberg_module(S("2/7"), f), {Scalar(1)}, {Scalar(1)}};
  EXPECT_TRUE(iwahori_zeta(iwahori_family(6, f, false), st, 6, f).series.is_zero());
}

TEST(Zeta, SteinbergAgainstIwahoriOrder) {
  for (long q : {4L, 9L, 3L}) {
    const QField f{Rational(q)};
    const Scalar z = S("-3");
    const IwahoriMatrixCoefficient st{steinberg_module(z, f), {Scalar(1)}, {Scalar(1)}};
    const auto phi = iwahori_family(8, f, true);
    std::vector<ZetaSeries> battery;
    for (const auto& fam : iwahori_battery(phi, 8, f)) battery.push_back(iwahori_zeta(fam, st, 8, f));
    const RationalFunction gen = zeta_ideal(battery, {2, 4});
    // c = -z, V^e eigenvalue c q^{-1/2}, negated by the sgn twist.
    EXPECT_EQ(gen, RationalFunction::reciprocal(LaurentPoly::one_minus(z * f.q_half_power(-1))));
  }
}

TEST(Zeta, IdealExamples) {
  const Scalar a = S("2");
  const Scalar b = S("-1/5");
  const RationalFunction l = RationalFunction::reciprocal(LaurentPoly::one_minus(a) * LaurentPoly::one_minus(b));
  const std::size_t n = 10;
  EXPECT_EQ(zeta_ideal({{series_from_rational(RationalFunction::reciprocal(LaurentPoly::one_minus(a)), n), "x"}},
                       {2, 2}),
            RationalFunction::reciprocal(LaurentPoly::one_minus(a)));
  const std::vector<ZetaSeries> tests = {
      {series_from_rational(l, n), "L"},
      {series_from_rational(l * RationalFunction(LaurentPoly::monomial(Scalar(1), 1)), n), "L t"},
      {series_from_rational(l * RationalFunction(LaurentPoly::one_minus(Scalar(1))), n), "L (1 - t)"},
      {PowerSeries(n), "zero"},
  };
  EXPECT_EQ(zeta_ideal(tests, {3, 3}), l);
}

TEST(Zeta, TableFormats) {
  PowerSeries p(2);
  p[0] = Scalar(1);
  p[2] = S("-3/4");
  const ZetaSeries z{p, "demo"};
  EXPECT_NE(zeta_table_tsv(z).find("2\t-3/4"), std::string::npos);
  EXPECT_NE(zeta_table_text(z).find("-3/4"), std::string::npos);
}

}  // namespace
}  // namespace lfl
