#include <gtest/gtest.h>

#include "lfl/errors.hpp"
#include "lfl/langlands.hpp"
#include "lfl/toric.hpp"
#include "lfl/zeta.hpp"
#include "support.hpp"

namespace lfl {
namespace {

const ToricData kLine{1, {Coweight{1}}, Coweight{1}};
const ToricData kPlane{2, {Coweight{1, 0}, Coweight{0, 1}, Coweight{1, 1}}, Coweight{1, 1}};
const ToricData kDiagonal{2, {Coweight{1, 1}}, Coweight{1, 0}};

TEST(Toric, Nondegeneracy) {
  EXPECT_TRUE(is_nondegenerate(kLine));
  EXPECT_FALSE(is_nondegenerate(ToricData{1, {Coweight{2}}, Coweight{1}}));
  EXPECT_TRUE(is_nondegenerate(kPlane));
  EXPECT_FALSE(is_nondegenerate(kDiagonal));
  EXPECT_EQ(smith_invariants({{2, 0}, {0, 3}}), (std::vector<long>{1, 6}));
}

TEST(Toric, PushforwardExamples) {
  EXPECT_EQ(pushforward_basic(kLine, Coweight{3}), 1);
  EXPECT_EQ(pushforward_basic(kPlane, Coweight{2, 1}), 2);
  EXPECT_EQ(pushforward_basic(kPlane, Coweight{-1, 0}), 0);
  EXPECT_THROW(pushforward_basic(kDiagonal, Coweight{1, 1}), ComputationError);
}

TEST(Toric, SupportProjection) {
  EXPECT_TRUE(support_projection_compact(kDiagonal, 12));
  EXPECT_TRUE(support_projection_compact(ToricData{1, {Coweight{2}}, Coweight{1}}, 12));
  EXPECT_THROW(support_projection_compact(ToricData{2, {Coweight{1, 0}, Coweight{0, 1}}, Coweight{1, 1}}, 12),
               ComputationError);
}

TEST(Toric, PushforwardEqualsSymWeightMultiplicities) {
  for (const ToricData& d : {kLine, kPlane, ToricData{2, {Coweight{2, 1}, Coweight{1, 0}, Coweight{0, 1}}, Coweight{1, 1}}}) {
    const GradedRep rep = d.representation();
    for (long a = -3; a <= 6; ++a) {
      for (long b = -3; b <= (d.rank == 2 ? 6 : -3); ++b) {
        const Coweight mu = d.rank == 2 ? Coweight{a, b} : Coweight{a};
        const long deg = pairing(mu, d.chi);
        long expected = 0;
        if (deg >= 0) {
          const Character piece = sym_graded_piece(rep, deg);
          auto it = piece.find(mu);
          expected = it == piece.end() ? 0 : it->second;
        }
        EXPECT_EQ(pushforward_basic(d, mu), expected) << mu.str();
        if (deg < 0) EXPECT_EQ(pushforward_basic(d, mu), 0);
      }
    }
  }
}

TEST(Toric, ZetaMatchesLFactor) {
  const QField f{Rational(4)};
  const SatakeParameter alpha = test::params({"2", "-3/5"});
  const LocalSetting s{kPlane.group(), f};
  const ZetaSeries z = spherical_zeta(pushforward_family(kPlane, 8), alpha, 8, s);
  Realization rho = Realization::torus_character(s.group, kPlane.weights[0]);
  for (std::size_t i = 1; i < kPlane.weights.size(); ++i) {
    rho = Realization::direct_sum(rho, Realization::torus_character(s.group, kPlane.weights[i]));
  }
  RationalFunction expected = RationalFunction::reciprocal(LaurentPoly::one_minus(alpha[0]));
  expected = expected * RationalFunction::reciprocal(LaurentPoly::one_minus(alpha[1]));
  expected = expected * RationalFunction::reciprocal(LaurentPoly::one_minus(alpha[0] * alpha[1], 2));
  EXPECT_EQ(l_factor(make_parameter(s.group, alpha, {}, false, f), rho).value, expected);
  EXPECT_EQ(z.series, series_from_rational(expected, 8));
}

TEST(Toric, DegenerateFamilyUsesFibres) {
  const auto fam = vector_partition_family(kDiagonal, 4);
  ASSERT_EQ(fam.size(), 5u);
  for (long d = 0; d <= 4; ++d) EXPECT_EQ(fam[d], (SphericalElement{{{d, d}, Scalar(1)}}));
}

TEST(Toric, Validation) {
  EXPECT_THROW(validate(ToricData{2, {Coweight{1}}, Coweight{1, 1}}), std::exception);
  EXPECT_THROW(vector_partition_count({Coweight{1}, Coweight{-1}}, Coweight{0}, Coweight{1}), std::exception);
}

}  // namespace
}  // namespace lfl
