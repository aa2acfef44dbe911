#include <gtest/gtest.h>

#include <functional>

#include "lfl/errors.hpp"
#include "lfl/semigroup.hpp"
#include "support.hpp"

namespace lfl {
namespace {

TEST(Semigroup, PaperFamilyIndecomposables) {
  EXPECT_EQ(indecomposables(symmetric_power_cone(3), 6), (std::set<Coweight>{{3, 0, 1}, {2, 1, 1}}));
  EXPECT_EQ(indecomposables(symmetric_power_cone(2), 6), (std::set<Coweight>{{2, 0, 1}, {1, 1, 1}}));
}

TEST(Semigroup, LineCone) {
  const GroupData t = GroupData::torus(1, Coweight{1});
  const ConeData line{t, {}, {Coweight{1}}};
  EXPECT_EQ(indecomposables(line, 4), (std::set<Coweight>{Coweight{1}}));
  const GradedRep rho = rho_from_cone(line, 4);
  EXPECT_EQ(rho.character, (Character{{Coweight{1}, 1}}));
}

TEST(Semigroup, SMax) {
  const GroupData g = GroupData::gl_times_torus(2, 1, Coweight{0, 0, 1});
  EXPECT_EQ(s_max({{3, 0, 1}, {2, 1, 1}}, g), (std::set<Coweight>{{3, 0, 1}}));
  EXPECT_EQ(s_max({{2, 1, 1}}, g), (std::set<Coweight>{{2, 1, 1}}));
  EXPECT_EQ(s_max({{2, 0, 1}, {1, 1, 2}}, g), (std::set<Coweight>{{2, 0, 1}, {1, 1, 2}}));
}

TEST(Semigroup, PaperFamilyRegression) {
  const GroupData gl2 = GroupData::gl(2);
  for (long n = 1; n <= 4; ++n) {
    const ConeData c = symmetric_power_cone(n);
    const auto ind = indecomposables(c, n + 3);
    EXPECT_EQ(s_max(ind, c.group), (std::set<Coweight>{{n, 0, 1}}));
    const GradedRep rho = rho_from_cone(c, n + 3);
    EXPECT_EQ(dimension(rho.character), n + 1);
    Character gl_part;
    for (const auto& [mu, m] : rho.character) {
      EXPECT_EQ(mu[2], 1);
      EXPECT_EQ(rho.degree(mu), 1);
      gl_part[Coweight{mu[0], mu[1]}] += m;
    }
    EXPECT_EQ(gl_part, sym_power(irreducible_character(Coweight{1, 0}, gl2), n, gl2));
  }
}

TEST(Semigroup, CompletenessAndIdempotence) {
  const ConeData c = symmetric_power_cone(3);
  const auto gens = indecomposables(c, 6);
  // The certificate works in the whole cone, so use the Weyl orbits of the dominant generators.
  std::set<Coweight> all;
  for (const auto& g : gens) {
    for (const auto& w : weyl_orbit(g, c.group)) all.insert(w);
  }
  EXPECT_EQ(all.size(), 4u);
  std::function<bool(const Coweight&)> reach = [&](const Coweight& r) {
    if (r.is_zero()) return true;
    for (const auto& g : all) {
      const Coweight rest = r - g;
      if (c.contains(rest) && reach(rest)) return true;
    }
    return false;
  };
  for (const auto& x : cone_points(c, 6)) {
    if (x[2] <= 3) EXPECT_TRUE(reach(x)) << x.str();
  }
  for (const auto& g : all) {
    for (const auto& h : all) EXPECT_FALSE(all.count(g + h));
  }
}

TEST(Semigroup, BoundTooSmall) {
  EXPECT_TRUE(test::throws_with([] { indecomposables(symmetric_power_cone(4), 2); }, "bound too small"));
}

TEST(Semigroup, Validation) {
  const GroupData g = GroupData::gl(2);
  EXPECT_THROW(validate(ConeData{g, {Coweight{1, 1, 1}}, {}}), std::exception);
  // a + b = 0, a >= 0: the generator (1,-1) has degree 0.
  const ConeData flat{g, {Coweight{1, 1}}, {Coweight{1, 0}}};
  EXPECT_TRUE(test::throws_with([&] { rho_from_cone(flat, 3); }, "grading not positive"));
}

}  // namespace
}  // namespace lfl
