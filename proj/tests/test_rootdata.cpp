#include <gtest/gtest.h>

#include <random>

#include "lfl/root_data.hpp"

namespace lfl {
namespace {

TEST(RootData, CartanMatrices) {
  EXPECT_EQ(GroupData::gl(2).cartan_matrix(), (std::vector<std::vector<long>>{{2}}));
  EXPECT_EQ(GroupData::gl(3).cartan_matrix(), (std::vector<std::vector<long>>{{2, -1}, {-1, 2}}));
  const GroupData t = GroupData::torus(2, Coweight{1, 1});
  EXPECT_TRUE(t.positive_roots().empty());
  EXPECT_THROW(GroupData::torus(2, Coweight{0, 0}), std::exception);
}

TEST(RootData, DominanceOrder) {
  const GroupData g2 = GroupData::gl(2);
  const GroupData g3 = GroupData::gl(3);
  EXPECT_TRUE(dominance_leq(Coweight{1, 1}, Coweight{2, 0}, g2));
  EXPECT_FALSE(dominance_leq(Coweight{2, 0}, Coweight{1, 1}, g2));
  EXPECT_TRUE(dominance_leq(Coweight{1, 1, 1}, Coweight{3, 0, 0}, g3));
  EXPECT_FALSE(dominance_leq(Coweight{2, 0, 0}, Coweight{3, 0, 0}, g3));  // different determinant
  EXPECT_THROW(dominance_leq(Coweight{0, 1}, Coweight{2, 0}, g2), std::exception);
}

TEST(RootData, SgnValue) {
  EXPECT_EQ(sgn_value(Coweight{1, 0}, GroupData::gl(2)), -1);
  EXPECT_EQ(sgn_value(Coweight{1, 1}, GroupData::gl(2)), 1);
  EXPECT_EQ(sgn_value(Coweight{1, 0, 0}, GroupData::gl(3)), 1);
  EXPECT_EQ(GroupData::gl(3).two_delta(), (Coweight{2, 0, -2}));
}

TEST(RootData, ChiDegree) {
  EXPECT_EQ(chi_degree(Coweight{1, 0}, GroupData::gl(2)), 1);
  EXPECT_EQ(chi_degree(Coweight{2, 1}, GroupData::gl(2)), 3);
  EXPECT_EQ(chi_degree(Coweight{1, -1}, GroupData::torus(2, Coweight{1, 1})), 0);
}

TEST(RootData, LengthExamples) {
  const GroupData g = GroupData::gl(2);
  EXPECT_EQ(im_length(ExtAffineWeylElement::pure_translation(Coweight{1, 1}), g), 0);
  EXPECT_EQ(im_length({Coweight{0, 0}, Permutation::simple(2, 0)}, g), 1);
  EXPECT_EQ(im_length(ExtAffineWeylElement::pure_translation(Coweight{1, 0}), g), 1);
  EXPECT_EQ(im_length(ExtAffineWeylElement::pure_translation(Coweight{2, -1}), g), 3);
}

TEST(RootData, WeylOrbits) {
  EXPECT_EQ(weyl_orbit(Coweight{2, 0}, GroupData::gl(2)), (std::set<Coweight>{{2, 0}, {0, 2}}));
  EXPECT_EQ(weyl_orbit(Coweight{1, 1, 0}, GroupData::gl(3)).size(), 3u);
  const GroupData t = GroupData::torus(2, Coweight{1, 0});
  EXPECT_EQ(weyl_orbit(Coweight{3, -1}, t), (std::set<Coweight>{{3, -1}}));
}

class RandomAffineWeyl : public ::testing::TestWithParam<int> {
 protected:
  ExtAffineWeylElement random_element(std::mt19937_64& rng) const {
    const int n = GetParam();
    std::uniform_int_distribution<long> entry(-3, 3);
    std::vector<long> lam(n);
    for (auto& x : lam) x = entry(rng);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    return {Coweight(lam), Permutation(perm)};
  }
};

TEST_P(RandomAffineWeyl, GroupAxioms) {
  std::mt19937_64 rng(7 + GetParam());
  const auto e = ExtAffineWeylElement::identity(GetParam());
  for (int i = 0; i < 500; ++i) {
    const auto a = random_element(rng);
    const auto b = random_element(rng);
    const auto c = random_element(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * a.inverse(), e);
    EXPECT_EQ(a.inverse() * a, e);
    EXPECT_EQ(a * e, a);
  }
}

TEST_P(RandomAffineWeyl, LengthSymmetricAndSubadditive) {
  const GroupData g = GroupData::gl(GetParam());
  std::mt19937_64 rng(101 + GetParam());
  for (int i = 0; i < 300; ++i) {
    const auto u = random_element(rng);
    const auto v = random_element(rng);
    EXPECT_EQ(im_length(u, g), im_length(u.inverse(), g));
    EXPECT_LE(im_length(u * v, g), im_length(u, g) + im_length(v, g));
  }
}

TEST_P(RandomAffineWeyl, ChiHomomorphismAndSgnOnCorootLattice) {
  const GroupData g = GroupData::gl(GetParam());
  std::mt19937_64 rng(55 + GetParam());
  for (int i = 0; i < 200; ++i) {
    const Coweight lam = random_element(rng).translation;
    const Coweight mu = random_element(rng).translation;
    EXPECT_EQ(chi_degree(lam + mu, g), chi_degree(lam, g) + chi_degree(mu, g));
    for (const auto& a : g.simple_coroots()) EXPECT_EQ(sgn_value(lam + a, g), sgn_value(lam, g));
  }
}

INSTANTIATE_TEST_SUITE_P(GL, RandomAffineWeyl, ::testing::Values(2, 3));

}  // namespace
}  // namespace lfl
