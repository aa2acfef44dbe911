#include <gtest/gtest.h>

#include "lfl/rep_ring.hpp"

namespace lfl {
namespace {

const GroupData kGL2 = GroupData::gl(2);
const GroupData kGL3 = GroupData::gl(3);

std::vector<Coweight> dominant_gl3(long bound) {
  std::vector<Coweight> out;
  for (long a = -bound; a <= bound; ++a) {
    for (long b = -bound; b <= a; ++b) {
      for (long c = -bound; c <= b; ++c) out.push_back(Coweight{a, b, c});
    }
  }
  return out;
}

TEST(RepRing, IrreducibleExamples) {
  EXPECT_EQ(irreducible_character(Coweight{1, 0}, kGL2), (Character{{{1, 0}, 1}, {{0, 1}, 1}}));
  EXPECT_EQ(irreducible_character(Coweight{2, 0}, kGL2), (Character{{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}}));
  const Character wedge2 = irreducible_character(Coweight{1, 1, 0}, kGL3);
  EXPECT_EQ(wedge2.size(), 3u);
  EXPECT_EQ(dimension(wedge2), 3);
  EXPECT_THROW(irreducible_character(Coweight{0, 1}, kGL2), std::exception);
}

TEST(RepRing, FreudenthalMatchesWeylDimensionAndIsWeylInvariant) {
  for (const auto& lam : dominant_gl3(3)) {
    const Character c = irreducible_character(lam, kGL3);
    EXPECT_EQ(dimension(c), weyl_dimension(lam, kGL3)) << lam.str();
    for (const auto& w : kGL3.weyl_group()) {
      for (const auto& [mu, m] : c) {
        auto it = c.find(w.act(mu));
        ASSERT_NE(it, c.end());
        EXPECT_EQ(it->second, m);
      }
    }
  }
  // Adjoint of GL(3): the zero weight has multiplicity 2.
  EXPECT_EQ(irreducible_character(Coweight{1, 0, -1}, kGL3).at(Coweight{0, 0, 0}), 2);
}

TEST(RepRing, TensorDecomposeExamples) {
  const Character std2 = irreducible_character(Coweight{1, 0}, kGL2);
  EXPECT_EQ(tensor_decompose(std2, std2, kGL2), (std::map<Coweight, long>{{{2, 0}, 1}, {{1, 1}, 1}}));
  const Character v = irreducible_character(Coweight{2, 1, 0}, kGL3);
  EXPECT_EQ(tensor_decompose(v, trivial_character(kGL3), kGL3), (std::map<Coweight, long>{{{2, 1, 0}, 1}}));
  const Character std3 = irreducible_character(Coweight{1, 0, 0}, kGL3);
  const Character dual3 = irreducible_character(Coweight{0, 0, -1}, kGL3);
  const auto dec = tensor_decompose(std3, dual3, kGL3);
  EXPECT_EQ(dec, (std::map<Coweight, long>{{{1, 0, -1}, 1}, {{0, 0, 0}, 1}}));
  EXPECT_THROW(tensor_decompose(scale(std2, -1), std2, kGL2), std::exception);
}

TEST(RepRing, TensorDecomposeResums) {
  const auto ws = dominant_gl3(1);
  for (std::size_t i = 0; i < ws.size(); i += 3) {
    for (std::size_t j = 0; j < ws.size(); j += 5) {
      const Character a = irreducible_character(ws[i], kGL3);
      const Character b = irreducible_character(ws[j], kGL3);
      Character sum;
      for (const auto& [lam, m] : tensor_decompose(a, b, kGL3)) {
        sum = add(sum, scale(irreducible_character(lam, kGL3), m));
      }
      EXPECT_EQ(sum, character_product(a, b));
    }
  }
}

TEST(RepRing, SymPowerExamples) {
  const Character std2 = irreducible_character(Coweight{1, 0}, kGL2);
  EXPECT_EQ(sym_power(std2, 0, kGL2), trivial_character(kGL2));
  EXPECT_EQ(sym_power(std2, 2, kGL2), irreducible_character(Coweight{2, 0}, kGL2));
  const GroupData t = GroupData::torus(1, Coweight{1});
  const Character v{{Coweight{1}, 2}};
  EXPECT_EQ(sym_power(v, 2, t), (Character{{Coweight{2}, 3}}));
}

TEST(RepRing, SymPowerDimensionsMatchHilbertSeries) {
  // dim Sym^n of a d-dimensional space is C(n+d-1, d-1).
  const Character v = irreducible_character(Coweight{2, 0, 0}, kGL3);
  const auto powers = sym_powers(v, 6, kGL3);
  long binom = 1;  // C(n+5, 5)
  for (long n = 0; n <= 6; ++n) {
    if (n > 0) binom = binom * (n + 5) / n;
    EXPECT_EQ(dimension(powers[n]), binom);
  }
}

TEST(RepRing, GradedPieces) {
  const GradedRep std2{kGL2, irreducible_character(Coweight{1, 0}, kGL2)};
  EXPECT_EQ(graded_piece(std2, 1), std2.character);
  const GradedRep sym2{kGL2, sym_power(std2.character, 2, kGL2)};
  EXPECT_EQ(graded_piece(sym2, 2), sym2.character);
  EXPECT_EQ(dimension(sym_graded_piece(std2, 3)), 4);
  EXPECT_EQ(sym_graded_piece(std2, 3), sym_power(std2.character, 3, kGL2));
  for (long d = -3; d < 0; ++d) EXPECT_TRUE(sym_graded_piece(std2, d).empty());
}

TEST(RepRing, Positivity) {
  EXPECT_TRUE(check_positivity({kGL2, irreducible_character(Coweight{1, 0}, kGL2)}));
  EXPECT_FALSE(check_positivity({kGL2, trivial_character(kGL2)}));
  const GroupData t = GroupData::torus(2, Coweight{1, 1});
  EXPECT_FALSE(check_positivity({t, Character{{Coweight{1, -1}, 1}}}));
}

}  // namespace
}  // namespace lfl
