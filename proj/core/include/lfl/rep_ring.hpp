#pragma once

#include <map>
#include <vector>

#include "lfl/root_data.hpp"
#include "lfl/scalar.hpp"

namespace lfl {

/// Weight -> multiplicity. Genuine characters have nonnegative multiplicities;
/// virtual ones may be negative.
using Character = std::map<Coweight, long>;

/// Formal combination of irreducible classes [V(lambda)], lambda dominant.
using ClassCombination = std::map<Coweight, Scalar>;

/// A representation of the dual group with its chi-grading.
struct GradedRep {
  GroupData group;
  Character character;

  long degree(const Coweight& mu) const { return chi_degree(mu, group); }
};

long dimension(const Character& c);
bool is_genuine(const Character& c);
Character trivial_character(const GroupData& g);
Character add(const Character& a, const Character& b);
Character scale(const Character& a, long k);
Character character_product(const Character& a, const Character& b);
/// Psi^k: every weight multiplied by k.
Character adams(const Character& v, long k);

/// Weight multiplicities of V(lambda) by the Freudenthal recursion.
Character irreducible_character(const Coweight& lam, const GroupData& g);
/// Weyl dimension formula.
long weyl_dimension(const Coweight& lam, const GroupData& g);
/// Sum of V(lambda) over the given highest weights.
Character character_of_highest_weights(const std::vector<Coweight>& lams, const GroupData& g);

/// Expresses a (possibly virtual) Weyl-invariant character in the basis of
/// irreducibles by peeling off dominance-maximal weights.
std::map<Coweight, long> decompose_character(const Character& c, const GroupData& g);
/// Highest-weight decomposition of a tensor product of genuine characters.
std::map<Coweight, long> tensor_decompose(const Character& a, const Character& b, const GroupData& g);

/// Sym^n(V) by n Sym^n = sum_{k=1..n} Psi^k(V) Sym^{n-k}.
Character sym_power(const Character& v, long n, const GroupData& g);
/// Sym^0 .. Sym^n in one pass.
std::vector<Character> sym_powers(const Character& v, long n, const GroupData& g);

/// Sub-character of weights mu with <mu, chi> = d.
Character graded_piece(const GradedRep& v, long d);
/// Degree-d piece of Sym(V) = sum_k Sym^k(V), for chi-positive V.
Character sym_graded_piece(const GradedRep& v, long d);
/// True iff every weight has strictly positive chi-degree.
bool check_positivity(const GradedRep& v);

}  // namespace lfl
