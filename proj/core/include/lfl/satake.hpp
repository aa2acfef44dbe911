#pragma once

#include <map>
#include <vector>

#include "lfl/rep_ring.hpp"
#include "lfl/root_data.hpp"
#include "lfl/scalar.hpp"

namespace lfl {

/// The split group together with the residue-field size q.
struct LocalSetting {
  GroupData group;
  QField field;
};

/// K-biinvariant function: dominant coweight lambda -> value on K pi^lambda K.
using SphericalElement = std::map<Coweight, Scalar>;

/// Semisimple class in the dual torus: one nonzero entry per lattice coordinate.
using SatakeParameter = std::vector<Scalar>;

void validate_parameter(const SatakeParameter& alpha, const GroupData& g);
/// alpha^mu = prod alpha_i^{mu_i}.
Scalar evaluate_weight(const SatakeParameter& alpha, const Coweight& mu);
/// Trace of alpha on a (virtual) character.
Scalar character_trace(const Character& c, const SatakeParameter& alpha);

SphericalElement spherical_unit(const GroupData& g);
SphericalElement add(const SphericalElement& a, const SphericalElement& b);
SphericalElement scale(const SphericalElement& a, const Scalar& c);
/// Restriction to chi-degree d.
SphericalElement degree_part(const SphericalElement& f, long d, const GroupData& g);

/// Each [V(lambda)] multiplied by (-1)^{<2 delta, lambda>}.
ClassCombination eps_twist(const ClassCombination& c, const GroupData& g);
ClassCombination classes_of(const std::map<Coweight, long>& decomposition);

/// Satake preimage: S([V(lambda)]) = sum_mu q^{-<delta,mu>} K_{lambda,mu}(q^{-1}) 1_mu.
SphericalElement satake_of_class(const ClassCombination& c, const LocalSetting& s);
/// Inverse of satake_of_class (unitriangular solve).
ClassCombination class_of_spherical(const SphericalElement& f, const LocalSetting& s);

/// |K pi^lambda K / K| with vol(K) = 1.
Scalar coset_volume(const Coweight& lam, const LocalSetting& s);
/// Macdonald's zonal spherical function omega_lambda(alpha), omega_0 = 1.
Scalar spherical_value(const Coweight& lam, const SatakeParameter& alpha, const LocalSetting& s);
/// sum_lambda f(lambda) vol(lambda) omega_lambda(alpha).
Scalar satake_eigenvalue(const SphericalElement& f, const SatakeParameter& alpha, const LocalSetting& s);

/// Hall-Littlewood P_lambda(x; t) at x = alpha (GL block), times alpha^{torus part}.
Scalar hall_littlewood_p(const Coweight& lam, const SatakeParameter& alpha, const Scalar& t,
                         const GroupData& g);
/// Schur polynomial s_gamma at alpha via Jacobi-Trudi; gamma weakly decreasing.
Scalar schur_value(const std::vector<long>& gamma, const std::vector<Scalar>& x);

/// Convolution in H(G, K) computed through the representation ring.
SphericalElement spherical_convolve(const SphericalElement& f, const SphericalElement& h,
                                    const LocalSetting& s);

/// Degree-d piece of the basic function f_rho = S(eps([Sym V])).
SphericalElement basic_function(const GradedRep& rho, long d, const LocalSetting& s);
/// f_{rho,0} .. f_{rho,max_degree}.
std::vector<SphericalElement> basic_function_family(const GradedRep& rho, long max_degree,
                                                    const LocalSetting& s);

}  // namespace lfl
