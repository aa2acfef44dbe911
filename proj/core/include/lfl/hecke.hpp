#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lfl/linear_algebra.hpp"
#include "lfl/root_data.hpp"
#include "lfl/satake.hpp"
#include "lfl/scalar.hpp"

namespace lfl {

/// Element of the Iwahori-Hecke algebra of GL(2) in the basis T_w = 1_{IwI}, vol(I) = 1.
using HeckeElement = std::map<ExtAffineWeylElement, Scalar>;

namespace affine_gl2 {
ExtAffineWeylElement identity();
ExtAffineWeylElement s0();
ExtAffineWeylElement s1();
/// Length-zero generator t_(1,0) s.
ExtAffineWeylElement omega();
ExtAffineWeylElement omega_power(long k);
ExtAffineWeylElement translation(long a, long b);
ExtAffineWeylElement translation_times_s(long a, long b);
long length(const ExtAffineWeylElement& w);
}  // namespace affine_gl2

/// w = omega^rotation * s_{letters[0]} * ... with letters in {0, 1} and reduced.
struct ReducedWord {
  long rotation = 0;
  std::vector<int> letters;
};

ReducedWord reduced_word(const ExtAffineWeylElement& w);
ExtAffineWeylElement evaluate_word(const ReducedWord& word);

HeckeElement hecke_basis(const ExtAffineWeylElement& w);
HeckeElement add(const HeckeElement& a, const HeckeElement& b);
HeckeElement scale(const HeckeElement& a, const Scalar& c);
HeckeElement hecke_multiply(const HeckeElement& a, const HeckeElement& b, const QField& field);

struct HeckeModule {
  std::size_t dimension = 0;
  Matrix t_s0;
  Matrix t_s1;
  Matrix t_omega;
  Matrix t_omega_inverse;
  std::optional<SatakeParameter> parameter;

  /// M(T_w) through a reduced word.
  Matrix action(const ExtAffineWeylElement& w) const;
  Matrix action(const HeckeElement& h) const;
  /// Quadratic relations, omega s_i omega^{-1} = s_{1-i}, and omega^{+-1} inverse to each other.
  bool satisfies_relations(const QField& field) const;
};

/// Basis (spherical vector, sign vector); T_s1 = diag(q, -1), T_omega^2 = ab.
HeckeModule principal_series_module(const SatakeParameter& alpha, const QField& field);
/// T_{s_i} -> -1, T_omega -> central, so t_(1,1) -> central^2.
HeckeModule steinberg_module(const Scalar& central, const QField& field);

struct IwahoriMatrixCoefficient {
  HeckeModule module;
  Vector m;
  Vector m_dual;
};

/// <M(h) m, m~>.
Scalar pairing_value(const IwahoriMatrixCoefficient& c, const HeckeElement& h);
/// Value of the matrix-coefficient function at w: q^{-l(w)} <M(T_w) m, m~>.
Scalar matrix_coefficient_value(const IwahoriMatrixCoefficient& c, const ExtAffineWeylElement& w,
                                const QField& field);

/// I w I inside Mat_2(O).
bool coset_in_mat_O(const ExtAffineWeylElement& w);
/// I w I inside the Iwahori order [[O, pO], [O, O]] (I lower triangular mod p).
bool coset_in_iwahori_order(const ExtAffineWeylElement& w);

/// (-1)^d q^{-d/2} on the degree-d part of Mat_2(O).
HeckeElement iwahori_basic_function_stdGL2(long d, const QField& field);
/// (-1)^d q^{-d/2} on the degree-d part of the Iwahori order.
HeckeElement iwahori_order_basic_function_stdGL2(long d, const QField& field);

/// All w in W t_lambda W; lambda dominant for GL(2).
std::vector<ExtAffineWeylElement> double_coset_elements(const Coweight& lam);
/// 1_{K pi^lambda K} = sum over the I-double cosets it contains.
HeckeElement spherical_to_hecke(const SphericalElement& f);
/// K-average of an I-biinvariant function: value on K pi^lambda K.
SphericalElement hecke_to_spherical(const HeckeElement& h, const QField& field);

}  // namespace lfl
