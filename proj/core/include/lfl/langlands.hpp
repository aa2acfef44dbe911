#pragma once

#include <vector>

#include "lfl/kostka_foulkes.hpp"
#include "lfl/linear_algebra.hpp"
#include "lfl/power_series.hpp"
#include "lfl/rational_function.hpp"
#include "lfl/rep_ring.hpp"
#include "lfl/satake.hpp"

namespace lfl {

/// Matrix realisation of a representation of the dual group, on a weight basis.
class Realization {
 public:
  enum class Kind { Standard, SymPower, TorusCharacter };
  struct Component {
    Kind kind = Kind::Standard;
    long power = 1;  // SymPower only
    Coweight twist;  // torus coordinates (SymPower, Standard) or the character itself
  };

  /// Standard representation of GL(n), times a torus character on the remaining coordinates.
  static Realization standard(const GroupData& g, const Coweight& torus_twist = {});
  /// Sym^k of the standard representation of GL(2) (x^{k-j} y^j has weight (k-j, j, twist)).
  static Realization sym_power(const GroupData& g, long k, const Coweight& torus_twist = {});
  /// One-dimensional character lambda (e must be zero).
  static Realization torus_character(const GroupData& g, const Coweight& lam);
  static Realization direct_sum(const Realization& a, const Realization& b);

  const GroupData& group() const { return group_; }
  const std::vector<Coweight>& weights() const { return weights_; }
  std::size_t dimension() const { return weights_.size(); }
  GradedRep graded_rep() const;
  /// rho(e) for the nilpotent with the given Jordan type on the GL block.
  Matrix nilpotent_matrix(const Partition& jordan) const;

 private:
  explicit Realization(GroupData g) : group_(std::move(g)) {}
  GroupData group_;
  std::vector<Component> components_;
  std::vector<Coweight> weights_;
};

/// (s, e, sgn flag). e is the standard nilpotent with lower Jordan blocks of the given type.
struct LanglandsParameter {
  SatakeParameter s;
  Partition jordan;  // empty or all ones means e = 0
  bool sgn_twisted = false;
};

/// Validates entries and Ad(s) e = q^{-1} e on the GL block.
LanglandsParameter make_parameter(const GroupData& g, SatakeParameter s, Partition jordan, bool sgn_twisted,
                                  const QField& field);
bool is_zero_nilpotent(const Partition& jordan);

struct EigenDatum {
  Scalar eigenvalue;  // of s on V^e, sgn twist included
  long degree = 0;    // chi-degree
  long multiplicity = 0;
};

/// Eigenvalues of s on V^e = ker rho(e), grouped by (eigenvalue, degree).
std::vector<EigenDatum> nilpotent_invariants(const Realization& rho, const LanglandsParameter& p);

struct LFactor {
  RationalFunction value;
  LaurentPoly denominator;  // prod (1 - a_i t^{d_i})
  std::vector<EigenDatum> data;
};

LFactor l_factor(const LanglandsParameter& p, const Realization& rho);
/// series * det(1 - t^d s | V^e) vanishes in degrees floor(N/2)+1 .. N.
bool koszul_certificate(const PowerSeries& series, const LanglandsParameter& p, const Realization& rho);

}  // namespace lfl
