#pragma once

#include <set>
#include <vector>

#include "lfl/rep_ring.hpp"
#include "lfl/root_data.hpp"

namespace lfl {

/// Cone in the coweight lattice cut out by homogeneous forms: f(x) = 0 and g(x) >= 0.
struct ConeData {
  GroupData group;
  std::vector<Coweight> equations;
  std::vector<Coweight> inequalities;

  bool contains(const Coweight& x) const;
};

void validate(const ConeData& c);

/// The paper-style family a + b = n c, a, b, c >= 0 on GL(2) x G_m with chi = (0, 0, 1).
ConeData symmetric_power_cone(long n);

/// Cone points with all coordinates in [-bound, bound].
std::vector<Coweight> cone_points(const ConeData& c, long bound);

/// Dominant cone points that are not a sum of two nonzero cone points, found in the box of
/// radius 2*bound. Throws "bound too small" if one lies outside the box of radius bound or if
/// the completeness certificate fails.
std::set<Coweight> indecomposables(const ConeData& c, long bound);

/// Maximal elements under the dominance order.
std::set<Coweight> s_max(const std::set<Coweight>& s, const GroupData& g);

/// Sum of the irreducibles V(lambda), lambda in S_max, graded by chi.
GradedRep rho_from_cone(const ConeData& c, long bound);

}  // namespace lfl
