#pragma once

#include <vector>

#include "lfl/rep_ring.hpp"
#include "lfl/root_data.hpp"
#include "lfl/satake.hpp"

namespace lfl {

/// p_rho : G_m^n -> T, (x_i) -> prod lambda_i(x_i), graded by chi.
struct ToricData {
  std::size_t rank = 0;
  std::vector<Coweight> weights;
  Coweight chi;

  GroupData group() const { return GroupData::torus(static_cast<int>(rank), chi); }
  /// Representation sum of the characters lambda_i.
  GradedRep representation() const;
};

void validate(const ToricData& d);

/// Diagonal of the Smith normal form of the rank x n integer matrix (columns = weights).
std::vector<long> smith_invariants(const std::vector<std::vector<long>>& matrix);

/// p_rho surjective on lattices: rank r and all invariant factors 1.
bool is_nondegenerate(const ToricData& d);

/// #{v in Z_{>=0}^n : sum v_i lambda_i = mu}; needs <chi, lambda_i> > 0 for all i.
long vector_partition_count(const std::vector<Coweight>& weights, const Coweight& mu, const Coweight& chi);
/// (p_rho)_! of the indicator of O^n at mu, with vol(O^x) = 1.
long pushforward_basic(const ToricData& d, const Coweight& mu);
/// The pushforward as a graded family of functions on Lambda, degrees 0..max_degree.
std::vector<SphericalElement> pushforward_family(const ToricData& d, long max_degree);
/// Vector partition counts by degree without the nondegeneracy check (fibred description).
std::vector<SphericalElement> vector_partition_family(const ToricData& d, long max_degree);

/// Degenerate case: the image of the support in Z^r / sat(image) is finite and stable up to sample_bound.
bool support_projection_compact(const ToricData& d, long sample_bound);

}  // namespace lfl
