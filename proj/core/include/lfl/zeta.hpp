#pragma once

#include <random>
#include <string>
#include <vector>

#include "lfl/hecke.hpp"
#include "lfl/power_series.hpp"
#include "lfl/rational_function.hpp"
#include "lfl/satake.hpp"

namespace lfl {

/// Formal zeta integral in t = q^{-s}.
struct ZetaSeries {
  PowerSeries series;
  std::string provenance;
};

/// Coefficient of t^d is satake_eigenvalue(phi[d], alpha); vol(K) = 1.
ZetaSeries spherical_zeta(const std::vector<SphericalElement>& phi, const SatakeParameter& alpha,
                          std::size_t order, const LocalSetting& s, std::string provenance = "spherical");
/// Same, splitting a single element by chi-degree; negative degrees are rejected.
ZetaSeries spherical_zeta(const SphericalElement& phi, const SatakeParameter& alpha, std::size_t order,
                          const LocalSetting& s, std::string provenance = "spherical");

/// Coefficient of t^d is sum_w phi_d(w) q^{l(w)} c(w); vol(I) = 1.
ZetaSeries iwahori_zeta(const std::vector<HeckeElement>& phi, const IwahoriMatrixCoefficient& c,
                        std::size_t order, const QField& field, std::string provenance = "iwahori");

struct RecognitionBounds {
  std::size_t numerator_degree = 4;
  std::size_t denominator_degree = 4;
};

/// Generator of the fractional ideal spanned by the recognised series; zero series are skipped.
RationalFunction zeta_ideal(const std::vector<ZetaSeries>& tests, const RecognitionBounds& bounds);

std::string zeta_table_text(const ZetaSeries& z);
std::string zeta_table_tsv(const ZetaSeries& z);

// Test-function batteries.

/// f_d * h for every degree d.
std::vector<SphericalElement> convolve_family(const std::vector<SphericalElement>& f, const SphericalElement& h,
                                              const LocalSetting& s);
/// Random degree-0 spherical element on GL(2) or GL(3) supported near the origin.
SphericalElement random_degree_zero(const GroupData& g, std::mt19937_64& rng);
/// Groups the terms of a family by det-valuation (sum of the translation part).
std::vector<HeckeElement> regroup_by_degree(const std::vector<HeckeElement>& family, std::size_t order);
/// Degrees 0..order of the Mat_2(O) (or Iwahori order) basic function for std on GL(2).
std::vector<HeckeElement> iwahori_family(std::size_t order, const QField& f, bool iwahori_order);
/// Right translates phi * h for h in {T_e, T_s1, T_omega, T_s0 + 2 T_e}, regrouped by degree.
std::vector<std::vector<HeckeElement>> iwahori_battery(const std::vector<HeckeElement>& phi, std::size_t order,
                                                       const QField& f);

}  // namespace lfl
