#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lfl/root_data.hpp"
#include "lfl/scalar.hpp"

namespace lfl {

/// Brute-force checks over Mat_2(Z/p^k) for GL(2).
struct OracleLimits {
  std::uint64_t max_enumeration = 50'000'000;
};

/// |K pi^lambda K / K| = [K : K cap x K x^{-1}], x = diag(p^lambda).
std::uint64_t oracle_k_coset_count(const Coweight& lam, long p, const OracleLimits& limits = {});
/// |I w I / I| = [I : I cap w I w^{-1}].
std::uint64_t oracle_iwahori_coset_count(const ExtAffineWeylElement& w, long p,
                                         const OracleLimits& limits = {});

enum class OracleTarget { MatO, IwahoriOrder };
/// Whether i1 w i2 lies in the target for every i1, i2 in I mod p^k.
bool oracle_coset_contained(const ExtAffineWeylElement& w, OracleTarget target, long p, long k,
                            const OracleLimits& limits = {});

/// vol({g in Mat_2(O) : v(det g) = d}) with vol(I) = 1, counted modulo p^k.
Rational oracle_det_valuation_volume(long d, long p, long k, const OracleLimits& limits = {});

struct OracleRow {
  ExtAffineWeylElement w;
  long length = 0;
  std::uint64_t iwahori_cosets = 0;
  bool in_mat_o = false;
  bool in_iwahori_order = false;
};

struct OracleReport {
  Coweight lambda;
  long p = 0;
  long level = 0;
  std::uint64_t k_cosets = 0;
  std::vector<OracleRow> rows;
};

/// Coset statistics for K pi^lambda K and each affine Weyl element in W t_lambda W.
OracleReport residue_ring_oracle(const Coweight& lam, long level, long p, const OracleLimits& limits = {});
std::string oracle_tsv(const OracleReport& report);

}  // namespace lfl
