#include "lfl/residue_oracle.hpp"

#include <array>
#include <set>
#include <sstream>

#include "lfl/errors.hpp"
#include "lfl/hecke.hpp"

namespace lfl {
namespace {

using Mat2 = std::array<long, 4>;  // a b / c d

long ipow(long p, long k) {
  long r = 1;
  for (long i = 0; i < k; ++i) r *= p;
  return r;
}

// Valuation of x modulo p^k (k when x = 0).
long valuation(long x, long p, long k) {
  long v = 0;
  while (v < k && x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

void check_prime(long p) {
  if (p != 2 && p != 3 && p != 5 && p != 7) throw ComputationError("oracle supports p in {2,3,5,7}");
}

void check_budget(long p, long k, int entries, const OracleLimits& limits) {
  double n = 1;
  for (int i = 0; i < entries * k; ++i) n *= static_cast<double>(p);
  if (n > static_cast<double>(limits.max_enumeration)) {
    throw ComputationError("oracle resource bound exceeded");
  }
}

// All g in Mat_2(Z/p^k) with unit determinant; `iwahori` adds b = 0 mod p.
// The Iwahori subgroup is the preimage of the lower-triangular Borel, the one
// normalised by omega = diag(p, 1) P_s.
template <class F>
void for_each_group_element(long p, long k, bool iwahori, F&& f) {
  const long n = ipow(p, k);
  for (long a = 0; a < n; ++a) {
    for (long b = 0; b < n; b += iwahori ? p : 1) {
      for (long c = 0; c < n; ++c) {
        for (long d = 0; d < n; ++d) {
          if (iwahori && (a % p == 0 || d % p == 0)) continue;
          if (((a * d - b * c) % p + p) % p == 0) continue;
          f(Mat2{a, b, c, d});
        }
      }
    }
  }
}

// Representative diag(p^l) P_sigma scaled by p^shift so that it is integral.
Mat2 scaled_representative(const ExtAffineWeylElement& w, long p, long shift) {
  const long x = ipow(p, w.translation[0] + shift);
  const long y = ipow(p, w.translation[1] + shift);
  if (w.finite.is_identity()) return {x, 0, 0, y};
  return {0, x, y, 0};
}

}  // namespace

std::uint64_t oracle_k_coset_count(const Coweight& lam, long p, const OracleLimits& limits) {
  check_prime(p);
  if (lam.rank() != 2) throw ComputationError("oracle is GL(2) only");
  const long m = lam[0] - lam[1];
  const long k = std::max(1L, std::labs(m));
  check_budget(p, k, 4, limits);
  std::uint64_t total = 0;
  std::uint64_t stabiliser = 0;
  for_each_group_element(p, k, false, [&](const Mat2& g) {
    ++total;
    // x^{-1} g x has entries b p^{-m}, c p^{m}.
    bool inside = (m <= 0 || valuation(g[1], p, k) >= m) && (m >= 0 || valuation(g[2], p, k) >= -m);
    if (inside) ++stabiliser;
  });
  return total / stabiliser;
}

std::uint64_t oracle_iwahori_coset_count(const ExtAffineWeylElement& w, long p, const OracleLimits& limits) {
  check_prime(p);
  const long m = w.translation[0] - w.translation[1];
  // Conditions on w^{-1} g w: valuations up to |m| + 1 must be visible.
  const long k = std::labs(m) + 1;
  check_budget(p, k, 4, limits);
  const bool swap = !w.finite.is_identity();
  std::uint64_t total = 0;
  std::uint64_t stabiliser = 0;
  for_each_group_element(p, k, true, [&](const Mat2& g) {
    ++total;
    // D^{-1} g D with D = diag(p^l): upper-right b p^{-m}, lower-left c p^{m}.
    const long vb = valuation(g[1], p, k) - m;
    const long vc = valuation(g[2], p, k) + m;
    // After conjugating by the permutation the two off-diagonal entries trade places.
    const long upper = swap ? vc : vb;
    const long lower = swap ? vb : vc;
    if (upper >= 1 && lower >= 0) ++stabiliser;
  });
  return total / stabiliser;
}

bool oracle_coset_contained(const ExtAffineWeylElement& w, OracleTarget target, long p, long k,
                            const OracleLimits& limits) {
  check_prime(p);
  const long shift = std::max(0L, -std::min(w.translation[0], w.translation[1]));
  if (k < shift + 1) throw ComputationError("oracle level too small for this element");
  check_budget(p, k, 4, limits);
  // Entry (r, j) of i1 w i2 only involves row r of i1 and column j of i2, and rows
  // (columns) of an Iwahori element vary independently, so checking every
  // (row, column) pair is the same as checking every pair (i1, i2).
  const long n = ipow(p, k);
  std::vector<std::array<long, 2>> top_rows, bottom_rows, left_cols, right_cols;
  for (long u = 0; u < n; ++u) {
    for (long v = 0; v < n; ++v) {
      const bool unit_u = u % p != 0;
      const bool unit_v = v % p != 0;
      if (unit_u && v % p == 0) top_rows.push_back({u, v});     // (a, b), b in pO
      if (unit_v) bottom_rows.push_back({u, v});                // (c, d)
      if (unit_u) left_cols.push_back({u, v});                  // (a, c)
      if (u % p == 0 && unit_v) right_cols.push_back({u, v});   // (b, d)
    }
  }
  const Mat2 x = scaled_representative(w, p, shift);
  const long unit = ipow(p, shift);
  const std::vector<std::array<long, 2>>* rows[2] = {&top_rows, &bottom_rows};
  const std::vector<std::array<long, 2>>* cols[2] = {&left_cols, &right_cols};
  for (int r = 0; r < 2; ++r) {
    for (int j = 0; j < 2; ++j) {
      const long need = (target == OracleTarget::IwahoriOrder && r == 0 && j == 1) ? unit * p : unit;
      for (const auto& row : *rows[r]) {
        const long left0 = row[0] * x[0] + row[1] * x[2];
        const long left1 = row[0] * x[1] + row[1] * x[3];
        for (const auto& col : *cols[j]) {
          if ((left0 * col[0] + left1 * col[1]) % need != 0) return false;
        }
      }
    }
  }
  return true;
}

Rational oracle_det_valuation_volume(long d, long p, long k, const OracleLimits& limits) {
  check_prime(p);
  if (d < 0 || k <= d) throw ComputationError("oracle level must exceed the valuation");
  check_budget(p, k, 4, limits);
  const long n = ipow(p, k);
  std::uint64_t hits = 0;
  for (long a = 0; a < n; ++a) {
    for (long b = 0; b < n; ++b) {
      for (long c = 0; c < n; ++c) {
        for (long e = 0; e < n; ++e) {
          long det = ((a * e - b * c) % n + n) % n;
          if (valuation(det, p, k) == d) ++hits;
        }
      }
    }
  }
  std::uint64_t iwahori = 0;
  for_each_group_element(p, k, true, [&](const Mat2&) { ++iwahori; });
  // Additive Haar measure on Mat_2 is |det|^2 times the multiplicative one.
  Rational vol(static_cast<long>(hits), static_cast<long>(iwahori));
  vol *= Rational(ipow(p, 2 * d));
  vol.canonicalize();
  return vol;
}

OracleReport residue_ring_oracle(const Coweight& lam, long level, long p, const OracleLimits& limits) {
  OracleReport report;
  report.lambda = GroupData::gl(2).dominant_representative(lam);
  report.p = p;
  report.level = level;
  report.k_cosets = oracle_k_coset_count(lam, p, limits);
  for (const auto& w : double_coset_elements(report.lambda)) {
    OracleRow row;
    row.w = w;
    row.length = affine_gl2::length(w);
    row.iwahori_cosets = oracle_iwahori_coset_count(w, p, limits);
    row.in_mat_o = oracle_coset_contained(w, OracleTarget::MatO, p, level, limits);
    row.in_iwahori_order = oracle_coset_contained(w, OracleTarget::IwahoriOrder, p, level, limits);
    report.rows.push_back(row);
  }
  return report;
}

std::string oracle_tsv(const OracleReport& report) {
  std::ostringstream os;
  os << "# lambda\t" << report.lambda.str() << "\tp\t" << report.p << "\tlevel\t" << report.level
     << "\tk_cosets\t" << report.k_cosets << "\n";
  os << "w\tlength\tiwahori_cosets\tin_mat_O\tin_iwahori_order\n";
  for (const auto& r : report.rows) {
    os << r.w.str() << "\t" << r.length << "\t" << r.iwahori_cosets << "\t" << (r.in_mat_o ? 1 : 0) << "\t"
       << (r.in_iwahori_order ? 1 : 0) << "\n";
  }
  return os.str();
}

}  // namespace lfl
