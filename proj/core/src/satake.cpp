#include "lfl/satake.hpp"

#include <algorithm>
#include <numeric>

#include "lfl/errors.hpp"
#include "lfl/kostka_foulkes.hpp"

namespace lfl {
namespace {

using Monomial = std::vector<long>;
using MultiPoly = std::map<Monomial, Scalar>;

// [m]_t! = prod_{j=1..m} (1 - t^j) / (1 - t).
Scalar q_factorial(long m, const Scalar& t) {
  Scalar r(1);
  for (long j = 1; j <= m; ++j) {
    Scalar s(0);
    for (long i = 0; i < j; ++i) s += t.pow(i);
    r *= s;
  }
  return r;
}

// Poincare polynomial of the stabiliser of lambda in S_n at t.
Scalar stabiliser_poincare(const Coweight& lam, int n, const Scalar& t) {
  Scalar r(1);
  int i = 0;
  while (i < n) {
    int j = i;
    while (j < n && lam[j] == lam[i]) ++j;
    r *= q_factorial(j - i, t);
    i = j;
  }
  return r;
}

std::vector<long> gl_part(const Coweight& lam, int n) {
  return std::vector<long>(lam.entries().begin(), lam.entries().begin() + n);
}

void add_term(SphericalElement& f, const Coweight& lam, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = f.emplace(lam, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) f.erase(it);
  }
}

Scalar torus_factor(const Coweight& lam, const SatakeParameter& alpha, int n) {
  Scalar r(1);
  for (std::size_t i = static_cast<std::size_t>(n); i < lam.rank(); ++i) r *= alpha[i].pow(lam[i]);
  return r;
}

}  // namespace

void validate_parameter(const SatakeParameter& alpha, const GroupData& g) {
  if (alpha.size() != g.rank()) throw ComputationError("Satake parameter has wrong length");
  for (const auto& a : alpha) {
    if (a.is_zero()) throw ComputationError("Satake parameter entries must be nonzero");
  }
}

Scalar evaluate_weight(const SatakeParameter& alpha, const Coweight& mu) {
  if (alpha.size() != mu.rank()) throw ComputationError("parameter/weight rank mismatch");
  Scalar r(1);
  for (std::size_t i = 0; i < mu.rank(); ++i) {
    if (mu[i] != 0) r *= alpha[i].pow(mu[i]);
  }
  return r;
}

Scalar character_trace(const Character& c, const SatakeParameter& alpha) {
  Scalar r(0);
  for (const auto& [mu, m] : c) r += Scalar(m) * evaluate_weight(alpha, mu);
  return r;
}

SphericalElement spherical_unit(const GroupData& g) { return {{Coweight(g.rank()), Scalar(1)}}; }

SphericalElement add(const SphericalElement& a, const SphericalElement& b) {
  SphericalElement r = a;
  for (const auto& [lam, c] : b) add_term(r, lam, c);
  return r;
}

SphericalElement scale(const SphericalElement& a, const Scalar& c) {
  SphericalElement r;
  for (const auto& [lam, v] : a) add_term(r, lam, v * c);
  return r;
}

SphericalElement degree_part(const SphericalElement& f, long d, const GroupData& g) {
  SphericalElement r;
  for (const auto& [lam, v] : f) {
    if (chi_degree(lam, g) == d) r.emplace(lam, v);
  }
  return r;
}

ClassCombination eps_twist(const ClassCombination& c, const GroupData& g) {
  ClassCombination r;
  for (const auto& [lam, v] : c) {
    if (!g.is_dominant(lam)) throw ComputationError("class index must be dominant");
    r[lam] = sgn_value(lam, g) > 0 ? v : -v;
  }
  return r;
}

ClassCombination classes_of(const std::map<Coweight, long>& decomposition) {
  ClassCombination r;
  for (const auto& [lam, m] : decomposition) {
    if (m != 0) r[lam] = Scalar(m);
  }
  return r;
}

SphericalElement satake_of_class(const ClassCombination& c, const LocalSetting& s) {
  const GroupData& g = s.group;
  const int n = g.gl_rank();
  const Scalar t = s.field.q().inverse();
  SphericalElement f;
  for (const auto& [lam, coeff] : c) {
    if (coeff.is_zero()) continue;
    if (!g.is_dominant(lam)) throw ComputationError("class index must be dominant");
    if (n == 0) {
      add_term(f, lam, coeff);
      continue;
    }
    const long shift = lam[n - 1];
    Partition shape;
    for (int i = 0; i < n; ++i) shape.push_back(lam[i] - shift);
    for (const auto& [mu, mult] : irreducible_character(lam, g)) {
      if (!g.is_dominant(mu)) continue;
      Partition content;
      for (int i = 0; i < n; ++i) content.push_back(mu[i] - shift);
      Scalar kf = kostka_foulkes(shape, content).evaluate(t);
      Scalar value = coeff * kf * s.field.q_half_power(-pairing(g.two_delta(), mu));
      add_term(f, mu, value);
    }
  }
  return f;
}

ClassCombination class_of_spherical(const SphericalElement& f, const LocalSetting& s) {
  const GroupData& g = s.group;
  ClassCombination classes;
  SphericalElement rest = f;
  while (!rest.empty()) {
    // Lexicographically largest support point is dominance-maximal.
    const auto& [lam, v] = *rest.rbegin();
    if (!g.is_dominant(lam)) throw ComputationError("spherical support must be dominant");
    Scalar c = v * s.field.q_half_power(pairing(g.two_delta(), lam));
    Coweight top = lam;
    classes[top] += c;
    rest = add(rest, scale(satake_of_class({{top, c}}, s), Scalar(-1)));
  }
  for (auto it = classes.begin(); it != classes.end();) {
    it = it->second.is_zero() ? classes.erase(it) : std::next(it);
  }
  return classes;
}

Scalar coset_volume(const Coweight& lam, const LocalSetting& s) {
  const GroupData& g = s.group;
  if (!g.is_dominant(lam)) throw ComputationError("coset_volume needs a dominant coweight");
  const int n = g.gl_rank();
  const Scalar t = s.field.q().inverse();
  Scalar v = s.field.q_power(pairing(g.two_delta(), lam));
  v *= q_factorial(n, t);
  v /= stabiliser_poincare(lam, n, t);
  return v;
}

Scalar schur_value(const std::vector<long>& gamma, const std::vector<Scalar>& x) {
  const std::size_t n = x.size();
  if (gamma.size() != n) throw ComputationError("schur_value length mismatch");
  if (n == 0) return Scalar(1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (gamma[i] < gamma[i + 1]) throw ComputationError("schur_value needs a decreasing index");
  }
  // s_{gamma + k(1..1)} = e_n^k s_gamma.
  const long k = std::min(0L, gamma.back());
  Scalar prefactor(1);
  for (const auto& xi : x) prefactor *= xi.pow(k);
  std::vector<long> shifted = gamma;
  for (auto& gi : shifted) gi -= k;
  const long top = shifted.front() + static_cast<long>(n);
  // h_m(x_1..x_j) by adding one variable at a time.
  std::vector<Scalar> h(static_cast<std::size_t>(top + 1), Scalar(0));
  h[0] = Scalar(1);
  for (const auto& xi : x) {
    for (long m = 1; m <= top; ++m) h[m] += xi * h[m - 1];
  }
  auto hval = [&](long m) { return (m < 0 || m > top) ? Scalar(0) : h[m]; };
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Scalar det(0);
  do {
    Scalar term(Permutation(perm).sign());
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) {
      term *= hval(shifted[i] - static_cast<long>(i) + perm[i]);
    }
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return prefactor * det;
}

Scalar hall_littlewood_p(const Coweight& lam, const SatakeParameter& alpha, const Scalar& t,
                         const GroupData& g) {
  const int n = g.gl_rank();
  if (!g.is_dominant(lam)) throw ComputationError("Hall-Littlewood index must be dominant");
  const Scalar torus = torus_factor(lam, alpha, n);
  if (n == 0) return torus;
  // F = x^lambda prod_{i<j} (x_i - t x_j), expanded.
  MultiPoly poly{{gl_part(lam, n), Scalar(1)}};
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      MultiPoly next;
      for (const auto& [mono, c] : poly) {
        Monomial a = mono;
        a[i] += 1;
        next[a] += c;
        Monomial b = mono;
        b[j] += 1;
        next[b] -= c * t;
      }
      poly.swap(next);
    }
  }
  // sum_w sgn(w) w(F) / Vandermonde = sum_beta c_beta sgn(sort) s_{sort(beta) - delta_n}.
  std::vector<Scalar> x(alpha.begin(), alpha.begin() + n);
  Scalar total(0);
  for (const auto& [beta, c] : poly) {
    if (c.is_zero()) continue;
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return beta[a] > beta[b]; });
    std::vector<long> sorted;
    bool repeated = false;
    for (int i = 0; i < n; ++i) {
      sorted.push_back(beta[order[i]]);
      if (i > 0 && sorted[i] == sorted[i - 1]) repeated = true;
    }
    if (repeated) continue;
    int sign = Permutation(order).sign();
    std::vector<long> gamma;
    for (int i = 0; i < n; ++i) gamma.push_back(sorted[i] - (n - 1 - i));
    total += Scalar(sign) * c * schur_value(gamma, x);
  }
  return torus * total / stabiliser_poincare(lam, n, t);
}

Scalar spherical_value(const Coweight& lam, const SatakeParameter& alpha, const LocalSetting& s) {
  validate_parameter(alpha, s.group);
  const Scalar t = s.field.q().inverse();
  Scalar p = hall_littlewood_p(lam, alpha, t, s.group);
  return s.field.q_half_power(pairing(s.group.two_delta(), lam)) * p / coset_volume(lam, s);
}

Scalar satake_eigenvalue(const SphericalElement& f, const SatakeParameter& alpha, const LocalSetting& s) {
  Scalar r(0);
  for (const auto& [lam, v] : f) r += v * coset_volume(lam, s) * spherical_value(lam, alpha, s);
  return r;
}

SphericalElement spherical_convolve(const SphericalElement& f, const SphericalElement& h,
                                    const LocalSetting& s) {
  const GroupData& g = s.group;
  ClassCombination cf = class_of_spherical(f, s);
  ClassCombination ch = class_of_spherical(h, s);
  ClassCombination product;
  for (const auto& [a, ca] : cf) {
    const Character va = irreducible_character(a, g);
    for (const auto& [b, cb] : ch) {
      for (const auto& [lam, m] : tensor_decompose(va, irreducible_character(b, g), g)) {
        product[lam] += ca * cb * Scalar(m);
      }
    }
  }
  return satake_of_class(product, s);
}

SphericalElement basic_function(const GradedRep& rho, long d, const LocalSetting& s) {
  if (!check_positivity(rho)) throw ComputationError("grading not positive");
  if (d < 0) return {};
  Character piece = sym_graded_piece(rho, d);
  ClassCombination classes = classes_of(decompose_character(piece, rho.group));
  return satake_of_class(eps_twist(classes, rho.group), s);
}

std::vector<SphericalElement> basic_function_family(const GradedRep& rho, long max_degree,
                                                    const LocalSetting& s) {
  std::vector<SphericalElement> out;
  for (long d = 0; d <= max_degree; ++d) out.push_back(basic_function(rho, d, s));
  return out;
}

}  // namespace lfl
