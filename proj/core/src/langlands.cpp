#include "lfl/langlands.hpp"

#include "lfl/errors.hpp"

namespace lfl {
namespace {

Coweight join(const std::vector<long>& gl, const Coweight& twist, const GroupData& g) {
  std::vector<long> v = gl;
  if (twist.rank() == 0) {
    v.resize(g.rank(), 0);
  } else {
    if (twist.rank() != static_cast<std::size_t>(g.torus_rank())) {
      throw ConfigError("torus twist has wrong rank for " + g.name());
    }
    for (std::size_t i = 0; i < twist.rank(); ++i) v.push_back(twist[i]);
  }
  return Coweight(std::move(v));
}

// Lower Jordan blocks on the standard basis: e v_i = v_{i+1} inside a block.
Matrix standard_nilpotent(const Partition& jordan, int n) {
  Matrix e(n, Vector(n, Scalar(0)));
  long total = 0;
  for (long b : jordan) total += b;
  if (!jordan.empty() && total != n) throw ConfigError("Jordan type must partition the GL rank");
  int start = 0;
  for (long b : jordan) {
    for (int i = start; i + 1 < start + b; ++i) e[i + 1][i] = Scalar(1);
    start += static_cast<int>(b);
  }
  return e;
}

}  // namespace

bool is_zero_nilpotent(const Partition& jordan) {
  for (long b : jordan) {
    if (b > 1) return false;
  }
  return true;
}

Realization Realization::standard(const GroupData& g, const Coweight& torus_twist) {
  if (g.gl_rank() == 0) throw ConfigError("standard realisation needs a GL factor");
  Realization r(g);
  r.components_.push_back({Kind::Standard, 1, torus_twist});
  for (int i = 0; i < g.gl_rank(); ++i) {
    std::vector<long> gl(g.gl_rank(), 0);
    gl[i] = 1;
    r.weights_.push_back(join(gl, torus_twist, g));
  }
  return r;
}

Realization Realization::sym_power(const GroupData& g, long k, const Coweight& torus_twist) {
  if (g.gl_rank() != 2) throw ConfigError("Sym^k realisation is implemented for GL(2)");
  if (k < 0) throw ConfigError("Sym^k needs k >= 0");
  Realization r(g);
  r.components_.push_back({Kind::SymPower, k, torus_twist});
  for (long j = 0; j <= k; ++j) r.weights_.push_back(join({k - j, j}, torus_twist, g));
  return r;
}

Realization Realization::torus_character(const GroupData& g, const Coweight& lam) {
  if (lam.rank() != g.rank()) throw ConfigError("character has wrong rank");
  for (int i = 0; i < g.gl_rank(); ++i) {
    if (lam[i] != lam[0]) throw ConfigError("one-dimensional character must be constant on the GL block");
  }
  Realization r(g);
  r.components_.push_back({Kind::TorusCharacter, 0, lam});
  r.weights_.push_back(lam);
  return r;
}

Realization Realization::direct_sum(const Realization& a, const Realization& b) {
  if (!(a.group_ == b.group_)) throw ConfigError("direct sum of realisations of different groups");
  Realization r = a;
  r.components_.insert(r.components_.end(), b.components_.begin(), b.components_.end());
  r.weights_.insert(r.weights_.end(), b.weights_.begin(), b.weights_.end());
  return r;
}

GradedRep Realization::graded_rep() const {
  Character c;
  for (const auto& w : weights_) c[w] += 1;
  return {group_, c};
}

Matrix Realization::nilpotent_matrix(const Partition& jordan) const {
  const std::size_t dim = dimension();
  Matrix m(dim, Vector(dim, Scalar(0)));
  const bool zero = is_zero_nilpotent(jordan);
  const int n = group_.gl_rank();
  const Matrix e = standard_nilpotent(jordan, n);
  std::size_t offset = 0;
  for (const auto& c : components_) {
    switch (c.kind) {
      case Kind::Standard:
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) m[offset + i][offset + j] = e[i][j];
        }
        offset += n;
        break;
      case Kind::SymPower:
        // e acts on x^{k-j} y^j as a derivation, e x = e_{10} y + ..., e y = e_{01} x + ....
        for (long j = 0; j <= c.power; ++j) {
          const long a = c.power - j;
          if (a > 0 && j < c.power) m[offset + j + 1][offset + j] += Scalar(a) * e[1][0];
          if (j > 0) m[offset + j - 1][offset + j] += Scalar(j) * e[0][1];
        }
        offset += c.power + 1;
        break;
      case Kind::TorusCharacter:
        offset += 1;
        break;
    }
  }
  if (zero) return Matrix(dim, Vector(dim, Scalar(0)));
  return m;
}

LanglandsParameter make_parameter(const GroupData& g, SatakeParameter s, Partition jordan, bool sgn_twisted,
                                  const QField& field) {
  if (s.size() != g.rank()) throw ConfigError("semisimple part has wrong length");
  for (const auto& a : s) {
    if (a.is_zero()) throw ComputationError("singular semisimple part");
  }
  if (!is_zero_nilpotent(jordan)) {
    const int n = g.gl_rank();
    const Matrix e = standard_nilpotent(jordan, n);
    const Scalar q_inv = field.q().inverse();
    // (Ad(s) e)_{ij} = s_i e_{ij} / s_j must equal q^{-1} e_{ij}.
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (e[i][j].is_zero()) continue;
        if (!(s[i] / s[j] == q_inv)) throw ConfigError("parameter violates Ad(s)e = q^{-1} e");
      }
    }
  }
  return {std::move(s), std::move(jordan), sgn_twisted};
}

std::vector<EigenDatum> nilpotent_invariants(const Realization& rho, const LanglandsParameter& p) {
  const GroupData& g = rho.group();
  if (p.s.size() != g.rank()) throw ComputationError("parameter rank does not match realisation");
  const Matrix e = rho.nilpotent_matrix(p.jordan);
  const auto& weights = rho.weights();
  struct Group {
    Scalar eigenvalue;
    long degree;
    std::vector<std::size_t> columns;
  };
  std::vector<Group> groups;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    Scalar value = evaluate_weight(p.s, weights[i]);
    if (p.sgn_twisted && sgn_value(weights[i], g) < 0) value = -value;
    const long d = chi_degree(weights[i], g);
    bool placed = false;
    for (auto& grp : groups) {
      if (grp.degree == d && grp.eigenvalue == value) {
        grp.columns.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back({value, d, {i}});
  }
  std::vector<EigenDatum> out;
  for (const auto& grp : groups) {
    Matrix block(e.size(), Vector(grp.columns.size(), Scalar(0)));
    for (std::size_t r = 0; r < e.size(); ++r) {
      for (std::size_t c = 0; c < grp.columns.size(); ++c) block[r][c] = e[r][grp.columns[c]];
    }
    const long dim = static_cast<long>(kernel_basis(block, grp.columns.size()).size());
    if (dim > 0) out.push_back({grp.eigenvalue, grp.degree, dim});
  }
  return out;
}

LFactor l_factor(const LanglandsParameter& p, const Realization& rho) {
  for (const auto& a : p.s) {
    if (a.is_zero()) throw ComputationError("singular semisimple part");
  }
  LFactor lf;
  lf.data = nilpotent_invariants(rho, p);
  LaurentPoly den(1);
  for (const auto& datum : lf.data) {
    if (datum.degree <= 0) throw ComputationError("grading not positive");
    for (long i = 0; i < datum.multiplicity; ++i) den = den * LaurentPoly::one_minus(datum.eigenvalue, datum.degree);
  }
  lf.denominator = den;
  lf.value = RationalFunction::reciprocal(den);
  return lf;
}

bool koszul_certificate(const PowerSeries& series, const LanglandsParameter& p, const Realization& rho) {
  const LFactor lf = l_factor(p, rho);
  const long span = lf.denominator.high_degree();
  const std::size_t n = series.order();
  if (static_cast<long>(n) < 2 * span + 2) throw ComputationError("insufficient order");
  const PowerSeries product = series * lf.denominator;
  for (std::size_t k = n / 2 + 1; k <= n; ++k) {
    if (!product[k].is_zero()) return false;
  }
  return true;
}

}  // namespace lfl
