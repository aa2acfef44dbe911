#include "lfl/semigroup.hpp"

#include <algorithm>

#include "lfl/errors.hpp"

namespace lfl {
namespace {

long sup_norm(const Coweight& x) {
  long m = 0;
  for (long v : x.entries()) m = std::max(m, std::labs(v));
  return m;
}

// Indecomposables of the whole cone inside the box of the given radius.
std::vector<Coweight> cone_indecomposables(const std::vector<Coweight>& points, const std::set<Coweight>& lookup) {
  std::vector<Coweight> out;
  for (const auto& x : points) {
    if (x.is_zero()) continue;
    bool split = false;
    for (const auto& y : points) {
      if (y.is_zero() || y == x) continue;
      if (lookup.count(x - y) != 0) {
        split = true;
        break;
      }
    }
    if (!split) out.push_back(x);
  }
  return out;
}

}  // namespace

bool ConeData::contains(const Coweight& x) const {
  for (const auto& f : equations) {
    if (pairing(f, x) != 0) return false;
  }
  for (const auto& g : inequalities) {
    if (pairing(g, x) < 0) return false;
  }
  return true;
}

void validate(const ConeData& c) {
  for (const auto& f : c.equations) {
    if (f.rank() != c.group.rank()) throw ConfigError("cone equation has wrong rank");
  }
  for (const auto& g : c.inequalities) {
    if (g.rank() != c.group.rank()) throw ConfigError("cone inequality has wrong rank");
  }
}

ConeData symmetric_power_cone(long n) {
  if (n < 1) throw ConfigError("symmetric power cone needs n >= 1");
  ConeData c{GroupData::gl_times_torus(2, 1, Coweight{0, 0, 1}), {}, {}};
  c.equations.push_back(Coweight{1, 1, -n});
  c.inequalities = {Coweight{1, 0, 0}, Coweight{0, 1, 0}, Coweight{0, 0, 1}};
  return c;
}

std::vector<Coweight> cone_points(const ConeData& c, long bound) {
  validate(c);
  const std::size_t r = c.group.rank();
  std::vector<Coweight> out;
  Coweight x(r);
  for (std::size_t i = 0; i < r; ++i) x[i] = -bound;
  while (true) {
    if (c.contains(x)) out.push_back(x);
    std::size_t i = 0;
    while (i < r && x[i] == bound) {
      x[i] = -bound;
      ++i;
    }
    if (i == r) break;
    ++x[i];
  }
  return out;
}

std::set<Coweight> indecomposables(const ConeData& c, long bound) {
  if (bound < 1) throw ComputationError("bound too small");
  const auto points = cone_points(c, 2 * bound);
  const std::set<Coweight> lookup(points.begin(), points.end());
  // Closure under addition, checked on a sample of pairs.
  const std::size_t sample = std::min<std::size_t>(points.size(), 64);
  for (std::size_t i = 0; i < sample; ++i) {
    for (const auto& y : points) {
      const Coweight z = points[i] + y;
      if (sup_norm(z) <= 2 * bound && lookup.count(z) == 0) {
        throw ComputationError("cone is not closed under addition");
      }
    }
  }
  const auto gens = cone_indecomposables(points, lookup);
  for (const auto& g : gens) {
    if (sup_norm(g) > bound) throw ComputationError("bound too small");
  }
  // Completeness: every cone point of the small box is a sum of generators.
  std::set<Coweight> reached{Coweight(c.group.rank())};
  std::vector<Coweight> frontier(reached.begin(), reached.end());
  while (!frontier.empty()) {
    std::vector<Coweight> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        Coweight y = x + g;
        if (sup_norm(y) <= 2 * bound && reached.insert(y).second) next.push_back(y);
      }
    }
    frontier.swap(next);
  }
  for (const auto& x : points) {
    if (sup_norm(x) <= bound && reached.count(x) == 0) throw ComputationError("bound too small");
  }
  std::set<Coweight> out;
  for (const auto& g : gens) {
    if (c.group.is_dominant(g)) out.insert(g);
  }
  return out;
}

std::set<Coweight> s_max(const std::set<Coweight>& s, const GroupData& g) {
  std::set<Coweight> out;
  for (const auto& x : s) {
    if (!g.is_dominant(x)) throw ComputationError("S_max needs dominant coweights");
    bool dominated = false;
    for (const auto& y : s) {
      if (!(y == x) && dominance_leq(x, y, g)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.insert(x);
  }
  return out;
}

GradedRep rho_from_cone(const ConeData& c, long bound) {
  const auto top = s_max(indecomposables(c, bound), c.group);
  GradedRep rho{c.group, {}};
  for (const auto& lam : top) rho.character = add(rho.character, irreducible_character(lam, c.group));
  if (!check_positivity(rho)) throw ComputationError("grading not positive");
  return rho;
}

}  // namespace lfl
