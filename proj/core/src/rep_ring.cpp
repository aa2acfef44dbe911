#include "lfl/rep_ring.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <tuple>

#include "lfl/errors.hpp"

namespace lfl {
namespace {

void add_to(Character& c, const Coweight& mu, long m) {
  if (m == 0) return;
  auto [it, inserted] = c.emplace(mu, m);
  if (!inserted) {
    it->second += m;
    if (it->second == 0) c.erase(it);
  }
}

// Dominant weights of the GL block lying below lam (same sum, entries in [lam_n, lam_1]).
void enumerate_dominant_below(const Coweight& lam, const GroupData& g, std::size_t pos,
                              long upper, long remaining, Coweight& cur,
                              std::vector<Coweight>& out) {
  const auto n = static_cast<std::size_t>(g.gl_rank());
  const long low = lam[n - 1];
  if (pos == n - 1) {
    if (remaining >= low && remaining <= upper) {
      cur[pos] = remaining;
      if (dominance_leq(cur, lam, g)) out.push_back(cur);
    }
    return;
  }
  for (long x = upper; x >= low; --x) {
    cur[pos] = x;
    enumerate_dominant_below(lam, g, pos + 1, x, remaining - x, cur, out);
  }
}

struct CharCache {
  std::mutex mu;
  std::map<std::tuple<int, int, Coweight>, Character> table;
};

CharCache& char_cache() {
  static CharCache cache;
  return cache;
}

Character freudenthal(const Coweight& lam, const GroupData& g) {
  const int n = g.gl_rank();
  if (n == 0) return Character{{lam, 1}};
  std::vector<Coweight> dominant;
  Coweight cur = lam;
  long gl_sum = 0;
  for (int i = 0; i < n; ++i) gl_sum += lam[i];
  enumerate_dominant_below(lam, g, 0, lam[0], gl_sum, cur, dominant);
  // Height above lam: sum of the coroot coefficients of lam - mu.
  auto height = [&](const Coweight& mu) {
    long h = 0, partial = 0;
    for (int i = 0; i + 1 < n; ++i) {
      partial += lam[i] - mu[i];
      h += partial;
    }
    return h;
  };
  std::sort(dominant.begin(), dominant.end(),
            [&](const Coweight& a, const Coweight& b) { return height(a) < height(b); });
  std::map<Coweight, long> mult;
  const Coweight& rho2 = g.two_delta();
  auto lookup = [&](const Coweight& nu) -> std::optional<long> {
    auto it = mult.find(g.dominant_representative(nu));
    if (it == mult.end()) return std::nullopt;
    return it->second;
  };
  for (const auto& mu : dominant) {
    if (mu == lam) {
      mult[mu] = 1;
      continue;
    }
    long numer = 0;
    for (const auto& alpha : g.positive_roots()) {
      for (long k = 1;; ++k) {
        Coweight nu = mu + k * alpha;
        Coweight dom = g.dominant_representative(nu);
        if (!dominance_leq(dom, lam, g)) break;
        auto m = lookup(nu);
        if (!m) throw ComputationError("Freudenthal recursion out of order");
        numer += 2 * (*m) * pairing(nu, alpha);
      }
    }
    long denom = pairing(lam - mu, lam + mu + rho2);
    if (denom <= 0 || numer % denom != 0) throw ComputationError("Freudenthal recursion failed");
    mult[mu] = numer / denom;
  }
  Character ch;
  for (const auto& [mu, m] : mult) {
    if (m == 0) continue;
    for (const auto& w : weyl_orbit(mu, g)) ch[w] = m;
  }
  return ch;
}

}  // namespace

long dimension(const Character& c) {
  long d = 0;
  for (const auto& [mu, m] : c) d += m;
  return d;
}

bool is_genuine(const Character& c) {
  return std::all_of(c.begin(), c.end(), [](const auto& kv) { return kv.second >= 0; });
}

Character trivial_character(const GroupData& g) { return Character{{Coweight(g.rank()), 1}}; }

Character add(const Character& a, const Character& b) {
  Character r = a;
  for (const auto& [mu, m] : b) add_to(r, mu, m);
  return r;
}

Character scale(const Character& a, long k) {
  Character r;
  for (const auto& [mu, m] : a) add_to(r, mu, m * k);
  return r;
}

Character character_product(const Character& a, const Character& b) {
  Character r;
  for (const auto& [mu, m] : a) {
    for (const auto& [nu, n] : b) add_to(r, mu + nu, m * n);
  }
  return r;
}

Character adams(const Character& v, long k) {
  Character r;
  for (const auto& [mu, m] : v) add_to(r, k * mu, m);
  return r;
}

Character irreducible_character(const Coweight& lam, const GroupData& g) {
  if (!g.is_dominant(lam)) throw ComputationError("highest weight " + lam.str() + " is not dominant");
  auto key = std::make_tuple(g.gl_rank(), g.torus_rank(), lam);
  auto& cache = char_cache();
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.table.find(key);
    if (it != cache.table.end()) return it->second;
  }
  Character ch = freudenthal(lam, g);
  std::lock_guard<std::mutex> lock(cache.mu);
  cache.table.emplace(key, ch);
  return ch;
}

long weyl_dimension(const Coweight& lam, const GroupData& g) {
  if (!g.is_dominant(lam)) throw ComputationError("highest weight " + lam.str() + " is not dominant");
  const int n = g.gl_rank();
  // prod_{i<j} (lam_i - lam_j + j - i) / (j - i), accumulated as a fraction.
  mpz_class num = 1, den = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      num *= lam[i] - lam[j] + j - i;
      den *= j - i;
    }
  }
  mpz_class q = num / den;
  return q.get_si();
}

Character character_of_highest_weights(const std::vector<Coweight>& lams, const GroupData& g) {
  Character c;
  for (const auto& l : lams) c = add(c, irreducible_character(l, g));
  return c;
}

std::map<Coweight, long> decompose_character(const Character& c, const GroupData& g) {
  std::map<Coweight, long> parts;
  Character rest = c;
  while (!rest.empty()) {
    // Lexicographically largest dominant weight is dominance-maximal in its class.
    const Coweight* top = nullptr;
    for (auto it = rest.rbegin(); it != rest.rend(); ++it) {
      if (g.is_dominant(it->first)) {
        top = &it->first;
        break;
      }
    }
    if (!top) throw ComputationError("character is not Weyl-invariant");
    Coweight lam = *top;
    long m = rest.at(lam);
    parts[lam] += m;
    rest = add(rest, scale(irreducible_character(lam, g), -m));
  }
  return parts;
}

std::map<Coweight, long> tensor_decompose(const Character& a, const Character& b, const GroupData& g) {
  if (!is_genuine(a) || !is_genuine(b)) throw ComputationError("tensor_decompose needs genuine characters");
  return decompose_character(character_product(a, b), g);
}

std::vector<Character> sym_powers(const Character& v, long n, const GroupData& g) {
  if (!is_genuine(v)) throw ComputationError("symmetric powers need a genuine character");
  std::vector<Character> out{trivial_character(g)};
  std::vector<Character> psi{Character{}};
  for (long k = 1; k <= n; ++k) psi.push_back(adams(v, k));
  for (long m = 1; m <= n; ++m) {
    Character acc;
    for (long k = 1; k <= m; ++k) acc = add(acc, character_product(psi[k], out[m - k]));
    Character sym;
    for (const auto& [mu, c] : acc) {
      if (c % m != 0) throw ComputationError("Newton recursion produced a non-integral multiplicity");
      add_to(sym, mu, c / m);
    }
    out.push_back(std::move(sym));
  }
  return out;
}

Character sym_power(const Character& v, long n, const GroupData& g) {
  if (n < 0) throw ComputationError("negative symmetric power");
  return sym_powers(v, n, g).back();
}

Character graded_piece(const GradedRep& v, long d) {
  Character r;
  for (const auto& [mu, m] : v.character) {
    if (v.degree(mu) == d) r.emplace(mu, m);
  }
  return r;
}

Character sym_graded_piece(const GradedRep& v, long d) {
  if (!check_positivity(v)) throw ComputationError("grading not positive");
  if (d < 0) return {};
  Character total;
  auto powers = sym_powers(v.character, d, v.group);
  for (long k = 0; k <= d; ++k) total = add(total, graded_piece({v.group, powers[k]}, d));
  return total;
}

bool check_positivity(const GradedRep& v) {
  if (v.character.empty()) return false;
  return std::all_of(v.character.begin(), v.character.end(),
                     [&](const auto& kv) { return kv.second == 0 || v.degree(kv.first) > 0; });
}

}  // namespace lfl
