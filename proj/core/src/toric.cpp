#include "lfl/toric.hpp"

#include <map>
#include <numeric>
#include <functional>
#include <set>

#include "lfl/errors.hpp"
#include "lfl/linear_algebra.hpp"

namespace lfl {
namespace {

using IntMatrix = std::vector<std::vector<long>>;

void check_positive(const std::vector<Coweight>& weights, const Coweight& chi) {
  for (const auto& w : weights) {
    if (pairing(w, chi) <= 0) throw ComputationError("grading not positive");
  }
}

long count_from(const std::vector<Coweight>& weights, std::size_t i, const Coweight& rest, const Coweight& chi,
                std::map<std::pair<std::size_t, Coweight>, long>& memo) {
  if (i == weights.size()) return rest.is_zero() ? 1 : 0;
  const long budget = pairing(rest, chi);
  if (budget < 0) return 0;
  auto key = std::make_pair(i, rest);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const long step = pairing(weights[i], chi);
  long total = 0;
  Coweight r = rest;
  for (long v = 0; v * step <= budget; ++v) {
    total += count_from(weights, i + 1, r, chi, memo);
    r -= weights[i];
  }
  memo.emplace(key, total);
  return total;
}

// Integer vectors u with u . lambda_i = 0 for all i.
IntMatrix annihilator(const ToricData& d) {
  Matrix a;
  for (const auto& w : d.weights) {
    Vector row;
    for (long x : w.entries()) row.emplace_back(x);
    a.push_back(row);
  }
  IntMatrix out;
  for (const auto& v : kernel_basis(a, d.rank)) {
    mpz_class den = 1;
    for (const auto& x : v) den = lcm(den, x.rational_part().get_den());
    std::vector<long> row;
    for (const auto& x : v) {
      Rational y = x.rational_part() * den;
      row.push_back(mpz_class(y.get_num()).get_si());
    }
    out.push_back(row);
  }
  return out;
}

}  // namespace

GradedRep ToricData::representation() const {
  Character c;
  for (const auto& w : weights) c[w] += 1;
  return {group(), c};
}

void validate(const ToricData& d) {
  if (d.rank == 0) throw ConfigError("torus rank must be positive");
  if (d.chi.rank() != d.rank) throw ConfigError("chi has wrong rank");
  if (d.weights.empty()) throw ConfigError("weight list is empty");
  for (const auto& w : d.weights) {
    if (w.rank() != d.rank) throw ConfigError("weight has wrong rank");
  }
}

std::vector<long> smith_invariants(const IntMatrix& matrix) {
  IntMatrix a = matrix;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<long> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Pivot: smallest nonzero |entry| in the trailing block.
    bool again = true;
    while (again) {
      long best = 0;
      std::size_t pi = t, pj = t;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (a[i][j] != 0 && (best == 0 || std::labs(a[i][j]) < best)) {
            best = std::labs(a[i][j]);
            pi = i;
            pj = j;
          }
        }
      }
      if (best == 0) return diag;
      std::swap(a[t], a[pi]);
      for (auto& row : a) std::swap(row[t], row[pj]);
      again = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const long f = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= f * a[t][j];
        if (a[i][t] != 0) again = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const long f = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= f * a[i][t];
        if (a[t][j] != 0) again = true;
      }
      if (!again) {
        // The pivot must divide the rest of the block.
        for (std::size_t i = t + 1; i < rows && !again; ++i) {
          for (std::size_t j = t + 1; j < cols; ++j) {
            if (a[i][j] % a[t][t] != 0) {
              for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
              again = true;
              break;
            }
          }
        }
      }
    }
    diag.push_back(std::labs(a[t][t]));
  }
  return diag;
}

bool is_nondegenerate(const ToricData& d) {
  validate(d);
  IntMatrix m(d.rank, std::vector<long>(d.weights.size()));
  for (std::size_t j = 0; j < d.weights.size(); ++j) {
    for (std::size_t i = 0; i < d.rank; ++i) m[i][j] = d.weights[j][i];
  }
  const auto inv = smith_invariants(m);
  if (inv.size() != d.rank) return false;
  for (long x : inv) {
    if (x != 1) return false;
  }
  return true;
}

long vector_partition_count(const std::vector<Coweight>& weights, const Coweight& mu, const Coweight& chi) {
  check_positive(weights, chi);
  std::map<std::pair<std::size_t, Coweight>, long> memo;
  return count_from(weights, 0, mu, chi, memo);
}

long pushforward_basic(const ToricData& d, const Coweight& mu) {
  if (!is_nondegenerate(d)) throw ComputationError("degenerate toric data: use the fibred description");
  if (mu.rank() != d.rank) throw ComputationError("coweight has wrong rank");
  return vector_partition_count(d.weights, mu, d.chi);
}

std::vector<SphericalElement> pushforward_family(const ToricData& d, long max_degree) {
  if (!is_nondegenerate(d)) throw ComputationError("degenerate toric data: use the fibred description");
  return vector_partition_family(d, max_degree);
}

std::vector<SphericalElement> vector_partition_family(const ToricData& d, long max_degree) {
  validate(d);
  check_positive(d.weights, d.chi);
  std::vector<SphericalElement> out(static_cast<std::size_t>(std::max(0L, max_degree + 1)));
  // Sum over v in Z_{>=0}^n of degree <= max_degree.
  std::map<Coweight, long> counts{{Coweight(d.rank), 1}};
  for (const auto& w : d.weights) {
    std::map<Coweight, long> next;
    const long step = pairing(w, d.chi);
    for (const auto& [mu, c] : counts) {
      Coweight cur = mu;
      for (long deg = pairing(mu, d.chi); deg <= max_degree; deg += step) {
        next[cur] += c;
        cur += w;
      }
    }
    counts.swap(next);
  }
  for (const auto& [mu, c] : counts) out[pairing(mu, d.chi)].emplace(mu, Scalar(c));
  return out;
}

bool support_projection_compact(const ToricData& d, long sample_bound) {
  if (is_nondegenerate(d)) throw ComputationError("support projection applies to degenerate data only");
  const IntMatrix proj = annihilator(d);
  auto images_up_to = [&](long bound) {
    std::set<std::vector<long>> images;
    std::vector<long> v(d.weights.size(), 0);
    // All v with sum(v) <= bound.
    std::function<void(std::size_t, long, Coweight)> rec = [&](std::size_t i, long left, Coweight mu) {
      if (i == d.weights.size()) {
        std::vector<long> img;
        for (const auto& u : proj) img.push_back(std::inner_product(u.begin(), u.end(), mu.entries().begin(), 0L));
        images.insert(img);
        return;
      }
      for (long k = 0; k <= left; ++k) {
        rec(i + 1, left - k, mu);
        mu += d.weights[i];
      }
    };
    rec(0, bound, Coweight(d.rank));
    return images;
  };
  return images_up_to(sample_bound / 2) == images_up_to(sample_bound);
}

}  // namespace lfl
