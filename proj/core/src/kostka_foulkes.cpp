#include "lfl/kostka_foulkes.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "lfl/errors.hpp"

namespace lfl {
namespace {

Partition trimmed(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i] < p[i + 1] || p[i + 1] < 0) throw ComputationError("not a partition");
  }
  if (!p.empty() && p.back() < 0) throw ComputationError("not a partition");
  return p;
}

void fill_strips(const Partition& shape, const Partition& content, std::size_t letter,
                 Partition& current, Tableau& tab, std::vector<Tableau>& out) {
  if (letter == content.size()) {
    if (current == shape) out.push_back(tab);
    return;
  }
  const long need = content[letter];
  const std::size_t rows = shape.size();
  // Choose how many copies of letter+1 go in each row (horizontal strip).
  std::vector<long> add(rows, 0);
  auto recurse = [&](auto&& self, std::size_t row, long left) -> void {
    if (row == rows) {
      if (left != 0) return;
      Partition next = current;
      for (std::size_t r = 0; r < rows; ++r) {
        next[r] += add[r];
        for (long k = 0; k < add[r]; ++k) tab[r].push_back(static_cast<int>(letter + 1));
      }
      std::swap(current, next);
      fill_strips(shape, content, letter + 1, current, tab, out);
      std::swap(current, next);
      for (std::size_t r = 0; r < rows; ++r) tab[r].resize(tab[r].size() - add[r]);
      return;
    }
    long cap = shape[row] - current[row];
    if (row > 0) cap = std::min(cap, current[row - 1] - current[row]);
    for (long a = std::min(cap, left); a >= 0; --a) {
      add[row] = a;
      self(self, row + 1, left - a);
    }
    add[row] = 0;
  };
  recurse(recurse, 0, need);
}

}  // namespace

std::vector<Tableau> semistandard_tableaux(const Partition& shape_in, const Partition& content_in) {
  Partition shape = trimmed(shape_in);
  Partition content = trimmed(content_in);
  std::vector<Tableau> out;
  if (std::accumulate(shape.begin(), shape.end(), 0L) !=
      std::accumulate(content.begin(), content.end(), 0L)) {
    return out;
  }
  Partition current(shape.size(), 0);
  Tableau tab(shape.size());
  fill_strips(shape, content, 0, current, tab, out);
  return out;
}

std::vector<int> reading_word(const Tableau& t) {
  std::vector<int> w;
  for (auto it = t.rbegin(); it != t.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
  return w;
}

long charge(const std::vector<int>& word) {
  std::vector<int> w = word;
  long total = 0;
  while (!w.empty()) {
    int top = 0;
    for (int x : w) top = std::max(top, x);
    std::vector<bool> used(w.size(), false);
    // Standard subword: 1 from the right, then each next letter scanning left cyclically.
    std::size_t pos = w.size();
    long index = 0;
    for (int letter = 1; letter <= top; ++letter) {
      bool found = false;
      bool wrapped = false;
      std::size_t p = pos;
      for (std::size_t step = 0; step < w.size(); ++step) {
        if (p == 0) {
          p = w.size();
          if (letter > 1) wrapped = true;
        }
        --p;
        if (!used[p] && w[p] == letter) {
          found = true;
          break;
        }
      }
      if (!found) {
        if (letter == 1) throw ComputationError("charge needs partition content");
        break;
      }
      if (wrapped) ++index;
      total += letter == 1 ? 0 : index;
      used[p] = true;
      pos = p;
    }
    std::vector<int> rest;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!used[i]) rest.push_back(w[i]);
    }
    w.swap(rest);
  }
  return total;
}

LaurentPoly kostka_foulkes(const Partition& shape, const Partition& content) {
  static std::mutex mu;
  static std::map<std::pair<Partition, Partition>, LaurentPoly> cache;
  auto key = std::make_pair(trimmed(shape), trimmed(content));
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  LaurentPoly k;
  for (const auto& t : semistandard_tableaux(key.first, key.second)) {
    long c = charge(reading_word(t));
    k.set_coeff(c, k.coeff(c) + Scalar(1));
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, k);
  return k;
}

}  // namespace lfl
