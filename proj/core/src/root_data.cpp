#include "lfl/root_data.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lfl/errors.hpp"

namespace lfl {

long Coweight::sum() const { return std::accumulate(v_.begin(), v_.end(), 0L); }

bool Coweight::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](long x) { return x == 0; });
}

Coweight& Coweight::operator+=(const Coweight& o) {
  if (o.rank() != rank()) throw ComputationError("coweight rank mismatch");
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
  return *this;
}

Coweight& Coweight::operator-=(const Coweight& o) {
  if (o.rank() != rank()) throw ComputationError("coweight rank mismatch");
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
  return *this;
}

Coweight operator*(long k, Coweight a) {
  for (auto& x : a.v_) x *= k;
  return a;
}

std::string Coweight::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v_.size(); ++i) os << (i ? "," : "") << v_[i];
  os << ")";
  return os.str();
}

long pairing(const Coweight& a, const Coweight& b) {
  if (a.rank() != b.rank()) throw ComputationError("pairing rank mismatch");
  long s = 0;
  for (std::size_t i = 0; i < a.rank(); ++i) s += a[i] * b[i];
  return s;
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<int> seen(img_.size(), 0);
  for (int x : img_) {
    if (x < 0 || static_cast<std::size_t>(x) >= img_.size() || seen[x]++) {
      throw ComputationError("not a permutation");
    }
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::simple(std::size_t n, std::size_t i) {
  auto p = identity(n).img_;
  std::swap(p.at(i), p.at(i + 1));
  return Permutation(std::move(p));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (img_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) inv[img_[i]] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (o.size() != size()) throw ComputationError("permutation size mismatch");
  std::vector<int> r(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r[i] = img_[o.img_[i]];
  return Permutation(std::move(r));
}

Coweight Permutation::act(const Coweight& lam) const {
  if (lam.rank() != size()) throw ComputationError("permutation/coweight rank mismatch");
  Coweight r(lam.rank());
  for (std::size_t i = 0; i < size(); ++i) r[img_[i]] = lam[i];
  return r;
}

int Permutation::sign() const {
  int s = 1;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    for (std::size_t j = i + 1; j < img_.size(); ++j) {
      if (img_[i] > img_[j]) s = -s;
    }
  }
  return s;
}

GroupData::GroupData(int n, int r, Coweight chi) : n_(n), r_(r), chi_(std::move(chi)) {
  if (n < 0 || n > 3) throw ConfigError("GL rank must be between 0 and 3");
  if (r < 0) throw ConfigError("torus rank must be nonnegative");
  if (n + r == 0) throw ConfigError("group of rank zero");
  if (chi_.rank() != rank()) throw ConfigError("character has wrong rank");
  if (chi_.is_zero()) throw ConfigError("character chi must be nontrivial");
  // chi must vanish on coroots: constant on the GL block.
  for (int i = 1; i < n; ++i) {
    if (chi_[i] != chi_[0]) throw ConfigError("chi must be a power of det on the GL block");
  }
  two_delta_ = Coweight(rank());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Coweight a(rank());
      a[i] = 1;
      a[j] = -1;
      positive_.push_back(a);
      two_delta_ += a;
      if (j == i + 1) simple_.push_back(a);
    }
  }
}

GroupData GroupData::gl(int n) {
  if (n < 1) throw ConfigError("GL rank must be at least 1");
  return GroupData(n, 0, Coweight(std::vector<long>(static_cast<std::size_t>(n), 1)));
}

GroupData GroupData::torus(int r, Coweight chi) { return GroupData(0, r, std::move(chi)); }

GroupData GroupData::gl_times_torus(int n, int r, Coweight chi) {
  return GroupData(n, r, std::move(chi));
}

std::vector<std::vector<long>> GroupData::cartan_matrix() const {
  std::vector<std::vector<long>> m;
  for (const auto& a : simple_) {
    std::vector<long> row;
    for (const auto& b : simple_) row.push_back(pairing(a, b));
    m.push_back(std::move(row));
  }
  return m;
}

void GroupData::check(const Coweight& lam) const {
  if (lam.rank() != rank()) throw ComputationError("coweight " + lam.str() + " has wrong rank for " + name());
}

bool GroupData::is_dominant(const Coweight& lam) const {
  check(lam);
  for (int i = 0; i + 1 < n_; ++i) {
    if (lam[i] < lam[i + 1]) return false;
  }
  return true;
}

Coweight GroupData::dominant_representative(const Coweight& lam) const {
  check(lam);
  std::vector<long> v = lam.entries();
  std::sort(v.begin(), v.begin() + n_, std::greater<>());
  return Coweight(std::move(v));
}

std::vector<Permutation> GroupData::weyl_group() const {
  std::vector<int> block(static_cast<std::size_t>(n_));
  std::iota(block.begin(), block.end(), 0);
  std::vector<Permutation> out;
  do {
    std::vector<int> img = block;
    for (int i = 0; i < r_; ++i) img.push_back(n_ + i);
    out.emplace_back(std::move(img));
  } while (std::next_permutation(block.begin(), block.end()));
  return out;
}

std::string GroupData::name() const {
  std::ostringstream os;
  if (n_ > 0) os << "GL(" << n_ << ")";
  if (n_ > 0 && r_ > 0) os << "x";
  if (r_ > 0) os << "T" << r_;
  return os.str();
}

ExtAffineWeylElement ExtAffineWeylElement::identity(std::size_t rank) {
  return {Coweight(rank), Permutation::identity(rank)};
}

ExtAffineWeylElement ExtAffineWeylElement::pure_translation(const Coweight& lam) {
  return {lam, Permutation::identity(lam.rank())};
}

ExtAffineWeylElement ExtAffineWeylElement::operator*(const ExtAffineWeylElement& o) const {
  return {translation + finite.act(o.translation), finite * o.finite};
}

ExtAffineWeylElement ExtAffineWeylElement::inverse() const {
  Permutation inv = finite.inverse();
  return {-inv.act(translation), inv};
}

std::string ExtAffineWeylElement::str() const {
  std::ostringstream os;
  os << "t" << translation.str() << "[";
  for (std::size_t i = 0; i < finite.size(); ++i) os << finite(i);
  os << "]";
  return os.str();
}

bool dominance_leq(const Coweight& mu, const Coweight& lam, const GroupData& g) {
  if (!g.is_dominant(mu) || !g.is_dominant(lam)) {
    throw ComputationError("dominance order needs dominant coweights");
  }
  Coweight diff = lam - mu;
  const int n = g.gl_rank();
  for (std::size_t i = static_cast<std::size_t>(n); i < diff.rank(); ++i) {
    if (diff[i] != 0) return false;
  }
  // Coefficients of e_i - e_{i+1} are the partial sums; the full sum must vanish.
  long partial = 0;
  for (int i = 0; i < n; ++i) {
    partial += diff[i];
    if (partial < 0) return false;
  }
  return partial == 0;
}

int sgn_value(const Coweight& lam, const GroupData& g) {
  long p = pairing(g.two_delta(), lam);
  return (p % 2 == 0) ? 1 : -1;
}

long chi_degree(const Coweight& lam, const GroupData& g) { return pairing(g.chi(), lam); }

long im_length(const ExtAffineWeylElement& w, const GroupData& g) {
  if (w.translation.rank() != g.rank() || w.finite.size() != g.rank()) {
    throw ComputationError("affine Weyl element has wrong rank");
  }
  Permutation inv = w.finite.inverse();
  long len = 0;
  const int n = g.gl_rank();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      long p = w.translation[i] - w.translation[j];
      bool stays_positive = inv(i) < inv(j);
      len += stays_positive ? std::labs(p) : std::labs(p - 1);
    }
  }
  return len;
}

std::set<Coweight> weyl_orbit(const Coweight& lam, const GroupData& g) {
  std::set<Coweight> out;
  for (const auto& w : g.weyl_group()) out.insert(w.act(lam));
  return out;
}

}  // namespace lfl
