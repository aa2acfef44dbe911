#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

namespace lfl {

/// Integer vector in the coweight lattice. Weights of the dual group use the
/// same representation.
class Coweight {
 public:
  Coweight() = default;
  explicit Coweight(std::size_t rank) : v_(rank, 0) {}
  Coweight(std::initializer_list<long> xs) : v_(xs) {}
  explicit Coweight(std::vector<long> xs) : v_(std::move(xs)) {}

  std::size_t rank() const { return v_.size(); }
  long operator[](std::size_t i) const { return v_.at(i); }
  long& operator[](std::size_t i) { return v_.at(i); }
  const std::vector<long>& entries() const { return v_; }
  long sum() const;
  bool is_zero() const;

  Coweight& operator+=(const Coweight& o);
  Coweight& operator-=(const Coweight& o);
  friend Coweight operator+(Coweight a, const Coweight& b) { return a += b; }
  friend Coweight operator-(Coweight a, const Coweight& b) { return a -= b; }
  friend Coweight operator*(long k, Coweight a);
  Coweight operator-() const { return (-1) * *this; }
  friend auto operator<=>(const Coweight&, const Coweight&) = default;

  /// "(1,0,-2)".
  std::string str() const;

 private:
  std::vector<long> v_;
};

long pairing(const Coweight& a, const Coweight& b);

/// Permutation of {0..n-1}; image(i) = sigma(i).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(std::size_t n);
  /// Transposition (i i+1) on n points.
  static Permutation simple(std::size_t n, std::size_t i);

  std::size_t size() const { return img_.size(); }
  int operator()(std::size_t i) const { return img_.at(i); }
  const std::vector<int>& images() const { return img_; }
  bool is_identity() const;
  Permutation inverse() const;
  /// (this * o)(i) = this(o(i)).
  Permutation operator*(const Permutation& o) const;
  /// (sigma . lambda)_{sigma(i)} = lambda_i.
  Coweight act(const Coweight& lam) const;
  int sign() const;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> img_;
};

/// Split root datum of GL(n) x (split torus of rank r). The GL factor occupies
/// lattice coordinates 0..n-1, the torus the remaining r. Roots and coroots are
/// e_i - e_j inside the GL block.
class GroupData {
 public:
  static GroupData gl(int n);
  static GroupData torus(int r, Coweight chi);
  static GroupData gl_times_torus(int n, int r, Coweight chi);

  int gl_rank() const { return n_; }
  int torus_rank() const { return r_; }
  std::size_t rank() const { return static_cast<std::size_t>(n_ + r_); }
  const Coweight& chi() const { return chi_; }
  bool is_torus() const { return n_ == 0; }

  const std::vector<Coweight>& simple_coroots() const { return simple_; }
  const std::vector<Coweight>& positive_roots() const { return positive_; }
  const Coweight& two_delta() const { return two_delta_; }
  /// Cartan matrix <alpha_i, alpha_j^vee>.
  std::vector<std::vector<long>> cartan_matrix() const;

  bool is_dominant(const Coweight& lam) const;
  Coweight dominant_representative(const Coweight& lam) const;
  /// Finite Weyl group: permutations of the GL block.
  std::vector<Permutation> weyl_group() const;
  std::string name() const;

  friend bool operator==(const GroupData& a, const GroupData& b) {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.chi_ == b.chi_;
  }

 private:
  GroupData(int n, int r, Coweight chi);
  void check(const Coweight& lam) const;

  int n_ = 0;
  int r_ = 0;
  Coweight chi_;
  std::vector<Coweight> simple_;
  std::vector<Coweight> positive_;
  Coweight two_delta_;
};

/// t_lambda * sigma in the extended affine Weyl group Lambda x| W.
struct ExtAffineWeylElement {
  Coweight translation;
  Permutation finite;

  static ExtAffineWeylElement identity(std::size_t rank);
  static ExtAffineWeylElement pure_translation(const Coweight& lam);
  /// (t_l s)(t_m r) = t_{l + s(m)} s r.
  ExtAffineWeylElement operator*(const ExtAffineWeylElement& o) const;
  ExtAffineWeylElement inverse() const;
  friend auto operator<=>(const ExtAffineWeylElement&, const ExtAffineWeylElement&) = default;
  std::string str() const;
};

/// True iff lambda - mu is a nonnegative integer combination of simple coroots.
bool dominance_leq(const Coweight& mu, const Coweight& lam, const GroupData& g);
/// (-1)^{<2 delta, lambda>}.
int sgn_value(const Coweight& lam, const GroupData& g);
/// <chi, lambda>.
long chi_degree(const Coweight& lam, const GroupData& g);
/// Iwahori-Matsumoto length of t_lambda sigma.
long im_length(const ExtAffineWeylElement& w, const GroupData& g);
std::set<Coweight> weyl_orbit(const Coweight& lam, const GroupData& g);

}  // namespace lfl

template <>
struct std::hash<lfl::Coweight> {
  std::size_t operator()(const lfl::Coweight& c) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (long x : c.entries()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    return h;
  }
};
