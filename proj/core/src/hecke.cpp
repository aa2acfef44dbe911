#include "lfl/hecke.hpp"

#include <algorithm>
#include <set>

#include "lfl/errors.hpp"

namespace lfl {
namespace {

const GroupData& gl2() {
  static const GroupData g = GroupData::gl(2);
  return g;
}

const Permutation& swap2() {
  static const Permutation s(std::vector<int>{1, 0});
  return s;
}

void check_gl2(const ExtAffineWeylElement& w) {
  if (w.translation.rank() != 2 || w.finite.size() != 2) {
    throw ComputationError("Iwahori level is implemented for GL(2) only");
  }
}

void add_term(HeckeElement& h, const ExtAffineWeylElement& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = h.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) h.erase(it);
  }
}

Matrix scale_matrix(const Matrix& a, const Scalar& c) {
  Matrix r = a;
  for (auto& row : r) {
    for (auto& x : row) x *= c;
  }
  return r;
}

Matrix add_matrix(const Matrix& a, const Matrix& b) {
  Matrix r = a;
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] += b[i][j];
  }
  return r;
}

bool same_matrix(const Matrix& a, const Matrix& b) {
  return is_zero_matrix(add_matrix(a, scale_matrix(b, Scalar(-1))));
}

Matrix matrix_power(const Matrix& m, const Matrix& m_inv, long k, std::size_t dim) {
  Matrix r = identity_matrix(dim);
  const Matrix& base = k >= 0 ? m : m_inv;
  for (long i = 0; i < std::labs(k); ++i) r = matmul(r, base);
  return r;
}

HeckeElement monomial_support(long d, bool (*inside)(const ExtAffineWeylElement&), const QField& field) {
  HeckeElement h;
  if (d < 0) return h;
  const Scalar value = (d % 2 == 0 ? Scalar(1) : Scalar(-1)) * field.q_half_power(-d);
  for (long a = -1; a <= d + 1; ++a) {
    const long b = d - a;
    for (const auto& w : {affine_gl2::translation(a, b), affine_gl2::translation_times_s(a, b)}) {
      if (inside(w)) add_term(h, w, value);
    }
  }
  return h;
}

}  // namespace

namespace affine_gl2 {

ExtAffineWeylElement identity() { return ExtAffineWeylElement::identity(2); }
ExtAffineWeylElement s1() { return {Coweight{0, 0}, swap2()}; }
ExtAffineWeylElement s0() { return {Coweight{1, -1}, swap2()}; }
ExtAffineWeylElement omega() { return {Coweight{1, 0}, swap2()}; }

ExtAffineWeylElement omega_power(long k) {
  ExtAffineWeylElement r = identity();
  const ExtAffineWeylElement step = k >= 0 ? omega() : omega().inverse();
  for (long i = 0; i < std::labs(k); ++i) r = r * step;
  return r;
}

ExtAffineWeylElement translation(long a, long b) {
  return ExtAffineWeylElement::pure_translation(Coweight{a, b});
}

ExtAffineWeylElement translation_times_s(long a, long b) { return {Coweight{a, b}, swap2()}; }

long length(const ExtAffineWeylElement& w) {
  check_gl2(w);
  return im_length(w, gl2());
}

}  // namespace affine_gl2

ReducedWord reduced_word(const ExtAffineWeylElement& w) {
  check_gl2(w);
  ReducedWord word;
  word.rotation = w.translation.sum();
  ExtAffineWeylElement rest = affine_gl2::omega_power(-word.rotation) * w;
  const ExtAffineWeylElement gens[2] = {affine_gl2::s0(), affine_gl2::s1()};
  long len = affine_gl2::length(rest);
  while (len > 0) {
    bool found = false;
    for (int i = 0; i < 2 && !found; ++i) {
      ExtAffineWeylElement shorter = rest * gens[i];
      if (affine_gl2::length(shorter) < len) {
        word.letters.push_back(i);
        rest = shorter;
        --len;
        found = true;
      }
    }
    if (!found) throw ComputationError("no right descent for a positive-length element");
  }
  if (!(rest == affine_gl2::identity())) throw ComputationError("word reduction did not terminate at 1");
  std::reverse(word.letters.begin(), word.letters.end());
  return word;
}

ExtAffineWeylElement evaluate_word(const ReducedWord& word) {
  ExtAffineWeylElement r = affine_gl2::omega_power(word.rotation);
  for (int i : word.letters) r = r * (i == 0 ? affine_gl2::s0() : affine_gl2::s1());
  return r;
}

HeckeElement hecke_basis(const ExtAffineWeylElement& w) {
  check_gl2(w);
  return {{w, Scalar(1)}};
}

HeckeElement add(const HeckeElement& a, const HeckeElement& b) {
  HeckeElement r = a;
  for (const auto& [w, c] : b) add_term(r, w, c);
  return r;
}

HeckeElement scale(const HeckeElement& a, const Scalar& c) {
  HeckeElement r;
  for (const auto& [w, v] : a) add_term(r, w, v * c);
  return r;
}

HeckeElement hecke_multiply(const HeckeElement& a, const HeckeElement& b, const QField& field) {
  const Scalar q = field.q();
  const ExtAffineWeylElement gens[2] = {affine_gl2::s0(), affine_gl2::s1()};
  HeckeElement result;
  for (const auto& [v, cv] : b) {
    const ReducedWord word = reduced_word(v);
    const ExtAffineWeylElement rot = affine_gl2::omega_power(word.rotation);
    HeckeElement cur;
    for (const auto& [u, cu] : a) add_term(cur, u * rot, cu);
    for (int i : word.letters) {
      HeckeElement next;
      for (const auto& [w, c] : cur) {
        ExtAffineWeylElement ws = w * gens[i];
        if (affine_gl2::length(ws) > affine_gl2::length(w)) {
          add_term(next, ws, c);
        } else {
          add_term(next, w, c * (q - Scalar(1)));
          add_term(next, ws, c * q);
        }
      }
      cur.swap(next);
    }
    for (const auto& [w, c] : cur) add_term(result, w, c * cv);
  }
  return result;
}

Matrix HeckeModule::action(const ExtAffineWeylElement& w) const {
  const ReducedWord word = reduced_word(w);
  Matrix r = matrix_power(t_omega, t_omega_inverse, word.rotation, dimension);
  for (int i : word.letters) r = matmul(r, i == 0 ? t_s0 : t_s1);
  return r;
}

Matrix HeckeModule::action(const HeckeElement& h) const {
  Matrix r = scale_matrix(identity_matrix(dimension), Scalar(0));
  for (const auto& [w, c] : h) r = add_matrix(r, scale_matrix(action(w), c));
  return r;
}

bool HeckeModule::satisfies_relations(const QField& field) const {
  const Scalar q = field.q();
  const Matrix id = identity_matrix(dimension);
  for (const Matrix* t : {&t_s0, &t_s1}) {
    Matrix lhs = matmul(*t, *t);
    Matrix rhs = add_matrix(scale_matrix(*t, q - Scalar(1)), scale_matrix(id, q));
    if (!same_matrix(lhs, rhs)) return false;
  }
  if (!same_matrix(matmul(t_omega, t_omega_inverse), id)) return false;
  if (!same_matrix(matmul(t_omega_inverse, t_omega), id)) return false;
  if (!same_matrix(matmul(matmul(t_omega, t_s1), t_omega_inverse), t_s0)) return false;
  if (!same_matrix(matmul(matmul(t_omega, t_s0), t_omega_inverse), t_s1)) return false;
  return true;
}

HeckeModule principal_series_module(const SatakeParameter& alpha, const QField& field) {
  validate_parameter(alpha, gl2());
  const Scalar q = field.q();
  const Scalar& a = alpha[0];
  const Scalar& b = alpha[1];
  const Scalar x = field.sqrt_q() * (a + b) / (Scalar(1) + q);
  const Scalar det = a * b;
  HeckeModule m;
  m.dimension = 2;
  m.parameter = alpha;
  m.t_s1 = {{q, Scalar(0)}, {Scalar(0), Scalar(-1)}};
  m.t_omega = {{x, Scalar(1)}, {det - x * x, -x}};
  m.t_omega_inverse = scale_matrix(m.t_omega, det.inverse());
  m.t_s0 = matmul(matmul(m.t_omega, m.t_s1), m.t_omega_inverse);
  if (!m.satisfies_relations(field)) throw ComputationError("principal series relations failed");
  return m;
}

HeckeModule steinberg_module(const Scalar& central, const QField& field) {
  if (central.is_zero()) throw ComputationError("Steinberg central parameter must be nonzero");
  HeckeModule m;
  m.dimension = 1;
  m.t_s0 = {{Scalar(-1)}};
  m.t_s1 = {{Scalar(-1)}};
  m.t_omega = {{central}};
  m.t_omega_inverse = {{central.inverse()}};
  if (!m.satisfies_relations(field)) throw ComputationError("Steinberg relations failed");
  return m;
}

Scalar pairing_value(const IwahoriMatrixCoefficient& c, const HeckeElement& h) {
  if (c.m.size() != c.module.dimension || c.m_dual.size() != c.module.dimension) {
    throw ComputationError("matrix coefficient vectors have wrong dimension");
  }
  Vector v = matvec(c.module.action(h), c.m);
  Scalar r(0);
  for (std::size_t i = 0; i < v.size(); ++i) r += v[i] * c.m_dual[i];
  return r;
}

Scalar matrix_coefficient_value(const IwahoriMatrixCoefficient& c, const ExtAffineWeylElement& w,
                                const QField& field) {
  return field.q_power(-affine_gl2::length(w)) * pairing_value(c, hecke_basis(w));
}

bool coset_in_mat_O(const ExtAffineWeylElement& w) {
  check_gl2(w);
  return w.translation[0] >= 0 && w.translation[1] >= 0;
}

bool coset_in_iwahori_order(const ExtAffineWeylElement& w) {
  check_gl2(w);
  // diag(p^l) P_s = [[0, p^l1], [p^l2, 0]]; the upper-right entry must lie in pO.
  if (w.finite.is_identity()) return w.translation[0] >= 0 && w.translation[1] >= 0;
  return w.translation[0] >= 1 && w.translation[1] >= 0;
}

HeckeElement iwahori_basic_function_stdGL2(long d, const QField& field) {
  return monomial_support(d, &coset_in_mat_O, field);
}

HeckeElement iwahori_order_basic_function_stdGL2(long d, const QField& field) {
  return monomial_support(d, &coset_in_iwahori_order, field);
}

std::vector<ExtAffineWeylElement> double_coset_elements(const Coweight& lam) {
  if (lam.rank() != 2 || !gl2().is_dominant(lam)) {
    throw ComputationError("double coset needs a dominant GL(2) coweight");
  }
  const ExtAffineWeylElement s = affine_gl2::s1();
  const ExtAffineWeylElement e = affine_gl2::identity();
  const ExtAffineWeylElement t = ExtAffineWeylElement::pure_translation(lam);
  std::set<ExtAffineWeylElement> out;
  for (const auto& x : {e, s}) {
    for (const auto& y : {e, s}) out.insert(x * t * y);
  }
  return {out.begin(), out.end()};
}

HeckeElement spherical_to_hecke(const SphericalElement& f) {
  HeckeElement h;
  for (const auto& [lam, c] : f) {
    for (const auto& w : double_coset_elements(lam)) add_term(h, w, c);
  }
  return h;
}

SphericalElement hecke_to_spherical(const HeckeElement& h, const QField& field) {
  std::set<Coweight> dominant;
  for (const auto& [w, c] : h) dominant.insert(gl2().dominant_representative(w.translation));
  SphericalElement f;
  for (const auto& lam : dominant) {
    Scalar mass(0);
    Scalar volume(0);
    for (const auto& w : double_coset_elements(lam)) {
      const Scalar vol = field.q_power(affine_gl2::length(w));
      volume += vol;
      auto it = h.find(w);
      if (it != h.end()) mass += it->second * vol;
    }
    if (!mass.is_zero()) f.emplace(lam, mass / volume);
  }
  return f;
}

}  // namespace lfl
