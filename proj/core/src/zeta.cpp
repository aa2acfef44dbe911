#include "lfl/zeta.hpp"

#include <random>
#include <sstream>

#include "lfl/errors.hpp"

namespace lfl {

ZetaSeries spherical_zeta(const std::vector<SphericalElement>& phi, const SatakeParameter& alpha,
                          std::size_t order, const LocalSetting& s, std::string provenance) {
  validate_parameter(alpha, s.group);
  PowerSeries series(order);
  for (std::size_t d = 0; d <= order && d < phi.size(); ++d) series[d] = satake_eigenvalue(phi[d], alpha, s);
  return {series, std::move(provenance)};
}

ZetaSeries spherical_zeta(const SphericalElement& phi, const SatakeParameter& alpha, std::size_t order,
                          const LocalSetting& s, std::string provenance) {
  std::vector<SphericalElement> graded(order + 1);
  for (const auto& [lam, v] : phi) {
    const long d = chi_degree(lam, s.group);
    if (d < 0) throw ComputationError("pole at origin");
    if (static_cast<std::size_t>(d) <= order) graded[d].emplace(lam, v);
  }
  return spherical_zeta(graded, alpha, order, s, std::move(provenance));
}

ZetaSeries iwahori_zeta(const std::vector<HeckeElement>& phi, const IwahoriMatrixCoefficient& c,
                        std::size_t order, const QField& field, std::string provenance) {
  PowerSeries series(order);
  for (std::size_t d = 0; d <= order && d < phi.size(); ++d) {
    Scalar total(0);
    for (const auto& [w, v] : phi[d]) {
      total += v * field.q_power(affine_gl2::length(w)) * matrix_coefficient_value(c, w, field);
    }
    series[d] = total;
  }
  return {series, std::move(provenance)};
}

RationalFunction zeta_ideal(const std::vector<ZetaSeries>& tests, const RecognitionBounds& bounds) {
  std::vector<RationalFunction> recognised;
  for (const auto& z : tests) {
    if (z.series.is_zero()) continue;
    recognised.push_back(recognize_rational(z.series, bounds.numerator_degree, bounds.denominator_degree));
  }
  return ideal_generator(recognised);
}

std::string zeta_table_text(const ZetaSeries& z) {
  std::ostringstream os;
  os << "zeta series (" << z.provenance << ")\n";
  for (std::size_t d = 0; d <= z.series.order(); ++d) os << "  t^" << d << ": " << z.series[d].str() << "\n";
  return os.str();
}

std::string zeta_table_tsv(const ZetaSeries& z) {
  std::ostringstream os;
  os << "degree\tcoefficient\n";
  for (std::size_t d = 0; d <= z.series.order(); ++d) os << d << "\t" << z.series[d].str() << "\n";
  return os.str();
}

namespace {

Scalar small_random_rational(std::mt19937_64& rng, int span, int max_den) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, max_den);
  int n = 0;
  while (n == 0) n = num(rng);
  return Scalar(Rational(n, den(rng)));
}

}  // namespace

std::vector<SphericalElement> convolve_family(const std::vector<SphericalElement>& f, const SphericalElement& h,
                                              const LocalSetting& s) {
  std::vector<SphericalElement> out;
  for (const auto& fd : f) out.push_back(spherical_convolve(fd, h, s));
  return out;
}

SphericalElement random_degree_zero(const GroupData& g, std::mt19937_64& rng) {
  std::vector<Coweight> support;
  if (g.gl_rank() == 2) {
    support = {Coweight{0, 0}, Coweight{1, -1}, Coweight{2, -2}};
  } else {
    support = {Coweight{0, 0, 0}, Coweight{1, 0, -1}, Coweight{1, 1, -2}, Coweight{2, -1, -1}};
  }
  std::uniform_int_distribution<int> coin(0, 2);
  SphericalElement h;
  for (const auto& lam : support) {
    if (lam.is_zero() || coin(rng) != 0) h[lam] = small_random_rational(rng, 5, 3);
  }
  return h;
}

std::vector<HeckeElement> regroup_by_degree(const std::vector<HeckeElement>& family, std::size_t order) {
  std::vector<HeckeElement> out(order + 1);
  for (const auto& h : family) {
    for (const auto& [w, c] : h) {
      const long d = w.translation.sum();
      if (d < 0) throw ComputationError("pole at origin");
      if (static_cast<std::size_t>(d) <= order) out[d] = add(out[d], HeckeElement{{w, c}});
    }
  }
  return out;
}

std::vector<HeckeElement> iwahori_family(std::size_t order, const QField& f, bool iwahori_order) {
  std::vector<HeckeElement> out;
  for (std::size_t d = 0; d <= order; ++d) {
    out.push_back(iwahori_order ? iwahori_order_basic_function_stdGL2(static_cast<long>(d), f)
                                : iwahori_basic_function_stdGL2(static_cast<long>(d), f));
  }
  return out;
}

std::vector<std::vector<HeckeElement>> iwahori_battery(const std::vector<HeckeElement>& phi, std::size_t order,
                                                       const QField& f) {
  using namespace affine_gl2;
  const std::vector<HeckeElement> translators = {
      hecke_basis(identity()), hecke_basis(s1()), hecke_basis(omega()),
      add(hecke_basis(s0()), scale(hecke_basis(identity()), Scalar(2)))};
  std::vector<std::vector<HeckeElement>> out;
  for (const auto& h : translators) {
    std::vector<HeckeElement> moved;
    for (const auto& p : phi) moved.push_back(hecke_multiply(p, h, f));
    out.push_back(regroup_by_degree(moved, order));
  }
  return out;
}

}  // namespace lfl
