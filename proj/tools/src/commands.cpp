#include "lfl_cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "lfl/acceptance.hpp"
#include "lfl/errors.hpp"
#include "lfl/hecke.hpp"
#include "lfl/zeta.hpp"

namespace lfl::cli {
namespace {

void print_kv(std::ostream& out, Format f, const std::string& key, const std::string& value) {
  if (f == Format::Tsv) {
    out << key << '\t' << value << '\n';
  } else {
    out << key << ": " << value << '\n';
  }
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Table series_table(const PowerSeries& s) {
  Table t{{"degree", "coefficient"}, {}};
  for (std::size_t d = 0; d <= s.order(); ++d) t.rows.push_back({std::to_string(d), s[d].str()});
  return t;
}

const SatakeParameter& require_satake(const RunConfig& c) {
  if (!c.satake) throw ConfigError("this subcommand needs \"satake\" entries");
  return *c.satake;
}

bool realizable(const RhoSpec& r) {
  return r.kind == RhoSpec::Kind::Standard || r.kind == RhoSpec::Kind::Sym || r.kind == RhoSpec::Kind::Characters;
}

bool is_gl2_standard(const RunConfig& c) {
  return c.group == GroupData::gl(2) && c.rho.kind == RhoSpec::Kind::Standard;
}

// Zeta series of the spherical basic function and of `battery` random right translates.
std::vector<ZetaSeries> spherical_battery(const RunConfig& c, const SatakeParameter& alpha) {
  const LocalSetting s = c.setting();
  const auto family = basic_function_family(build_rep(c), static_cast<long>(c.order), s);
  std::vector<ZetaSeries> out{spherical_zeta(family, alpha, c.order, s, "basic function")};
  if (c.group.is_torus() || c.zeta.battery <= 0) return out;
  if (c.group.gl_rank() != 2 && c.group.gl_rank() != 3) return out;
  std::mt19937_64 rng(c.zeta.seed);
  for (int i = 0; i < c.zeta.battery; ++i) {
    out.push_back(spherical_zeta(convolve_family(family, random_degree_zero(c.group, rng), s), alpha, c.order, s,
                                 "translate " + std::to_string(i + 1)));
  }
  return out;
}

std::vector<ZetaSeries> iwahori_battery_series(const RunConfig& c, std::optional<LanglandsParameter>& expected) {
  if (!is_gl2_standard(c)) throw ConfigError("zeta.level iwahori is available for GL(2) with rho standard only");
  const QField& f = c.field;
  const auto phi = iwahori_family(c.order, f, c.zeta.support == ZetaSpec::Support::IwahoriOrder);
  std::vector<std::pair<IwahoriMatrixCoefficient, std::string>> coefficients;
  if (c.zeta.module == ZetaSpec::Module::Steinberg) {
    coefficients.push_back({{steinberg_module(c.zeta.central, f), {Scalar(1)}, {Scalar(1)}}, "St"});
    const Scalar cc = -c.zeta.central;
    expected = make_parameter(c.group, {cc * f.sqrt_q(), cc * f.q_half_power(-1)}, {2}, true, f);
  } else {
    const SatakeParameter& alpha = require_satake(c);
    const HeckeModule m = principal_series_module(alpha, f);
    coefficients.push_back({{m, {Scalar(1), Scalar(0)}, {Scalar(1), Scalar(0)}}, "PS sph"});
    coefficients.push_back({{m, {Scalar(1), Scalar(1)}, {Scalar(1), Scalar(-2)}}, "PS mixed"});
    coefficients.push_back({{m, {Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}}, "PS sgn"});
    expected = make_parameter(c.group, alpha, {}, true, f);
  }
  std::vector<ZetaSeries> out;
  out.push_back(iwahori_zeta(phi, coefficients.front().first, c.order, f, "basic function, " + coefficients.front().second));
  const auto families = iwahori_battery(phi, c.order, f);
  for (const auto& [coef, name] : coefficients) {
    for (std::size_t i = 0; i < families.size(); ++i) {
      out.push_back(iwahori_zeta(families[i], coef, c.order, f, name + " translate " + std::to_string(i)));
    }
  }
  return out;
}

}  // namespace

std::string Table::render(Format f) const {
  std::ostringstream os;
  if (f == Format::Tsv) {
    os << join(header, "\t") << '\n';
    for (const auto& r : rows) os << join(r, "\t") << '\n';
    return os.str();
  }
  std::vector<std::size_t> width(header.size(), 0);
  auto widen = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
  };
  widen(header);
  for (const auto& r : rows) widen(r);
  auto line = [&](const std::vector<std::string>& r) {
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) {
      s += r[i];
      if (i + 1 < r.size()) s += std::string(width[i] - r[i].size() + 2, ' ');
    }
    os << s << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return os.str();
}

int cmd_basic_fn(const RunConfig& c, Format f, std::ostream& out) {
  const auto family = basic_function_family(build_rep(c), static_cast<long>(c.order), c.setting());
  Table t{{"degree", "coweight", "value"}, {}};
  for (std::size_t d = 0; d < family.size(); ++d) {
    for (const auto& [lam, v] : family[d]) {
      if (!v.is_zero()) t.rows.push_back({std::to_string(d), lam.str(), v.str()});
    }
  }
  out << t.render(f);
  return kOk;
}

int cmd_lfactor(const RunConfig& c, Format f, std::ostream& out) {
  const Realization rho = build_realization(c);
  const LanglandsParameter p = build_parameter(c);
  const LFactor lf = l_factor(p, rho);
  Table t{{"eigenvalue", "degree", "multiplicity"}, {}};
  for (const auto& e : lf.data) {
    t.rows.push_back({e.eigenvalue.str(), std::to_string(e.degree), std::to_string(e.multiplicity)});
  }
  out << t.render(f);
  if (f == Format::Text) out << '\n';
  print_kv(out, f, "denominator", lf.denominator.str());
  print_kv(out, f, "L", lf.value.str());
  return kOk;
}

int cmd_zeta(const RunConfig& c, Format f, std::ostream& out) {
  const std::size_t needed = c.zeta.numerator_degree + c.zeta.denominator_degree + 1;
  if (c.order < needed) {
    throw ConfigError("zeta: order " + std::to_string(c.order) + " is below numerator_degree + denominator_degree + 1 = " +
                      std::to_string(needed));
  }
  std::vector<ZetaSeries> battery;
  std::optional<LanglandsParameter> expected;
  if (c.zeta.level == ZetaSpec::Level::Spherical) {
    const SatakeParameter& alpha = require_satake(c);
    battery = spherical_battery(c, alpha);
    if (realizable(c.rho)) expected = make_parameter(c.group, alpha, {}, true, c.field);
  } else {
    battery = iwahori_battery_series(c, expected);
  }
  out << series_table(battery.front().series).render(f);
  if (f == Format::Text) out << '\n';
  const RecognitionBounds bounds{c.zeta.numerator_degree, c.zeta.denominator_degree};
  print_kv(out, f, "test functions", std::to_string(battery.size()));
  if (battery.front().series.is_zero()) {
    print_kv(out, f, "recognized", "0");
  } else {
    print_kv(out, f, "recognized",
             recognize_rational(battery.front().series, bounds.numerator_degree, bounds.denominator_degree).str());
  }
  bool all_zero = true;
  for (const auto& z : battery) all_zero = all_zero && z.series.is_zero();
  std::optional<RationalFunction> generator;
  if (all_zero) {
    print_kv(out, f, "ideal generator", "none (every zeta series vanishes)");
  } else {
    generator = zeta_ideal(battery, bounds);
    print_kv(out, f, "ideal generator", generator->str());
  }
  if (!expected) return all_zero ? kComputationError : kOk;
  const LFactor lf = l_factor(*expected, build_realization(c));
  print_kv(out, f, "L-factor", lf.value.str());
  const bool agree = generator && *generator == lf.value;
  print_kv(out, f, "agree", yes_no(agree));
  return agree ? kOk : kComputationError;
}

int cmd_toric(const RunConfig& c, Format f, std::ostream& out) {
  if (!c.toric) throw ConfigError("toric subcommand needs a \"toric\" section");
  const ToricData& d = *c.toric;
  const bool nondeg = is_nondegenerate(d);
  std::vector<long> invariants;
  {
    std::vector<std::vector<long>> m(d.rank, std::vector<long>(d.weights.size()));
    for (std::size_t j = 0; j < d.weights.size(); ++j) {
      for (std::size_t i = 0; i < d.rank; ++i) m[i][j] = d.weights[j][i];
    }
    invariants = smith_invariants(m);
  }
  std::vector<std::string> inv;
  for (long x : invariants) inv.push_back(std::to_string(x));
  print_kv(out, f, "smith invariants", inv.empty() ? "-" : join(inv, ","));
  print_kv(out, f, "nondegenerate", yes_no(nondeg));
  const long order = static_cast<long>(c.order);
  const auto family = nondeg ? pushforward_family(d, order) : vector_partition_family(d, order);
  if (!nondeg) print_kv(out, f, "support projection compact", yes_no(support_projection_compact(d, 12)));
  if (f == Format::Text) out << '\n';
  Table t{{"degree", "coweight", nondeg ? "pushforward" : "partitions"}, {}};
  for (std::size_t k = 0; k < family.size(); ++k) {
    for (const auto& [mu, v] : family[k]) t.rows.push_back({std::to_string(k), mu.str(), v.str()});
  }
  out << t.render(f);
  if (!c.satake) return kOk;
  const LocalSetting s{d.group(), c.field};
  validate_parameter(*c.satake, s.group);
  const ZetaSeries z = spherical_zeta(family, *c.satake, c.order, s, "toric");
  Realization rho = Realization::torus_character(s.group, d.weights[0]);
  for (std::size_t i = 1; i < d.weights.size(); ++i) {
    rho = Realization::direct_sum(rho, Realization::torus_character(s.group, d.weights[i]));
  }
  const LFactor lf = l_factor(make_parameter(s.group, *c.satake, {}, false, c.field), rho);
  const bool agree = z.series == series_from_rational(lf.value, c.order);
  if (f == Format::Text) out << '\n';
  out << series_table(z.series).render(f);
  if (f == Format::Text) out << '\n';
  print_kv(out, f, "L-factor", lf.value.str());
  print_kv(out, f, "agree", yes_no(agree));
  return agree ? kOk : kComputationError;
}

int cmd_semigroup(const RunConfig& c, Format f, std::ostream& out) {
  if (!c.semigroup) throw ConfigError("semigroup subcommand needs a \"semigroup\" section");
  const auto& spec = *c.semigroup;
  const auto ind = indecomposables(spec.cone, spec.bound);
  const auto top = s_max(ind, spec.cone.group);
  Table t{{"indecomposable", "maximal", "dimension", "degree"}, {}};
  for (const auto& lam : ind) {
    t.rows.push_back({lam.str(), yes_no(top.count(lam) > 0), std::to_string(weyl_dimension(lam, spec.cone.group)),
                      std::to_string(chi_degree(lam, spec.cone.group))});
  }
  out << t.render(f);
  if (f == Format::Text) out << '\n';
  const GradedRep rho = rho_from_cone(spec.cone, spec.bound);
  std::vector<std::string> tops;
  for (const auto& lam : top) tops.push_back(lam.str());
  print_kv(out, f, "rho highest weights", join(tops, " "));
  print_kv(out, f, "rho dimension", std::to_string(dimension(rho.character)));
  return kOk;
}

GoldenCheck check_golden_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read golden file " + path.string());
  GoldenCheck g;
  std::map<std::pair<std::string, std::string>, std::vector<SphericalElement>> cache;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, '\t')) cols.push_back(cell);
    if (cols.size() != 5) throw ConfigError("golden file line " + std::to_string(lineno) + ": expected 5 columns");
    if (cols[0] == "group") continue;
    const std::string where = "golden line " + std::to_string(lineno);
    int n = 0;
    if (cols[0] == "GL2") {
      n = 2;
    } else if (cols[0] == "GL3") {
      n = 3;
    } else {
      throw ConfigError(where + ": unknown group " + cols[0]);
    }
    long degree = 0;
    std::vector<long> entries;
    Scalar expected;
    Rational q;
    try {
      q = parse_rational(cols[1]);
      degree = std::stol(cols[2]);
      std::string body = cols[3];
      if (body.size() < 2 || body.front() != '(' || body.back() != ')') throw std::invalid_argument("coweight");
      std::stringstream cs(body.substr(1, body.size() - 2));
      while (std::getline(cs, cell, ',')) entries.push_back(std::stol(cell));
      expected = Scalar(parse_rational(cols[4]));
    } catch (const std::exception&) {
      throw ConfigError(where + ": malformed row");
    }
    if (sgn(q) <= 0 || degree < 0 || degree > 12) throw ConfigError(where + ": q or degree out of range");
    auto& family = cache[{cols[0], cols[1]}];
    const GroupData grp = GroupData::gl(n);
    if (family.size() <= static_cast<std::size_t>(degree)) {
      std::vector<long> top(n, 0);
      top[0] = 1;
      family = basic_function_family({grp, irreducible_character(Coweight(top), grp)}, std::max<long>(degree, 4),
                                     {grp, QField(q)});
    }
    const Coweight lam(entries);
    const auto& fd = family[degree];
    auto it = fd.find(lam);
    const Scalar got = it == fd.end() ? Scalar(0) : it->second;
    ++g.checked;
    if (got != expected) {
      g.mismatches.push_back(cols[0] + " q=" + cols[1] + " " + lam.str() + ": got " + got.str() + ", golden " +
                             cols[4]);
    }
  }
  return g;
}

int cmd_selfcheck(const RunConfig& c, Format f, std::ostream& out, std::optional<std::size_t> order) {
  AcceptanceOptions o;
  if (order) {
    o.spherical_order_gl2 = *order;
    o.iwahori_order = *order;
    o.toric_order = *order;
    o.spherical_order_gl3 = std::max<std::size_t>(8, *order > 4 ? *order - 4 : 0);
  }
  bool ok = true;
  // Runtimes are left out so that the report is byte-identical between runs; budgets are
  // enforced inside each criterion.
  Table t{{"status", "id", "title", "detail"}, {}};
  auto add_row = [&](bool passed, const std::string& id, const std::string& title, const std::string& detail) {
    ok = ok && passed;
    t.rows.push_back({passed ? "PASS" : "FAIL", id, title, detail});
  };
  if (c.selfcheck.golden) {
    const GoldenCheck g = check_golden_file(*c.selfcheck.golden);
    std::string detail = std::to_string(g.checked - g.mismatches.size()) + "/" + std::to_string(g.checked) + " rows";
    if (!g.mismatches.empty()) detail += "; first mismatch " + g.mismatches.front();
    add_row(g.mismatches.empty() && g.checked > 0, "golden", c.selfcheck.golden->filename().string(), detail);
  }
  const std::vector<std::string> ids = c.selfcheck.criteria.empty() ? acceptance_ids() : c.selfcheck.criteria;
  for (const auto& id : ids) {
    const CriterionResult r = run_criterion(id, o);
    add_row(r.passed, r.id, r.title, r.detail);
  }
  if (f == Format::Tsv) {
    out << t.render(f);
  } else {
    for (const auto& r : t.rows) out << r[0] << ' ' << r[1] << ' ' << r[2] << ": " << r[3] << '\n';
  }
  print_kv(out, f, "selfcheck", ok ? "pass" : "fail");
  return ok ? kOk : kSelfcheckFailure;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact local L-factors: zeta series against basic functions and Langlands-parameter determinants",
               "lfactor-lab"};
  std::string command;
  std::string config_path;
  std::optional<std::size_t> order;
  std::string format = "text";
  app.add_option("command", command, "basic-fn | lfactor | zeta | toric | semigroup | selfcheck")
      ->required()
      ->check(CLI::IsMember({"basic-fn", "lfactor", "zeta", "toric", "semigroup", "selfcheck"}));
  app.add_option("--config", config_path, "JSON run configuration")->required();
  app.add_option("--order", order, "truncation order (overrides the config)")->check(CLI::Range(0, 64));
  app.add_option("--format", format, "text or tsv")->check(CLI::IsMember({"text", "tsv"}));
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "lfactor-lab: " << e.what() << '\n';
    return kConfigError;
  }
  const Format f = format == "tsv" ? Format::Tsv : Format::Text;
  try {
    RunConfig c = load_config(config_path);
    if (order && command != "selfcheck") c.order = *order;
    if (command == "basic-fn") return cmd_basic_fn(c, f, out);
    if (command == "lfactor") return cmd_lfactor(c, f, out);
    if (command == "zeta") return cmd_zeta(c, f, out);
    if (command == "toric") return cmd_toric(c, f, out);
    if (command == "semigroup") return cmd_semigroup(c, f, out);
    return cmd_selfcheck(c, f, out, order);
  } catch (const ConfigError& e) {
    err << "lfactor-lab: config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    err << "lfactor-lab: computation error: " << e.what() << '\n';
    return kComputationError;
  }
}

}  // namespace lfl::cli
