#include "lfl_cli/config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "lfl/errors.hpp"

namespace lfl::cli {
namespace {

using nlohmann::json;

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ConfigError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

long as_long(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ConfigError(where + ": expected an integer");
  return j.get<long>();
}

Coweight as_coweight(const json& j, const std::string& where) {
  if (!j.is_array()) throw ConfigError(where + ": expected an integer array");
  std::vector<long> v;
  for (const auto& x : j) v.push_back(as_long(x, where));
  return Coweight(std::move(v));
}

std::vector<Coweight> as_coweights(const json& j, const std::string& where) {
  if (!j.is_array()) throw ConfigError(where + ": expected a list of integer arrays");
  std::vector<Coweight> out;
  for (const auto& x : j) out.push_back(as_coweight(x, where));
  return out;
}

Scalar as_scalar(const json& j, const QField& field, const std::string& where) {
  if (j.is_number()) throw ConfigError(where + ": scalars must be exact strings such as \"3/2\"");
  if (j.is_string()) return parse_scalar_text(j.get<std::string>());
  if (j.is_object()) {
    Scalar r = parse_scalar_text(require(j, "rational", where).get<std::string>());
    if (j.contains("q_half_power")) r *= field.q_half_power(as_long(j.at("q_half_power"), where));
    return r;
  }
  throw ConfigError(where + ": unsupported scalar");
}

SatakeParameter as_parameter(const json& j, const QField& field, const std::string& where) {
  if (!j.is_array()) throw ConfigError(where + ": expected a list of scalars");
  SatakeParameter out;
  for (const auto& x : j) {
    Scalar s = as_scalar(x, field, where);
    if (s.is_zero()) throw ConfigError(where + ": entries must be nonzero");
    out.push_back(s);
  }
  return out;
}

GroupData parse_group(const json& j) {
  const std::string type = require(j, "type", "group").get<std::string>();
  try {
    if (type == "GL") return GroupData::gl(static_cast<int>(as_long(require(j, "n", "group"), "group.n")));
    if (type == "torus") {
      const long r = as_long(require(j, "rank", "group"), "group.rank");
      return GroupData::torus(static_cast<int>(r), as_coweight(require(j, "chi", "group"), "group.chi"));
    }
    if (type == "GLxT") {
      return GroupData::gl_times_torus(static_cast<int>(as_long(require(j, "n", "group"), "group.n")),
                                       static_cast<int>(as_long(require(j, "torus_rank", "group"), "group.torus_rank")),
                                       as_coweight(require(j, "chi", "group"), "group.chi"));
    }
  } catch (const ComputationError& e) {
    throw ConfigError(std::string("group: ") + e.what());
  }
  throw ConfigError("group: unknown type \"" + type + "\"");
}

RhoSpec parse_rho(const json& j) {
  RhoSpec r;
  const std::string kind = require(j, "kind", "rho").get<std::string>();
  if (j.contains("torus_twist")) r.torus_twist = as_coweight(j.at("torus_twist"), "rho.torus_twist");
  if (kind == "standard") {
    r.kind = RhoSpec::Kind::Standard;
  } else if (kind == "sym") {
    r.kind = RhoSpec::Kind::Sym;
    r.k = as_long(require(j, "k", "rho"), "rho.k");
  } else if (kind == "highest_weights") {
    r.kind = RhoSpec::Kind::HighestWeights;
    r.weights = as_coweights(require(j, "weights", "rho"), "rho.weights");
  } else if (kind == "characters") {
    r.kind = RhoSpec::Kind::Characters;
    r.weights = as_coweights(require(j, "weights", "rho"), "rho.weights");
  } else if (kind == "cone") {
    r.kind = RhoSpec::Kind::Cone;
  } else {
    throw ConfigError("rho: unknown kind \"" + kind + "\"");
  }
  return r;
}

}  // namespace

Scalar parse_scalar_text(const std::string& text) {
  try {
    return Scalar(parse_rational(text));
  } catch (const std::exception& e) {
    throw ConfigError("bad scalar \"" + text + "\"");
  }
}

RunConfig parse_config(const std::string& text, const std::filesystem::path& base_dir) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  const long version = as_long(require(j, "schema_version", "config"), "schema_version");
  if (version != kSchemaVersion) throw ConfigError("unsupported schema_version " + std::to_string(version));

  RunConfig c;
  try {
    if (j.contains("q")) {
      if (!j.at("q").is_string()) throw ConfigError("q must be an exact string");
      const Rational q = parse_rational(j.at("q").get<std::string>());
      if (sgn(q) <= 0) throw ConfigError("q must be positive");
      c.field = QField(q);
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("q: ") + e.what());
  }
  if (j.contains("group")) c.group = parse_group(j.at("group"));
  if (j.contains("rho")) c.rho = parse_rho(j.at("rho"));
  if (j.contains("order")) {
    const long order = as_long(j.at("order"), "order");
    if (order < 0 || order > 64) throw ConfigError("order must lie in [0, 64]");
    c.order = static_cast<std::size_t>(order);
  }
  if (j.contains("satake")) {
    c.satake = as_parameter(j.at("satake"), c.field, "satake");
    if (c.satake->size() != c.group.rank()) throw ConfigError("satake: wrong number of entries for " + c.group.name());
  }
  if (j.contains("lfactor")) {
    const json& l = j.at("lfactor");
    if (l.contains("semisimple")) c.lfactor.semisimple = as_parameter(l.at("semisimple"), c.field, "lfactor.semisimple");
    if (l.contains("steinberg_central")) {
      c.lfactor.steinberg_central = as_scalar(l.at("steinberg_central"), c.field, "lfactor.steinberg_central");
    }
    if (l.contains("jordan")) {
      for (const auto& b : l.at("jordan")) c.lfactor.jordan.push_back(as_long(b, "lfactor.jordan"));
    }
    if (l.contains("sgn_twisted")) c.lfactor.sgn_twisted = l.at("sgn_twisted").get<bool>();
  }
  if (j.contains("zeta")) {
    const json& z = j.at("zeta");
    const std::string level = z.value("level", "spherical");
    if (level == "spherical") {
      c.zeta.level = ZetaSpec::Level::Spherical;
    } else if (level == "iwahori") {
      c.zeta.level = ZetaSpec::Level::Iwahori;
    } else {
      throw ConfigError("zeta.level must be spherical or iwahori");
    }
    const std::string module = z.value("module", "principal_series");
    if (module == "principal_series") {
      c.zeta.module = ZetaSpec::Module::PrincipalSeries;
    } else if (module == "steinberg") {
      c.zeta.module = ZetaSpec::Module::Steinberg;
    } else {
      throw ConfigError("zeta.module must be principal_series or steinberg");
    }
    const std::string support = z.value("basic_function", "mat_O");
    if (support == "mat_O") {
      c.zeta.support = ZetaSpec::Support::MatO;
    } else if (support == "iwahori_order") {
      c.zeta.support = ZetaSpec::Support::IwahoriOrder;
    } else {
      throw ConfigError("zeta.basic_function must be mat_O or iwahori_order");
    }
    if (z.contains("central")) c.zeta.central = as_scalar(z.at("central"), c.field, "zeta.central");
    if (c.zeta.central.is_zero()) throw ConfigError("zeta.central must be nonzero");
    if (z.contains("battery")) c.zeta.battery = static_cast<int>(as_long(z.at("battery"), "zeta.battery"));
    if (z.contains("seed")) c.zeta.seed = static_cast<std::uint64_t>(as_long(z.at("seed"), "zeta.seed"));
    if (z.contains("numerator_degree")) {
      c.zeta.numerator_degree = static_cast<std::size_t>(as_long(z.at("numerator_degree"), "zeta.numerator_degree"));
    }
    if (z.contains("denominator_degree")) {
      c.zeta.denominator_degree =
          static_cast<std::size_t>(as_long(z.at("denominator_degree"), "zeta.denominator_degree"));
    }
  }
  if (j.contains("toric")) {
    const json& t = j.at("toric");
    ToricData d;
    d.rank = static_cast<std::size_t>(as_long(require(t, "rank", "toric"), "toric.rank"));
    d.weights = as_coweights(require(t, "weights", "toric"), "toric.weights");
    d.chi = as_coweight(require(t, "chi", "toric"), "toric.chi");
    validate(d);
    c.toric = d;
  }
  if (j.contains("semigroup")) {
    const json& s = j.at("semigroup");
    SemigroupSpec spec{ConeData{s.contains("group") ? parse_group(s.at("group")) : c.group, {}, {}}, 6};
    if (s.contains("symmetric_power")) {
      spec.cone = symmetric_power_cone(as_long(s.at("symmetric_power"), "semigroup.symmetric_power"));
    } else {
      spec.cone.equations = as_coweights(s.value("equations", json::array()), "semigroup.equations");
      spec.cone.inequalities = as_coweights(s.value("inequalities", json::array()), "semigroup.inequalities");
      validate(spec.cone);
    }
    if (s.contains("bound")) spec.bound = as_long(s.at("bound"), "semigroup.bound");
    c.semigroup = spec;
  }
  if (c.rho.kind == RhoSpec::Kind::Cone && !c.semigroup) throw ConfigError("rho.kind cone needs a semigroup section");
  if (j.contains("selfcheck")) {
    const json& s = j.at("selfcheck");
    if (s.contains("golden")) c.selfcheck.golden = base_dir / s.at("golden").get<std::string>();
    if (s.contains("criteria")) {
      for (const auto& id : s.at("criteria")) c.selfcheck.criteria.push_back(id.get<std::string>());
    }
  }
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path.parent_path());
}

GradedRep build_rep(const RunConfig& c) {
  switch (c.rho.kind) {
    case RhoSpec::Kind::Cone:
      return rho_from_cone(c.semigroup->cone, c.semigroup->bound);
    case RhoSpec::Kind::HighestWeights: {
      for (const auto& w : c.rho.weights) {
        if (w.rank() != c.group.rank()) throw ConfigError("rho.weights: wrong rank for " + c.group.name());
        if (!c.group.is_dominant(w)) throw ConfigError("rho.weights: " + w.str() + " is not dominant");
      }
      return {c.group, character_of_highest_weights(c.rho.weights, c.group)};
    }
    default:
      return build_realization(c).graded_rep();
  }
}

Realization build_realization(const RunConfig& c) {
  try {
    switch (c.rho.kind) {
      case RhoSpec::Kind::Standard:
        return Realization::standard(c.group, c.rho.torus_twist);
      case RhoSpec::Kind::Sym:
        return Realization::sym_power(c.group, c.rho.k, c.rho.torus_twist);
      case RhoSpec::Kind::Characters: {
        if (c.rho.weights.empty()) throw ConfigError("rho.weights is empty");
        Realization r = Realization::torus_character(c.group, c.rho.weights[0]);
        for (std::size_t i = 1; i < c.rho.weights.size(); ++i) {
          r = Realization::direct_sum(r, Realization::torus_character(c.group, c.rho.weights[i]));
        }
        return r;
      }
      default:
        throw ConfigError("this rho kind has no matrix realisation (use standard, sym or characters)");
    }
  } catch (const ComputationError& e) {
    throw ConfigError(std::string("rho: ") + e.what());
  }
}

LanglandsParameter build_parameter(const RunConfig& c) {
  if (c.lfactor.steinberg_central) {
    if (c.group.gl_rank() != 2 || c.group.torus_rank() != 0) throw ConfigError("steinberg_central needs GL(2)");
    const Scalar z = *c.lfactor.steinberg_central;
    if (z.is_zero()) throw ConfigError("steinberg_central must be nonzero");
    const Scalar cc = -z;
    Partition jordan = c.lfactor.jordan.empty() ? Partition{2} : c.lfactor.jordan;
    return make_parameter(c.group, {cc * c.field.sqrt_q(), cc * c.field.q_half_power(-1)}, jordan,
                          c.lfactor.sgn_twisted, c.field);
  }
  const auto& s = c.lfactor.semisimple ? c.lfactor.semisimple : c.satake;
  if (!s) throw ConfigError("lfactor needs a semisimple part (lfactor.semisimple or satake)");
  return make_parameter(c.group, *s, c.lfactor.jordan, c.lfactor.sgn_twisted, c.field);
}

}  // namespace lfl::cli
