#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lfl/langlands.hpp"
#include "lfl/satake.hpp"
#include "lfl/semigroup.hpp"
#include "lfl/toric.hpp"

namespace lfl::cli {

inline constexpr int kSchemaVersion = 1;

struct RhoSpec {
  enum class Kind { Standard, Sym, HighestWeights, Characters, Cone };
  Kind kind = Kind::Standard;
  long k = 1;
  std::vector<Coweight> weights;  // HighestWeights / Characters
  Coweight torus_twist;           // Standard / Sym on GL x T
};

struct LFactorSpec {
  std::optional<SatakeParameter> semisimple;  // defaults to the Satake parameter
  std::optional<Scalar> steinberg_central;    // GL(2): s = (c q^{1/2}, c q^{-1/2}), c = -central
  Partition jordan;
  bool sgn_twisted = false;
};

struct ZetaSpec {
  enum class Level { Spherical, Iwahori };
  enum class Module { PrincipalSeries, Steinberg };
  enum class Support { MatO, IwahoriOrder };
  Level level = Level::Spherical;
  Module module = Module::PrincipalSeries;
  Support support = Support::MatO;
  Scalar central{1};
  int battery = 5;
  std::uint64_t seed = 1;
  std::size_t numerator_degree = 2;
  std::size_t denominator_degree = 4;
};

struct SemigroupSpec {
  ConeData cone;
  long bound = 6;
};

struct SelfcheckSpec {
  std::optional<std::filesystem::path> golden;
  std::vector<std::string> criteria;  // empty = all
};

struct RunConfig {
  GroupData group = GroupData::gl(2);
  RhoSpec rho;
  QField field{Rational(4)};
  std::optional<SatakeParameter> satake;
  std::size_t order = 6;
  LFactorSpec lfactor;
  ZetaSpec zeta;
  std::optional<ToricData> toric;
  std::optional<SemigroupSpec> semigroup;
  SelfcheckSpec selfcheck;

  LocalSetting setting() const { return {group, field}; }
};

/// Parses a configuration document; relative paths resolve against base_dir.
RunConfig parse_config(const std::string& text, const std::filesystem::path& base_dir = ".");
RunConfig load_config(const std::filesystem::path& path);

/// "3/2", "-4", or {"rational": "2/7", "q_half_power": 1}.
Scalar parse_scalar_text(const std::string& text);

GradedRep build_rep(const RunConfig& c);
Realization build_realization(const RunConfig& c);
LanglandsParameter build_parameter(const RunConfig& c);

}  // namespace lfl::cli
