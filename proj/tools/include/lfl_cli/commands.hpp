#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lfl_cli/config.hpp"

namespace lfl::cli {

enum class Format { Text, Tsv };

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  /// Left-aligned columns separated by two spaces, or tab-separated.
  std::string render(Format f) const;
};

enum ExitCode : int { kOk = 0, kConfigError = 1, kComputationError = 2, kSelfcheckFailure = 3 };

// Each command writes its report to `out` and returns an exit code; domain failures
// propagate as ConfigError / ComputationError.
int cmd_basic_fn(const RunConfig& c, Format f, std::ostream& out);
int cmd_lfactor(const RunConfig& c, Format f, std::ostream& out);
int cmd_zeta(const RunConfig& c, Format f, std::ostream& out);
int cmd_toric(const RunConfig& c, Format f, std::ostream& out);
int cmd_semigroup(const RunConfig& c, Format f, std::ostream& out);
/// `order` tightens the acceptance truncation orders.
int cmd_selfcheck(const RunConfig& c, Format f, std::ostream& out, std::optional<std::size_t> order = {});

struct GoldenCheck {
  std::size_t checked = 0;
  std::vector<std::string> mismatches;
};
/// Rows "group  q  degree  coweight  value" compared against basic_function for the standard rep.
GoldenCheck check_golden_file(const std::filesystem::path& path);

/// Full entry point: argument parsing, config loading, dispatch and exit-code mapping.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lfl::cli
