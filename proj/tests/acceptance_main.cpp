// One line per acceptance criterion; exit status 1 if any selected criterion fails.
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "lfl/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"lfactor-lab acceptance suite"};
  std::vector<std::string> only;
  std::optional<std::size_t> order;
  app.add_option("--only", only, "criterion ids to run (default: all)");
  app.add_option("--order", order, "truncation order for the zeta criteria");
  CLI11_PARSE(app, argc, argv);

  lfl::AcceptanceOptions o;
  if (order) {
    o.spherical_order_gl2 = *order;
    o.iwahori_order = *order;
    o.toric_order = *order;
  }
  if (only.empty()) only = lfl::acceptance_ids();
  bool ok = true;
  for (const auto& id : only) {
    const lfl::CriterionResult r = lfl::run_criterion(id, o);
    std::cout << lfl::format_result(r) << std::endl;
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}
