#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lfl {

struct CriterionResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;  // 0 means no runtime bound
};

struct AcceptanceOptions {
  std::size_t spherical_order_gl2 = 12;
  std::size_t spherical_order_gl3 = 8;
  std::size_t iwahori_order = 12;
  std::size_t toric_order = 10;
  std::uint64_t seed = 0x5eed'1f4c'7041ULL;
};

CriterionResult criterion_standard_golden(const AcceptanceOptions& o = {});        // 1
CriterionResult criterion_spherical_dual_path(const AcceptanceOptions& o = {});    // 2
CriterionResult criterion_iwahori_steinberg(const AcceptanceOptions& o = {});      // 3
CriterionResult criterion_iwahori_order_steinberg(const AcceptanceOptions& o = {});// 3s
CriterionResult criterion_iwahori_principal(const AcceptanceOptions& o = {});      // 4
CriterionResult criterion_koszul(const AcceptanceOptions& o = {});                 // 5
CriterionResult criterion_toric(const AcceptanceOptions& o = {});                  // 6
CriterionResult criterion_semigroup(const AcceptanceOptions& o = {});              // 7
CriterionResult criterion_oracle(const AcceptanceOptions& o = {});                 // 8
CriterionResult criterion_properties(const AcceptanceOptions& o = {});             // 9

std::vector<std::string> acceptance_ids();
/// Runs one criterion by id ("1".."9", "3s").
CriterionResult run_criterion(const std::string& id, const AcceptanceOptions& o = {});
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& o = {});
/// "PASS 2 <title> (1.23s) detail"
std::string format_result(const CriterionResult& r);

}  // namespace lfl
