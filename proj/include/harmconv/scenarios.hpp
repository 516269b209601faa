#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "harmconv/geometry.hpp"
#include "harmconv/map_spec.hpp"

namespace harmconv {

// Verdict bound for direction certificates inside scenarios: a certificate
// counts as passing when its grid minimum clears -kScenarioCertTol.
inline constexpr double kScenarioCertTol = 1e-6;

// Command-line overrides; unset fields keep the scenario's defaults.
struct ScenarioOverrides {
  std::optional<Complex> a;
  std::optional<double> gamma;
  std::optional<double> beta;
  std::optional<double> theta;
  std::optional<int> n;
  std::optional<int> order;
  std::optional<std::vector<double>> grid_radii;
  std::optional<int> grid_angles;
  std::uint64_t seed = 0;
};

struct ScenarioResult {
  std::string scenario_id;
  std::string verdict;      // pass | fail | skipped
  std::string skip_reason;  // set only when skipped
  Json document;            // inputs, reports, tolerances, runtime
  bool passed() const { return verdict == "pass"; }
};

// Registered scenario ids, in registry order.
std::vector<std::string> scenario_ids();

// Runs one registered scenario. Throws UnknownScenario for unknown ids;
// violated scenario preconditions yield verdict "skipped", not an error.
ScenarioResult run_scenario(const std::string& id,
                            const ScenarioOverrides& overrides);

// JSON shapes shared by the scenario harness and the check subcommand.
Json grid_json(const DiskGrid& grid);
Json univalence_report_json(const UnivalenceReport& report);
Json certificate_json(const ConvexityCertificate& cert, double tol);

}  // namespace harmconv
