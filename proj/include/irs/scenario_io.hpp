// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string_view>

#include "json.hpp"

#include "irs/scenario.hpp"

namespace irs {

/// Parses and validates a scenario document. Unknown keys are rejected.
///
/// Layout (all lengths in metres):
///
///   {
///     "bs": [x, y, z], "gt": [x, y, z],
///     "airspace": {"min": [x, y, z], "max": [x, y, z]},
///     "array": {"nx": 20, "ny": 20, "dx": 0.025, "dy": 0.025},
///     "pattern": {"q": 4},
///     "budget": {"beta0": 1, "lambda_c": 0.05, "p_b_dbm": 30, "sigma2": 1e-11},
///     "allow_elevated_terminals": false
///   }
///
/// `budget` and each of its keys are optional (defaults as shown); everything else is
/// required. Throws ParseError, ValidationError or GeometryError.
Scenario parse_scenario(std::string_view text);

Scenario load_scenario(const std::filesystem::path& path);

/// Fully resolved scenario, defaults materialized, plus derived g0, chi0 and d_min.
nlohmann::ordered_json scenario_to_json(const Scenario& scenario);

}  // namespace irs
