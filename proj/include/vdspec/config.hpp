#pragma once

#include <filesystem>
#include <string_view>

#include "json.hpp"
#include "vdspec/scenarios.hpp"

namespace vdspec {

/// Parse a run config (JSON, comments allowed) into a validated
/// ScenarioConfig.
///
/// Recognized keys, all optional except `packets` when no `scenario` base is
/// given (units are atomic units throughout):
///   scenario               catalog name used as the base configuration
///   name                   run label
///   n_points, dx, x_min    grid; x_min defaults to -n_points/2 * dx
///   dt, n_steps            time step and number of steps
///   x_detector, dx_sep     detector position and neighbour separation
///   potential              "zero" | "constant"
///   potential_value        V0 for "constant" (hartree)
///   zero_pad_factor, cvd_bin_width, rho_floor, support_floor,
///   window_abort_fraction
///   packets                [{x0, sigma_x, k0, phase, coeff_re, coeff_im}]
///
/// Unknown keys are rejected. Errors are ValidationError naming the key.
ScenarioConfig parse_run_config(std::string_view text);
ScenarioConfig load_run_config(const std::filesystem::path& path);

/// Config echo in the same key set accepted by parse_run_config.
nlohmann::json config_to_json(const ScenarioConfig& cfg);

}  // namespace vdspec
