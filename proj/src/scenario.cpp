// SPDX-License-Identifier: Apache-2.0
//
// beamsw: beam-switching design and analysis for mm-wave V2I roadside units

#include "beamsw/scenario.hpp"

#include "beamsw/errors.hpp"

#include <cmath>
#include <string>

namespace beamsw {

namespace {

void require_positive(double value, const char* name)
{
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw ConfigError(std::string("scenario.") + name + " must be a finite positive number");
    }
}

} // namespace

void ScenarioParams::validate() const
{
    require_positive(carrier_freq_hz, "carrier_freq_hz");
    require_positive(pathloss_exp, "pathloss_exp");
    require_positive(covered_length_m, "covered_length_m");
    require_positive(rsu_offset_m, "rsu_offset_m");
    require_positive(rsu_height_m, "rsu_height_m");
    require_positive(vehicle_height_m, "vehicle_height_m");
    require_positive(speed_mps, "speed_mps");
    require_positive(bandwidth_hz, "bandwidth_hz");
    require_positive(lane_width_m, "lane_width_m");
    if (!std::isfinite(eirp_dbm) || !std::isfinite(noise_figure_db) || !std::isfinite(shadow_margin_db)) {
        throw ConfigError("scenario dB quantities must be finite");
    }
    if (!(sigma_v_mps >= 0.0) || !std::isfinite(sigma_v_mps)) {
        throw ConfigError("scenario.sigma_v_mps must be finite and >= 0");
    }
    if (!(rsu_height_m > vehicle_height_m)) {
        throw ConfigError("scenario.rsu_height_m must exceed scenario.vehicle_height_m");
    }
}

std::string_view to_string(Strategy s)
{
    switch (s) {
    case Strategy::EqualBeam:
        return "equal_beam";
    case Strategy::EqualCoverage:
        return "equal_coverage";
    }
    return "unknown";
}

Strategy parse_strategy(std::string_view text)
{
    if (text == "equal_beam") {
        return Strategy::EqualBeam;
    }
    if (text == "equal_coverage") {
        return Strategy::EqualCoverage;
    }
    throw ConfigError("unknown strategy '" + std::string(text) + "' (expected equal_beam or equal_coverage)");
}

void DesignSpec::validate() const
{
    if (n_beams < 1) {
        throw ConfigError("design.n_beams must be >= 1 (got " + std::to_string(n_beams) + ")");
    }
    if (!(overlap >= 0.0) || overlap > kMaxOverlapRatio) {
        throw ConfigError("design.overlap must lie in [0, 0.5]: each beam may overlap its neighbours "
                          "by at most 50% (got " +
                          std::to_string(overlap) + ")");
    }
}

} // namespace beamsw
