// SPDX-License-Identifier: Apache-2.0
//
// beamsw: beam-switching design and analysis for mm-wave V2I roadside units

#pragma once

#include <string_view>

namespace beamsw {

inline constexpr double kSpeedOfLight = 299'792'458.0;   // m/s
inline constexpr double kNoiseFloorDbmPerHz = -174.0;

/// Physical and RF constants of one RSU deployment. Defaults are the
/// reference 60 GHz highway scenario. sigma_v is the standard deviation of
/// the zero-mean Gaussian error on the speed the vehicle reports.
struct ScenarioParams {
    double carrier_freq_hz = 60e9;
    double pathloss_exp = 2.0;
    double eirp_dbm = 20.0;
    double covered_length_m = 100.0;   // d_l
    double rsu_offset_m = 3.0;         // d_0, lateral distance road <-> RSU
    double rsu_height_m = 7.0;
    double vehicle_height_m = 1.5;
    double speed_mps = 25.0;
    double noise_figure_db = 6.0;
    double bandwidth_hz = 2.16e9;
    double shadow_margin_db = 10.0;
    double lane_width_m = 3.5;
    double sigma_v_mps = 0.0;

    /// Traversal time of the covered stretch at the true speed.
    double traversal_time() const { return covered_length_m / speed_mps; }

    /// Throws ConfigError naming the first violated invariant.
    void validate() const;
};

enum class Strategy { EqualBeam, EqualCoverage };

std::string_view to_string(Strategy s);
/// Accepts "equal_beam" / "equal_coverage"; throws ConfigError otherwise.
Strategy parse_strategy(std::string_view text);

inline constexpr double kMaxOverlapRatio = 0.5;

struct DesignSpec {
    Strategy strategy = Strategy::EqualCoverage;
    int n_beams = 1;
    double overlap = 0.0;

    void validate() const;
};

} // namespace beamsw
