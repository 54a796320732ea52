// SPDX-License-Identifier: Apache-2.0
//
// beamsw: beam-switching design and analysis for mm-wave V2I roadside units

#include "beamsw/geometry.hpp"

#include "beamsw/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace beamsw {

double azimuth_of(double x_m, const ScenarioParams& params)
{
    const double dl = params.covered_length_m;
    if (!(x_m >= 0.0 && x_m <= dl)) {
        throw DomainError("azimuth_of: position " + std::to_string(x_m) + " m outside [0, " +
                          std::to_string(dl) + "]");
    }
    return std::atan((x_m - 0.5 * dl) / params.rsu_offset_m);
}

double position_of(double azimuth_rad, const ScenarioParams& params)
{
    return 0.5 * params.covered_length_m + params.rsu_offset_m * std::tan(azimuth_rad);
}

double theta_rsu(const ScenarioParams& params)
{
    return 2.0 * std::atan(params.covered_length_m / (2.0 * params.rsu_offset_m));
}

std::vector<double> nominal_boundaries(const DesignSpec& spec, const ScenarioParams& params)
{
    spec.validate();
    const auto n = static_cast<std::size_t>(spec.n_beams);
    const double dl = params.covered_length_m;
    std::vector<double> s(n + 1);
    if (spec.strategy == Strategy::EqualCoverage) {
        for (std::size_t k = 0; k <= n; ++k) {
            s[k] = dl * static_cast<double>(k) / static_cast<double>(n);
        }
    } else {
        const double span = theta_rsu(params);
        for (std::size_t k = 0; k <= n; ++k) {
            const double phi = -0.5 * span + span * static_cast<double>(k) / static_cast<double>(n);
            s[k] = std::clamp(position_of(phi, params), 0.0, dl);
        }
    }
    // Pin the ends; tan() round-off must not move the stretch boundaries.
    s.front() = 0.0;
    s.back() = dl;
    return s;
}

BeamPlan build_plan(const DesignSpec& spec, const ScenarioParams& params)
{
    const std::vector<double> s = nominal_boundaries(spec, params);
    const std::size_t n = s.size() - 1;
    const double dl = params.covered_length_m;

    // Each beam reaches (o/2) * L_i past both ends of its own segment, but
    // never covers more than half of the adjacent segment.
    std::vector<double> left(n, 0.0);
    std::vector<double> right(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double own = 0.5 * spec.overlap * (s[i + 1] - s[i]);
        if (i > 0) {
            left[i] = std::min(own, 0.5 * (s[i] - s[i - 1]));
        }
        if (i + 1 < n) {
            right[i] = std::min(own, 0.5 * (s[i + 2] - s[i + 1]));
        }
    }

    BeamPlan plan;
    plan.spec = spec;
    plan.theta_rsu = theta_rsu(params);
    plan.sectors.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        BeamSector& b = plan.sectors[i];
        b.index = static_cast<int>(i + 1);
        b.begin_m = std::clamp(s[i] - left[i], 0.0, dl);
        b.end_m = std::clamp(s[i + 1] + right[i], 0.0, dl);
        b.nominal_width_rad = azimuth_of(s[i + 1], params) - azimuth_of(s[i], params);
        b.width_rad = azimuth_of(b.end_m, params) - azimuth_of(b.begin_m, params);
    }
    // Hand-over at the midpoint of [b_{i+1,b}, b_{i,e}]; the last beam ends the stretch.
    for (std::size_t i = 0; i + 1 < n; ++i) {
        plan.sectors[i].switch_m = 0.5 * (plan.sectors[i + 1].begin_m + plan.sectors[i].end_m);
    }
    plan.sectors.back().switch_m = dl;
    return plan;
}

} // namespace beamsw
