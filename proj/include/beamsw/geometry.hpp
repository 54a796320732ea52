// SPDX-License-Identifier: Apache-2.0
//
// beamsw: beam-switching design and analysis for mm-wave V2I roadside units

#pragma once

#include "beamsw/scenario.hpp"

#include <cstddef>
#include <vector>

namespace beamsw {

/// One RSU beam. Positions are road coordinates in [0, d_l] measured from
/// where the vehicle enters coverage; the RSU sits at d_l/2.
struct BeamSector {
    int index = 0;              // 1-based
    double begin_m = 0.0;       // b_{i,b}
    double end_m = 0.0;         // b_{i,e}
    double switch_m = 0.0;      // b_i, scheduled hand-over to beam i+1
    double width_rad = 0.0;     // azimuth width of [begin, end]
    double nominal_width_rad = 0.0;
};

struct BeamPlan {
    std::vector<BeamSector> sectors;
    double theta_rsu = 0.0;
    DesignSpec spec;

    std::size_t size() const { return sectors.size(); }
    const BeamSector& beam(std::size_t one_based) const { return sectors.at(one_based - 1); }

    /// b_{i-1}, with b_0 = 0.
    double switch_before(std::size_t one_based) const
    {
        return one_based <= 1 ? 0.0 : sectors[one_based - 2].switch_m;
    }
};

/// Angle from RSU broadside to road position x. Throws DomainError when x
/// lies outside [0, d_l].
double azimuth_of(double x_m, const ScenarioParams& params);

/// Inverse of azimuth_of (no range check).
double position_of(double azimuth_rad, const ScenarioParams& params);

/// Azimuth span of the covered stretch as seen from the RSU.
double theta_rsu(const ScenarioParams& params);

/// Nominal (zero-overlap) segment boundaries s_0 .. s_N.
std::vector<double> nominal_boundaries(const DesignSpec& spec, const ScenarioParams& params);

/// Builds the beam plan. Beam i covers its nominal segment [s_{i-1}, s_i]
/// (length L_i) widened by (o/2)*L_i on each side, except that it never
/// reaches more than half-way into a neighbouring segment, clamped to
/// [0, d_l]. The hand-over b_i is the midpoint of [b_{i+1,b}, b_{i,e}].
BeamPlan build_plan(const DesignSpec& spec, const ScenarioParams& params);

} // namespace beamsw
