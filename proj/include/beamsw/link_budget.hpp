// SPDX-License-Identifier: Apache-2.0
//
// beamsw: beam-switching design and analysis for mm-wave V2I roadside units

#pragma once

#include "beamsw/scenario.hpp"

namespace beamsw {

double db_to_linear(double db);
double linear_to_db(double linear);

/// Constants derived once per scenario. Powers are linear milliwatts, so
/// path_gain carries mW * m^n.
struct LinkBudget {
    double path_gain = 0.0;       // A
    double noise_mw = 0.0;
    double theta_el = 0.0;        // elevation beamwidth covering both lanes
    double d_el = 0.0;            // slant offset at closest approach
    double wavelength_m = 0.0;
};

LinkBudget derive(const ScenarioParams& params);

/// Receive gain of a sidelobe-free beam of the given azimuth width.
double rx_gain(double theta_b, const LinkBudget& lb);

double rx_power(double t, double theta_b, const LinkBudget& lb, const ScenarioParams& params);
double snr(double t, double theta_b, const LinkBudget& lb, const ScenarioParams& params);

/// Shannon capacity in bit/s at time t since the vehicle entered coverage.
double capacity(double t, double theta_b, const LinkBudget& lb, const ScenarioParams& params);

} // namespace beamsw
