// SPDX-License-Identifier: Apache-2.0
//
// beamsw: beam-switching design and analysis for mm-wave V2I roadside units

#include "beamsw/link_budget.hpp"

#include "beamsw/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace beamsw {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

LinkBudget derive(const ScenarioParams& params)
{
    params.validate();
    LinkBudget lb;
    const double dh = params.rsu_height_m - params.vehicle_height_m;
    lb.d_el = std::sqrt(params.rsu_offset_m * params.rsu_offset_m + dh * dh);
    lb.wavelength_m = kSpeedOfLight / params.carrier_freq_hz;

    const double a_db = params.eirp_dbm - params.shadow_margin_db +
                        10.0 * params.pathloss_exp * std::log10(lb.wavelength_m / (4.0 * std::numbers::pi));
    lb.path_gain = db_to_linear(a_db);

    lb.theta_el = std::atan((params.rsu_offset_m + 2.0 * params.lane_width_m) / params.rsu_height_m) -
                  std::atan(params.rsu_offset_m / params.rsu_height_m);

    const double noise_dbm = kNoiseFloorDbmPerHz + 10.0 * std::log10(params.bandwidth_hz) + params.noise_figure_db;
    lb.noise_mw = db_to_linear(noise_dbm);
    return lb;
}

double rx_gain(double theta_b, const LinkBudget& lb)
{
    if (!(theta_b > 0.0)) {
        throw DomainError("rx_gain: beamwidth must be positive (got " + std::to_string(theta_b) + ")");
    }
    return std::numbers::pi * std::numbers::pi / (lb.theta_el * theta_b);
}

double rx_power(double t, double theta_b, const LinkBudget& lb, const ScenarioParams& params)
{
    const double along = params.speed_mps * t - 0.5 * params.covered_length_m;
    const double dist_sq = along * along + lb.d_el * lb.d_el;
    return lb.path_gain * rx_gain(theta_b, lb) / std::pow(dist_sq, 0.5 * params.pathloss_exp);
}

double snr(double t, double theta_b, const LinkBudget& lb, const ScenarioParams& params)
{
    return rx_power(t, theta_b, lb, params) / lb.noise_mw;
}

double capacity(double t, double theta_b, const LinkBudget& lb, const ScenarioParams& params)
{
    return params.bandwidth_hz * std::log2(1.0 + snr(t, theta_b, lb, params));
}

} // namespace beamsw
