// SPDX-License-Identifier: Apache-2.0
//
// beamsw: beam-switching design and analysis for mm-wave V2I roadside units

#include "beamsw/kernels.hpp"

#include <cmath>

namespace beamsw::kernels {

CapacityArgs make_capacity_args(double theta_b, const LinkBudget& lb, const ScenarioParams& params)
{
    CapacityArgs a;
    a.snr_scale = lb.path_gain * rx_gain(theta_b, lb) / lb.noise_mw;
    a.speed = params.speed_mps;
    a.centre_m = 0.5 * params.covered_length_m;
    a.d_el_sq = lb.d_el * lb.d_el;
    a.half_exponent = 0.5 * params.pathloss_exp;
    a.bandwidth = params.bandwidth_hz;
    return a;
}

namespace scalar {

namespace {

inline double capacity_at(const CapacityArgs& a, double t)
{
    const double u = a.speed * t - a.centre_m;
    const double dist_sq = u * u + a.d_el_sq;
    return a.bandwidth * std::log2(1.0 + a.snr_scale / std::pow(dist_sq, a.half_exponent));
}

} // namespace

void capacity_batch(const CapacityArgs& args, std::span<const double> t, std::span<double> out)
{
    for (std::size_t k = 0; k < t.size(); ++k) {
        out[k] = capacity_at(args, t[k]);
    }
}

double capacity_dot(const CapacityArgs& args, std::span<const double> t, std::span<const double> weights)
{
    double acc = 0.0;
    for (std::size_t k = 0; k < t.size(); ++k) {
        acc += weights[k] * capacity_at(args, t[k]);
    }
    return acc;
}

} // namespace scalar
} // namespace beamsw::kernels
