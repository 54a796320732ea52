// SPDX-License-Identifier: Apache-2.0
//
// beamsw: beam-switching design and analysis for mm-wave V2I roadside units
//
// Batched capacity kernels. The scalar routines are the reference; the AVX2
// routines are selected at runtime when the CPU supports AVX2+FMA and must
// agree with the reference to ~1e-14 relative.

#pragma once

#include "beamsw/link_budget.hpp"

#include <span>
#include <string_view>

namespace beamsw::kernels {

/// Everything the capacity integrand needs, flattened for the inner loop:
///   C(t) = bandwidth * log2(1 + snr_scale / ((speed*t - centre)^2 + d_el_sq)^(n/2))
struct CapacityArgs {
    double snr_scale = 0.0;
    double speed = 0.0;
    double centre_m = 0.0;
    double d_el_sq = 0.0;
    double half_exponent = 1.0;
    double bandwidth = 0.0;
};

CapacityArgs make_capacity_args(double theta_b, const LinkBudget& lb, const ScenarioParams& params);

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

/// Best ISA the running CPU supports (and this build contains).
Isa detect_isa();
/// ISA currently used by the dispatching entry points.
Isa active_isa();
/// Forces an ISA; requesting an unsupported one falls back to Scalar.
/// Returns the ISA actually selected.
Isa select_isa(Isa isa);

// Dispatching entry points. `out`/`weights` must match `t` in length.
void capacity_batch(const CapacityArgs& args, std::span<const double> t, std::span<double> out);
double capacity_dot(const CapacityArgs& args, std::span<const double> t, std::span<const double> weights);

namespace scalar {
void capacity_batch(const CapacityArgs& args, std::span<const double> t, std::span<double> out);
double capacity_dot(const CapacityArgs& args, std::span<const double> t, std::span<const double> weights);
} // namespace scalar

namespace avx2 {
bool available();
void capacity_batch(const CapacityArgs& args, std::span<const double> t, std::span<double> out);
double capacity_dot(const CapacityArgs& args, std::span<const double> t, std::span<const double> weights);
} // namespace avx2

} // namespace beamsw::kernels
