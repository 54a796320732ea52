// SPDX-License-Identifier: Apache-2.0
//
// beamsw: beam-switching design and analysis for mm-wave V2I roadside units
//
// Trace-level Monte Carlo replay of the RSU switching schedule. Each sample
// draws a speed error, schedules hand-overs at b_i / (v + v_e), and walks the
// true trajectory on a fixed time grid with midpoint sampling, accumulating
// capacity while the active beam covers the vehicle and outage otherwise.

#pragma once

#include "beamsw/geometry.hpp"
#include "beamsw/link_budget.hpp"

#include <cstdint>
#include <vector>

namespace beamsw {

struct McConfig {
    std::uint64_t n_samples = 100'000;
    double dt_s = 1e-5;
    std::uint64_t seed = 1;

    void validate() const;
};

struct McResult {
    double mean_rate_bps = 0.0;
    double mean_outage_fraction = 0.0;
    double stderr_rate_bps = 0.0;
    double stderr_outage = 0.0;
    std::uint64_t rejected = 0;   // draws with v_e <= -0.99 v
    std::uint64_t n_samples = 0;
};

struct SampleTrace {
    double data_bits = 0.0;
    double covered_s = 0.0;
    double outage_s = 0.0;
};

/// Per-plan replay machinery: capacity of every beam tabulated on the time
/// grid over the beam's coverage window, with prefix sums so one sample
/// costs O(N_b).
class TraceReplayer {
public:
    TraceReplayer(const BeamPlan& plan, const LinkBudget& lb, const ScenarioParams& params, double dt_s);

    /// Replays a single sample with speed error v_e (requires v + v_e > 0).
    SampleTrace replay(double v_e) const;

    /// Index (1-based) of the beam the RSU has active at grid step k.
    int active_beam(double v_e, std::int64_t step) const;

    std::int64_t steps() const { return steps_; }
    double dt() const { return dt_; }

private:
    struct Window {
        std::int64_t first = 0;   // first grid step the beam covers
        std::int64_t last = 0;    // one past the last covered step
        std::vector<double> prefix;   // prefix[k - first] = sum of C * dt before step k
    };

    std::int64_t first_step_at_or_after(double t) const;

    const BeamPlan* plan_;
    ScenarioParams params_;
    double dt_;
    std::int64_t steps_;
    std::vector<Window> windows_;
};

/// Draws the speed error for sample `index` from a stream derived from
/// (seed, index); independent of scheduling.
double draw_speed_error(std::uint64_t seed, std::uint64_t index, double sigma, double speed,
                        std::uint64_t* rejected = nullptr);

McResult simulate(const BeamPlan& plan, const LinkBudget& lb, const ScenarioParams& params,
                  const McConfig& mc, unsigned jobs = 1);

} // namespace beamsw
