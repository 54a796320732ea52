// SPDX-License-Identifier: Apache-2.0
//
// beamsw: beam-switching design and analysis for mm-wave V2I roadside units

#pragma once

#include "beamsw/metrics.hpp"

#include <vector>

namespace beamsw {

struct SweepGrid {
    std::vector<int> n_beams;
    std::vector<double> overlaps;
    std::vector<Strategy> strategies;

    void validate() const;
    std::size_t size() const { return n_beams.size() * overlaps.size() * strategies.size(); }
    /// Grid points in strategy-major, then n_beams, then overlap order.
    std::vector<DesignSpec> points() const;

    /// N_b in 1..60, overlap 0..0.5 step 0.1, both strategies.
    static SweepGrid defaults();
};

/// Evaluates every grid point with the scenario's sigma_v. Output order is
/// that of SweepGrid::points() for any job count. A failing point is
/// rethrown as NumericalFailure naming its coordinates.
std::vector<PerformanceResult> run_sweep(const SweepGrid& grid, const ScenarioParams& params,
                                         const QuadratureConfig& quad, unsigned jobs = 1);

/// Weights with alpha*max_rate - beta*min_out = 1 and
/// alpha*min_rate - beta*max_out = 0. Outage is the dimensionless fraction.
struct BdeWeights {
    double alpha = 0.0;
    double beta = 0.0;
    double max_rate = 0.0;
    double min_rate = 0.0;
    double max_out = 0.0;
    double min_out = 0.0;
};

BdeWeights calibrate(const std::vector<PerformanceResult>& results);

double efficiency(const PerformanceResult& result, const BdeWeights& w);

struct BdeEntry {
    Strategy strategy = Strategy::EqualCoverage;
    int n_beams = 0;
    double overlap = 0.0;
    double rate_bps = 0.0;
    double outage_fraction = 0.0;
    double bde = 0.0;
};

struct BdeSurface {
    BdeWeights weights;
    std::vector<BdeEntry> entries;
};

/// Calibrates on `results` and scores each of them.
BdeSurface bde_surface(const std::vector<PerformanceResult>& results);

} // namespace beamsw
