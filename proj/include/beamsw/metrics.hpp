// SPDX-License-Identifier: Apache-2.0
//
// beamsw: beam-switching design and analysis for mm-wave V2I roadside units
//
// Analytic performance of a beam plan under Gaussian speed-estimation error:
// per-beam data volume, error-averaged rate, and outage time.
//
// Edge conventions for the first and last beam:
//  - the RSU keeps the last beam on until the vehicle leaves the stretch, so
//    the last beam has no hand-over and no early-switch outage;
//  - late-switch outage of the last beam would fall after the traversal and
//    is not counted;
//  - the first beam is active from t = 0 and cannot be activated late.

#pragma once

#include "beamsw/geometry.hpp"
#include "beamsw/link_budget.hpp"
#include "beamsw/quadrature.hpp"

#include <cstddef>
#include <vector>

namespace beamsw {

/// v_e integration is truncated to +-kSigmaSpan * sigma.
inline constexpr double kSigmaSpan = 6.0;
/// Speed errors at or below -kReverseGuard * v are outside the model
/// (vehicle must keep moving forward).
inline constexpr double kReverseGuard = 0.99;

struct BeamPerformance {
    int index = 0;
    double rate_bps = 0.0;
    double outage_s = 0.0;
};

struct PerformanceResult {
    std::vector<BeamPerformance> per_beam;
    double total_rate_bps = 0.0;
    double outage_fraction = 0.0;
    /// Part of outage_fraction contributed by the saturated-error
    /// (Q-function) terms; reported so any bias they carry is visible.
    double saturation_outage_fraction = 0.0;
    DesignSpec spec;
    double sigma_v_mps = 0.0;
};

/// Evaluation context bundling the inputs every metric needs.
struct MetricContext {
    const BeamPlan& plan;
    const LinkBudget& lb;
    const ScenarioParams& params;
    QuadratureConfig quad;
};

/// Data in bits delivered by beam `i` (1-based) when the RSU schedules
/// with speed v + v_e. Zero when the beam misses the vehicle entirely.
double data_given_error(std::size_t i, double v_e, const MetricContext& ctx);

/// Error-averaged rate contribution R_i of beam i.
double avg_rate(std::size_t i, const MetricContext& ctx);

struct OutageTerms {
    double saturated_s = 0.0;   // Q-function terms
    double partial_s = 0.0;     // integral terms
    double total() const { return saturated_s + partial_s; }
};

/// Outage time of beam i, split into its saturated and partial parts.
OutageTerms outage_terms(std::size_t i, const MetricContext& ctx);
double outage_time(std::size_t i, const MetricContext& ctx);

PerformanceResult evaluate(const BeamPlan& plan, const LinkBudget& lb, const ScenarioParams& params,
                           const QuadratureConfig& quad);

} // namespace beamsw
