// SPDX-License-Identifier: Apache-2.0
//
// beamsw: beam-switching design and analysis for mm-wave V2I roadside units

#pragma once

#include "beamsw/bde.hpp"
#include "beamsw/geometry.hpp"
#include "beamsw/metrics.hpp"
#include "beamsw/montecarlo.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace beamsw::csv {

inline constexpr const char* kDesignHeader = "index,b_begin_m,b_end_m,switch_m,theta_rad,theta_nom_rad";
inline constexpr const char* kDesignHeaderDeg = "index,b_begin_m,b_end_m,switch_m,theta_deg,theta_nom_deg";
inline constexpr const char* kSweepHeader = "strategy,n_beams,overlap,sigma_v_mps,rate_bps,outage_fraction";
inline constexpr const char* kBdeHeader = "strategy,n_beams,overlap,sigma_v_mps,rate_bps,outage_fraction,bde";
inline constexpr const char* kMcHeader = "source,rate_bps,outage_fraction,stderr_rate,stderr_outage";
inline constexpr const char* kWeightsHeader =
    "alpha,beta,max_rate_bps,min_rate_bps,max_outage_fraction,min_outage_fraction";

/// Locale-independent, 9 significant digits.
std::string format_number(double value);

void write_design(std::ostream& os, const BeamPlan& plan, bool degrees = false);
void write_sweep(std::ostream& os, const std::vector<PerformanceResult>& results);
void write_bde(std::ostream& os, const std::vector<PerformanceResult>& results, const BdeSurface& surface);
void write_weights(std::ostream& os, const BdeWeights& w);

struct McRow {
    std::string source;
    double rate_bps = 0.0;
    double outage_fraction = 0.0;
    double stderr_rate = 0.0;
    double stderr_outage = 0.0;
};

void write_mc(std::ostream& os, const std::vector<McRow>& rows);

} // namespace beamsw::csv
