// SPDX-License-Identifier: Apache-2.0
//
// beamsw: beam-switching design and analysis for mm-wave V2I roadside units

#pragma once

#include "beamsw/config.hpp"
#include "beamsw/metrics.hpp"
#include "beamsw/montecarlo.hpp"

#include <ostream>

namespace beamsw {

enum ExitCode : int {
    kExitOk = 0,
    kExitConfig = 2,
    kExitNumerical = 3,
    kExitMcDisagreement = 4,
};

struct CommandOptions {
    bool degrees = false;
    unsigned jobs = 1;
};

/// Relative rate tolerance and absolute outage tolerance for analytic vs
/// Monte Carlo agreement; either side may also be met within kAgreementSigmas
/// standard errors.
inline constexpr double kAgreementRateRel = 0.02;
inline constexpr double kAgreementOutageAbs = 0.005;
inline constexpr double kAgreementSigmas = 3.0;

struct Agreement {
    double rate_diff = 0.0;      // MC - analytic, bit/s
    double outage_diff = 0.0;    // MC - analytic, fraction
    double rate_tol = 0.0;
    double outage_tol = 0.0;
    bool rate_ok = false;
    bool outage_ok = false;
    bool pass() const { return rate_ok && outage_ok; }
};

Agreement compare(const PerformanceResult& analytic, const McResult& mc);

// Each command writes its CSV to `out` and diagnostics to `log`. They throw
// ConfigError / NumericalFailure; cmd_mc returns kExitMcDisagreement when
// the two routes disagree.
int cmd_design(const RunConfig& cfg, std::ostream& out, std::ostream& log, const CommandOptions& opt);
int cmd_evaluate(const RunConfig& cfg, std::ostream& out, std::ostream& log, const CommandOptions& opt);
int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& log, const CommandOptions& opt);
/// `weights_out` receives alpha, beta and the calibration extrema.
int cmd_bde(const RunConfig& cfg, std::ostream& out, std::ostream& weights_out, std::ostream& log,
            const CommandOptions& opt);
int cmd_mc(const RunConfig& cfg, std::ostream& out, std::ostream& log, const CommandOptions& opt);

} // namespace beamsw
