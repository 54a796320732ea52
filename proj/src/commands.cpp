// SPDX-License-Identifier: Apache-2.0
//
// beamsw: beam-switching design and analysis for mm-wave V2I roadside units

#include "beamsw/commands.hpp"

#include "beamsw/bde.hpp"
#include "beamsw/csv.hpp"
#include "beamsw/errors.hpp"
#include "beamsw/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace beamsw {

namespace {

const DesignSpec& single_design(const RunConfig& cfg, const char* command)
{
    if (cfg.is_sweep()) {
        throw ConfigError(std::string(command) + " needs a single design (design.* keys), not a sweep grid");
    }
    return std::get<DesignSpec>(cfg.design);
}

const SweepGrid& sweep_grid(const RunConfig& cfg, const char* command)
{
    if (!cfg.is_sweep()) {
        throw ConfigError(std::string(command) + " needs a sweep grid (sweep.* keys), not a single design");
    }
    return std::get<SweepGrid>(cfg.design);
}

} // namespace

Agreement compare(const PerformanceResult& analytic, const McResult& mc)
{
    Agreement a;
    a.rate_diff = mc.mean_rate_bps - analytic.total_rate_bps;
    a.outage_diff = mc.mean_outage_fraction - analytic.outage_fraction;
    a.rate_tol = std::max(kAgreementRateRel * std::abs(analytic.total_rate_bps), kAgreementSigmas * mc.stderr_rate_bps);
    a.outage_tol = std::max(kAgreementOutageAbs, kAgreementSigmas * mc.stderr_outage);
    a.rate_ok = std::abs(a.rate_diff) <= a.rate_tol;
    a.outage_ok = std::abs(a.outage_diff) <= a.outage_tol;
    return a;
}

int cmd_design(const RunConfig& cfg, std::ostream& out, std::ostream&, const CommandOptions& opt)
{
    const BeamPlan plan = build_plan(single_design(cfg, "design"), cfg.scenario);
    csv::write_design(out, plan, opt.degrees);
    return kExitOk;
}

int cmd_evaluate(const RunConfig& cfg, std::ostream& out, std::ostream& log, const CommandOptions&)
{
    const DesignSpec& spec = single_design(cfg, "evaluate");
    const LinkBudget lb = derive(cfg.scenario);
    const PerformanceResult r = evaluate(build_plan(spec, cfg.scenario), lb, cfg.scenario, cfg.quad);
    csv::write_sweep(out, {r});
    log << "kernel isa: " << kernels::to_string(kernels::active_isa()) << '\n';
    return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& log, const CommandOptions& opt)
{
    const SweepGrid& grid = sweep_grid(cfg, "sweep");
    const auto results = run_sweep(grid, cfg.scenario, cfg.quad, opt.jobs);
    csv::write_sweep(out, results);
    log << "evaluated " << results.size() << " grid points\n";
    return kExitOk;
}

int cmd_bde(const RunConfig& cfg, std::ostream& out, std::ostream& weights_out, std::ostream& log,
            const CommandOptions& opt)
{
    const SweepGrid& grid = sweep_grid(cfg, "bde");
    const auto results = run_sweep(grid, cfg.scenario, cfg.quad, opt.jobs);
    const BdeSurface surface = bde_surface(results);
    csv::write_bde(out, results, surface);
    csv::write_weights(weights_out, surface.weights);
    log << "alpha=" << csv::format_number(surface.weights.alpha) << " beta=" << csv::format_number(surface.weights.beta)
        << '\n';
    return kExitOk;
}

int cmd_mc(const RunConfig& cfg, std::ostream& out, std::ostream& log, const CommandOptions& opt)
{
    const DesignSpec& spec = single_design(cfg, "mc");
    const McConfig mc = cfg.mc.value_or(McConfig{});
    const LinkBudget lb = derive(cfg.scenario);
    const BeamPlan plan = build_plan(spec, cfg.scenario);

    const PerformanceResult analytic = evaluate(plan, lb, cfg.scenario, cfg.quad);
    const McResult sim = simulate(plan, lb, cfg.scenario, mc, opt.jobs);
    const Agreement agree = compare(analytic, sim);

    std::vector<csv::McRow> rows;
    rows.push_back({"analytic", analytic.total_rate_bps, analytic.outage_fraction, 0.0, 0.0});
    rows.push_back({"analytic_saturation_term", 0.0, analytic.saturation_outage_fraction, 0.0, 0.0});
    rows.push_back({"montecarlo", sim.mean_rate_bps, sim.mean_outage_fraction, sim.stderr_rate_bps, sim.stderr_outage});
    // Difference row: MC minus analytic in the value columns, the tolerances
    // applied in the stderr columns.
    rows.push_back({agree.pass() ? "agreement=pass" : "agreement=fail", agree.rate_diff, agree.outage_diff,
                    agree.rate_tol, agree.outage_tol});
    csv::write_mc(out, rows);

    log << "mc samples=" << sim.n_samples << " rejected=" << sim.rejected << " dt=" << mc.dt_s
        << " seed=" << mc.seed << '\n';
    log << "rate: analytic=" << csv::format_number(analytic.total_rate_bps)
        << " mc=" << csv::format_number(sim.mean_rate_bps) << " diff=" << csv::format_number(agree.rate_diff)
        << " tol=" << csv::format_number(agree.rate_tol) << (agree.rate_ok ? " ok" : " FAIL") << '\n';
    log << "outage: analytic=" << csv::format_number(analytic.outage_fraction)
        << " (saturation terms " << csv::format_number(analytic.saturation_outage_fraction) << ")"
        << " mc=" << csv::format_number(sim.mean_outage_fraction) << " diff=" << csv::format_number(agree.outage_diff)
        << " tol=" << csv::format_number(agree.outage_tol) << (agree.outage_ok ? " ok" : " FAIL") << '\n';
    return agree.pass() ? kExitOk : kExitMcDisagreement;
}

} // namespace beamsw
