// SPDX-License-Identifier: Apache-2.0
//
// beamsw: beam-switching design and analysis for mm-wave V2I roadside units

#include "beamsw/metrics.hpp"

#include "beamsw/errors.hpp"
#include "beamsw/gaussian.hpp"
#include "beamsw/kernels.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace beamsw {

namespace {

// Outage integrands are in seconds; abs_tol is specified for bit/s integrands.
constexpr double kOutageAbsTol = 1e-12;

void check_index(std::size_t i, const BeamPlan& plan)
{
    if (i < 1 || i > plan.size()) {
        throw DomainError("beam index " + std::to_string(i) + " outside 1.." + std::to_string(plan.size()));
    }
}

QuadratureConfig inner_config(const QuadratureConfig& q)
{
    QuadratureConfig inner = q;
    inner.rel_tol = std::max(q.rel_tol * 1e-2, 1e-13);
    return inner;
}

double time_integral(const kernels::CapacityArgs& args, double t0, double t1, const QuadratureConfig& q)
{
    auto eval = [&args](std::span<const double> t, std::span<double> c) { kernels::capacity_batch(args, t, c); };
    return integrate_batch(eval, t0, t1, q);
}

// Integrates f over [lo, hi], split at the given interior breakpoints.
template <class Fn, std::size_t K>
double integrate_pieces(Fn&& f, double lo, double hi, std::array<double, K> cuts, const QuadratureConfig& q)
{
    if (!(hi > lo)) {
        return 0.0;
    }
    std::sort(cuts.begin(), cuts.end());
    double total = 0.0;
    double a = lo;
    for (double c : cuts) {
        if (c > a && c < hi) {
            total += integrate(f, a, c, q);
            a = c;
        }
    }
    return total + integrate(f, a, hi, q);
}

double lower_error_limit(double sigma, double v)
{
    return std::max(-kSigmaSpan * sigma, -kReverseGuard * v);
}

} // namespace

double data_given_error(std::size_t i, double v_e, const MetricContext& ctx)
{
    check_index(i, ctx.plan);
    const double v = ctx.params.speed_mps;
    const double v_est = v + v_e;
    if (!(v_est > 0.0)) {
        throw DomainError("data_given_error: v + v_e must be positive (v_e = " + std::to_string(v_e) + ")");
    }
    const BeamSector& b = ctx.plan.beam(i);
    const double prev = ctx.plan.switch_before(i);
    const bool last = i == ctx.plan.size();

    double t0 = 0.0;
    double t1 = 0.0;
    if (v_e >= 0.0) {
        t0 = std::max(b.begin_m / v, prev / v_est);
        t1 = last ? ctx.params.traversal_time() : b.switch_m / v_est;
    } else {
        t0 = prev / v_est;
        t1 = std::min(b.end_m / v, b.switch_m / v_est);
    }
    if (!(t1 > t0)) {
        return 0.0;
    }
    return time_integral(kernels::make_capacity_args(b.width_rad, ctx.lb, ctx.params), t0, t1,
                         inner_config(ctx.quad));
}

double avg_rate(std::size_t i, const MetricContext& ctx)
{
    check_index(i, ctx.plan);
    const double v = ctx.params.speed_mps;
    const double dl = ctx.params.covered_length_m;
    const double sigma = ctx.params.sigma_v_mps;
    if (sigma == 0.0) {
        return v / dl * data_given_error(i, 0.0, ctx);
    }

    const BeamSector& b = ctx.plan.beam(i);
    const double prev = ctx.plan.switch_before(i);
    const bool first = i == 1;
    const bool last = i == ctx.plan.size();

    // Beyond these speed errors the beam never serves the vehicle.
    double upper = kSigmaSpan * sigma;
    if (!last && b.begin_m > 0.0) {
        upper = std::min(upper, v * (b.switch_m - b.begin_m) / b.begin_m);
    }
    const double lower = std::max(lower_error_limit(sigma, v), v * (prev - b.end_m) / b.end_m);

    // Kinks of D_i(v_e): where the max/min in the time limits change branch.
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const std::array<double, 2> pos_cut{(!first && b.begin_m > 0.0) ? v * (prev - b.begin_m) / b.begin_m : nan, nan};
    const std::array<double, 2> neg_cut{v * (b.switch_m - b.end_m) / b.end_m, nan};

    auto integrand = [&](double v_e) {
        return (v + v_e) / dl * data_given_error(i, v_e, ctx) * gaussian_pdf(v_e, sigma);
    };
    try {
        return integrate_pieces(integrand, 0.0, upper, pos_cut, ctx.quad) +
               integrate_pieces(integrand, lower, 0.0, neg_cut, ctx.quad);
    } catch (const NumericalFailure& e) {
        throw NumericalFailure(std::string(e.what()) + " (rate of beam " + std::to_string(i) + ")", i);
    }
}

OutageTerms outage_terms(std::size_t i, const MetricContext& ctx)
{
    check_index(i, ctx.plan);
    OutageTerms out;
    const double sigma = ctx.params.sigma_v_mps;
    if (sigma == 0.0) {
        return out;
    }
    const double v = ctx.params.speed_mps;
    const BeamSector& b = ctx.plan.beam(i);
    const double prev = ctx.plan.switch_before(i);
    const bool first = i == 1;
    const bool last = i == ctx.plan.size();

    QuadratureConfig q = ctx.quad;
    q.abs_tol = kOutageAbsTol;
    const std::array<double, 1> no_cuts{std::numeric_limits<double>::quiet_NaN()};

    try {
        // Early hand-over (v_e >= 0): beam i+1 switched on before the vehicle
        // reaches its coverage.
        if (!last) {
            const double next_begin = ctx.plan.beam(i + 1).begin_m;
            const double skip = b.begin_m > 0.0 ? v * (b.switch_m - b.begin_m) / b.begin_m
                                                : std::numeric_limits<double>::infinity();
            out.saturated_s += (next_begin - b.begin_m) / v * q_function(skip / sigma);

            const double lo = v * (b.switch_m - next_begin) / next_begin;
            const double hi = std::min(skip, kSigmaSpan * sigma);
            auto early = [&](double v_e) {
                return (next_begin / v - b.switch_m / (v + v_e)) * gaussian_pdf(v_e, sigma);
            };
            out.partial_s += integrate_pieces(early, lo, hi, no_cuts, q);
        }

        // Late hand-over (v_e < 0): beam i kept on after the vehicle left it.
        if (!first) {
            const double prev_end = ctx.plan.beam(i - 1).end_m;
            out.saturated_s += (b.end_m - prev_end) / v * q_function(v * (b.end_m - prev) / (b.end_m * sigma));
        }
        if (!last) {
            const double lo = std::max(lower_error_limit(sigma, v), v * (prev - b.end_m) / b.end_m);
            const double hi = v * (b.switch_m - b.end_m) / b.end_m;
            auto late = [&](double v_e) {
                return (b.switch_m / (v + v_e) - b.end_m / v) * gaussian_pdf(v_e, sigma);
            };
            out.partial_s += integrate_pieces(late, lo, hi, no_cuts, q);
        }
    } catch (const NumericalFailure& e) {
        throw NumericalFailure(std::string(e.what()) + " (outage of beam " + std::to_string(i) + ")", i);
    }
    return out;
}

double outage_time(std::size_t i, const MetricContext& ctx) { return outage_terms(i, ctx).total(); }

PerformanceResult evaluate(const BeamPlan& plan, const LinkBudget& lb, const ScenarioParams& params,
                           const QuadratureConfig& quad)
{
    quad.validate();
    const MetricContext ctx{plan, lb, params, quad};
    PerformanceResult r;
    r.spec = plan.spec;
    r.sigma_v_mps = params.sigma_v_mps;
    r.per_beam.reserve(plan.size());
    double outage_s = 0.0;
    double saturated_s = 0.0;
    for (std::size_t i = 1; i <= plan.size(); ++i) {
        BeamPerformance bp;
        bp.index = static_cast<int>(i);
        bp.rate_bps = avg_rate(i, ctx);
        const OutageTerms terms = outage_terms(i, ctx);
        bp.outage_s = terms.total();
        r.total_rate_bps += bp.rate_bps;
        outage_s += bp.outage_s;
        saturated_s += terms.saturated_s;
        r.per_beam.push_back(bp);
    }
    r.outage_fraction = outage_s / params.traversal_time();
    r.saturation_outage_fraction = saturated_s / params.traversal_time();
    return r;
}

void QuadratureConfig::validate() const
{
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
        throw ConfigError("quad.rel_tol and quad.abs_tol must be positive");
    }
    if (max_depth < 1) {
        throw ConfigError("quad.max_depth must be >= 1");
    }
}

} // namespace beamsw
