// SPDX-License-Identifier: Apache-2.0
//
// beamsw: beam-switching design and analysis for mm-wave V2I roadside units

#include "beamsw/bde.hpp"

#include "beamsw/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace beamsw {

void SweepGrid::validate() const
{
    if (n_beams.empty() || overlaps.empty() || strategies.empty()) {
        throw ConfigError("sweep grid axes must be non-empty");
    }
    for (int n : n_beams) {
        DesignSpec{Strategy::EqualCoverage, n, 0.0}.validate();
    }
    for (double o : overlaps) {
        DesignSpec{Strategy::EqualCoverage, 1, o}.validate();
    }
}

std::vector<DesignSpec> SweepGrid::points() const
{
    std::vector<DesignSpec> pts;
    pts.reserve(size());
    for (Strategy s : strategies) {
        for (int n : n_beams) {
            for (double o : overlaps) {
                pts.push_back(DesignSpec{s, n, o});
            }
        }
    }
    return pts;
}

SweepGrid SweepGrid::defaults()
{
    SweepGrid g;
    for (int n = 1; n <= 60; ++n) {
        g.n_beams.push_back(n);
    }
    g.overlaps = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5};
    g.strategies = {Strategy::EqualBeam, Strategy::EqualCoverage};
    return g;
}

std::vector<PerformanceResult> run_sweep(const SweepGrid& grid, const ScenarioParams& params,
                                         const QuadratureConfig& quad, unsigned jobs)
{
    grid.validate();
    const LinkBudget lb = derive(params);
    const std::vector<DesignSpec> pts = grid.points();
    std::vector<PerformanceResult> results(pts.size());

    std::atomic<std::size_t> next{0};
    std::mutex err_mutex;
    std::exception_ptr first_error;
    std::size_t first_error_at = pts.size();

    auto worker = [&] {
        for (std::size_t k = next++; k < pts.size(); k = next++) {
            try {
                results[k] = evaluate(build_plan(pts[k], params), lb, params, quad);
            } catch (const NumericalFailure& e) {
                std::ostringstream msg;
                msg << "sweep point strategy=" << to_string(pts[k].strategy) << " n_beams=" << pts[k].n_beams
                    << " overlap=" << pts[k].overlap << ": " << e.what();
                std::lock_guard lock(err_mutex);
                if (k < first_error_at) {
                    first_error_at = k;
                    first_error = std::make_exception_ptr(NumericalFailure(msg.str(), e.beam()));
                }
            } catch (...) {
                std::lock_guard lock(err_mutex);
                if (k < first_error_at) {
                    first_error_at = k;
                    first_error = std::current_exception();
                }
            }
        }
    };

    const unsigned n_workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(pts.size())));
    if (n_workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < n_workers; ++w) {
            pool.emplace_back(worker);
        }
    }
    if (first_error) {
        std::rethrow_exception(first_error);
    }
    return results;
}

BdeWeights calibrate(const std::vector<PerformanceResult>& results)
{
    if (results.size() < 2) {
        throw CalibrationError("BDE calibration needs at least two results");
    }
    BdeWeights w;
    w.max_rate = w.min_rate = results.front().total_rate_bps;
    w.max_out = w.min_out = results.front().outage_fraction;
    for (const auto& r : results) {
        w.max_rate = std::max(w.max_rate, r.total_rate_bps);
        w.min_rate = std::min(w.min_rate, r.total_rate_bps);
        w.max_out = std::max(w.max_out, r.outage_fraction);
        w.min_out = std::min(w.min_out, r.outage_fraction);
    }
    // [max_rate -min_out] [alpha]   [1]
    // [min_rate -max_out] [beta ] = [0]
    const double det = w.min_rate * w.min_out - w.max_rate * w.max_out;
    if (det == 0.0 || !std::isfinite(det)) {
        std::ostringstream msg;
        msg << "singular BDE calibration: max_rate=" << w.max_rate << " min_rate=" << w.min_rate
            << " max_outage=" << w.max_out << " min_outage=" << w.min_out;
        throw CalibrationError(msg.str());
    }
    w.alpha = -w.max_out / det;
    w.beta = -w.min_rate / det;
    return w;
}

double efficiency(const PerformanceResult& result, const BdeWeights& w)
{
    return w.alpha * result.total_rate_bps - w.beta * result.outage_fraction;
}

BdeSurface bde_surface(const std::vector<PerformanceResult>& results)
{
    BdeSurface surface;
    surface.weights = calibrate(results);
    surface.entries.reserve(results.size());
    for (const auto& r : results) {
        surface.entries.push_back(BdeEntry{r.spec.strategy, r.spec.n_beams, r.spec.overlap, r.total_rate_bps,
                                           r.outage_fraction, efficiency(r, surface.weights)});
    }
    return surface;
}

} // namespace beamsw
