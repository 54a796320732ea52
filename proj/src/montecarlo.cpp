// SPDX-License-Identifier: Apache-2.0
//
// beamsw: beam-switching design and analysis for mm-wave V2I roadside units

#include "beamsw/montecarlo.hpp"

#include "beamsw/errors.hpp"
#include "beamsw/kernels.hpp"
#include "beamsw/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <thread>

namespace beamsw {

namespace {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

struct Moments {
    double mean = 0.0;
    double stderr_ = 0.0;
};

Moments moments(const std::vector<double>& xs)
{
    Moments m;
    const auto n = static_cast<double>(xs.size());
    double sum = 0.0;
    for (double x : xs) {
        sum += x;
    }
    m.mean = sum / n;
    if (xs.size() > 1) {
        double ss = 0.0;
        for (double x : xs) {
            ss += (x - m.mean) * (x - m.mean);
        }
        m.stderr_ = std::sqrt(ss / (n - 1.0) / n);
    }
    return m;
}

} // namespace

void McConfig::validate() const
{
    if (n_samples < 1) {
        throw ConfigError("mc.n_samples must be >= 1");
    }
    if (!(dt_s > 0.0) || !std::isfinite(dt_s)) {
        throw ConfigError("mc.dt_s must be positive");
    }
}

TraceReplayer::TraceReplayer(const BeamPlan& plan, const LinkBudget& lb, const ScenarioParams& params, double dt_s)
    : plan_(&plan), params_(params), dt_(dt_s)
{
    if (!(dt_s > 0.0)) {
        throw ConfigError("mc.dt_s must be positive");
    }
    const double v = params.speed_mps;
    for (std::size_t i = 1; i <= plan.size(); ++i) {
        const double dwell = (plan.beam(i).switch_m - plan.switch_before(i)) / v;
        if (dt_s > dwell) {
            throw ConfigError("mc.dt_s = " + std::to_string(dt_s) + " s exceeds the " + std::to_string(dwell) +
                              " s dwell time of beam " + std::to_string(i) + " (undersampled schedule)");
        }
    }
    steps_ = static_cast<std::int64_t>(std::ceil(params.traversal_time() / dt_s - 1e-9));

    windows_.resize(plan.size());
    std::vector<double> t;
    for (std::size_t i = 0; i < plan.size(); ++i) {
        const BeamSector& b = plan.sectors[i];
        Window& w = windows_[i];
        w.first = first_step_at_or_after(b.begin_m / v);
        while (w.first > 0 && v * ((static_cast<double>(w.first - 1) + 0.5) * dt_) >= b.begin_m) {
            --w.first;
        }
        while (w.first < steps_ && v * ((static_cast<double>(w.first) + 0.5) * dt_) < b.begin_m) {
            ++w.first;
        }
        w.last = w.first;
        {
            // one past the last step whose position is <= end
            std::int64_t k = std::clamp<std::int64_t>(
                static_cast<std::int64_t>(std::floor(b.end_m / v / dt_ - 0.5)) + 1, w.first, steps_);
            while (k > w.first && v * ((static_cast<double>(k - 1) + 0.5) * dt_) > b.end_m) {
                --k;
            }
            while (k < steps_ && v * ((static_cast<double>(k) + 0.5) * dt_) <= b.end_m) {
                ++k;
            }
            w.last = k;
        }

        const auto len = static_cast<std::size_t>(w.last - w.first);
        t.resize(len);
        for (std::size_t j = 0; j < len; ++j) {
            t[j] = (static_cast<double>(w.first + static_cast<std::int64_t>(j)) + 0.5) * dt_;
        }
        std::vector<double> c(len);
        kernels::capacity_batch(kernels::make_capacity_args(b.width_rad, lb, params), t, c);
        w.prefix.assign(len + 1, 0.0);
        for (std::size_t j = 0; j < len; ++j) {
            w.prefix[j + 1] = w.prefix[j] + c[j] * dt_;
        }
    }
}

std::int64_t TraceReplayer::first_step_at_or_after(double t) const
{
    if (!std::isfinite(t)) {
        return steps_;
    }
    auto k = static_cast<std::int64_t>(std::ceil(t / dt_ - 0.5));
    k = std::clamp<std::int64_t>(k, 0, steps_);
    while (k > 0 && (static_cast<double>(k - 1) + 0.5) * dt_ >= t) {
        --k;
    }
    while (k < steps_ && (static_cast<double>(k) + 0.5) * dt_ < t) {
        ++k;
    }
    return k;
}

SampleTrace TraceReplayer::replay(double v_e) const
{
    const double v_est = params_.speed_mps + v_e;
    const std::size_t n = plan_->size();
    double data = 0.0;
    std::int64_t covered = 0;
    std::int64_t active_lo = 0;   // step where beam i becomes active
    for (std::size_t i = 1; i <= n; ++i) {
        const std::int64_t active_hi =
            i == n ? steps_ : first_step_at_or_after(plan_->beam(i).switch_m / v_est);
        const Window& w = windows_[i - 1];
        const std::int64_t lo = std::max(active_lo, w.first);
        const std::int64_t hi = std::min(active_hi, w.last);
        if (hi > lo) {
            data += w.prefix[static_cast<std::size_t>(hi - w.first)] - w.prefix[static_cast<std::size_t>(lo - w.first)];
            covered += hi - lo;
        }
        active_lo = std::max(active_lo, active_hi);
    }
    SampleTrace s;
    s.data_bits = data;
    s.covered_s = static_cast<double>(covered) * dt_;
    s.outage_s = static_cast<double>(steps_ - covered) * dt_;
    return s;
}

int TraceReplayer::active_beam(double v_e, std::int64_t step) const
{
    const double v_est = params_.speed_mps + v_e;
    const std::size_t n = plan_->size();
    for (std::size_t i = 1; i < n; ++i) {
        if (step < first_step_at_or_after(plan_->beam(i).switch_m / v_est)) {
            return static_cast<int>(i);
        }
    }
    return static_cast<int>(n);
}

double draw_speed_error(std::uint64_t seed, std::uint64_t index, double sigma, double speed,
                        std::uint64_t* rejected)
{
    if (sigma == 0.0) {
        return 0.0;
    }
    std::mt19937_64 eng(splitmix64(seed ^ splitmix64(index)));
    std::normal_distribution<double> dist(0.0, sigma);
    for (;;) {
        const double v_e = dist(eng);
        if (v_e > -kReverseGuard * speed) {
            return v_e;
        }
        if (rejected != nullptr) {
            ++*rejected;
        }
    }
}

McResult simulate(const BeamPlan& plan, const LinkBudget& lb, const ScenarioParams& params, const McConfig& mc,
                  unsigned jobs)
{
    mc.validate();
    const TraceReplayer replayer(plan, lb, params, mc.dt_s);
    const std::size_t n = mc.n_samples;
    const double traversal = params.traversal_time();

    std::vector<double> rate(n);
    std::vector<double> outage(n);
    std::vector<std::uint64_t> rejected(n, 0);

    auto run_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            const double v_e = draw_speed_error(mc.seed, k, params.sigma_v_mps, params.speed_mps, &rejected[k]);
            const SampleTrace s = replayer.replay(v_e);
            rate[k] = s.data_bits / traversal;
            outage[k] = s.outage_s / traversal;
        }
    };

    const unsigned n_workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<std::size_t>(
                                                                          n, std::numeric_limits<unsigned>::max()))));
    if (n_workers == 1) {
        run_range(0, n);
    } else {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (n + n_workers - 1) / n_workers;
        for (unsigned w = 0; w < n_workers; ++w) {
            const std::size_t b = std::min(n, w * chunk);
            const std::size_t e = std::min(n, b + chunk);
            pool.emplace_back(run_range, b, e);
        }
    }

    McResult r;
    const Moments mr = moments(rate);
    const Moments mo = moments(outage);
    r.mean_rate_bps = mr.mean;
    r.stderr_rate_bps = mr.stderr_;
    r.mean_outage_fraction = mo.mean;
    r.stderr_outage = mo.stderr_;
    r.n_samples = n;
    for (std::uint64_t c : rejected) {
        r.rejected += c;
    }
    return r;
}

} // namespace beamsw
