// SPDX-License-Identifier: Apache-2.0

#include "beamsw/bde.hpp"
#include "beamsw/errors.hpp"

#include <doctest.h>

#include <algorithm>

using namespace beamsw;

namespace {

PerformanceResult point(double rate, double outage, int n = 1)
{
    PerformanceResult r;
    r.total_rate_bps = rate;
    r.outage_fraction = outage;
    r.spec.n_beams = n;
    return r;
}

ScenarioParams with_sigma(double rel)
{
    ScenarioParams p{};
    p.sigma_v_mps = rel * p.speed_mps;
    return p;
}

} // namespace

TEST_CASE("calibration solves the two anchor equations")
{
    const std::vector<PerformanceResult> rs = {point(10, 0.2), point(4, 0.05), point(7, 0.0), point(6, 0.1)};
    const BdeWeights w = calibrate(rs);
    CHECK(w.max_rate == 10);
    CHECK(w.min_rate == 4);
    CHECK(w.max_out == 0.2);
    CHECK(w.min_out == 0.0);
    CHECK(w.alpha == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(w.beta == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(w.alpha * w.max_rate - w.beta * w.min_out == doctest::Approx(1.0));
    CHECK(w.alpha * w.min_rate - w.beta * w.max_out == doctest::Approx(0.0));
}

TEST_CASE("calibration with non-zero minimum outage")
{
    const std::vector<PerformanceResult> rs = {point(9e9, 0.3), point(2e9, 0.02)};
    const BdeWeights w = calibrate(rs);
    CHECK(w.alpha * 9e9 - w.beta * 0.02 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(w.alpha * 2e9 - w.beta * 0.3 == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
}

TEST_CASE("zero minimum outage makes alpha the inverse peak rate")
{
    const std::vector<PerformanceResult> rs = {point(8e9, 0.4), point(3e9, 0.0)};
    CHECK(calibrate(rs).alpha == doctest::Approx(1.0 / 8e9).epsilon(1e-14));
}

TEST_CASE("degenerate calibrations are rejected")
{
    CHECK_THROWS_AS(calibrate({point(5, 0.0), point(7, 0.0)}), CalibrationError);
    CHECK_THROWS_AS(calibrate({point(5, 0.1)}), CalibrationError);
    CHECK_THROWS_AS(calibrate({}), CalibrationError);
}

TEST_CASE("efficiency is one and zero at the anchors, in [0,1] between")
{
    std::vector<PerformanceResult> rs;
    for (int k = 0; k < 40; ++k) {
        rs.push_back(point(1e9 + 2e8 * ((k * 7) % 13), 0.01 * ((k * 5) % 11), k));
    }
    const BdeWeights w = calibrate(rs);
    for (const auto& r : rs) {
        const double e = efficiency(r, w);
        CHECK(e >= -1e-12);
        CHECK(e <= 1.0 + 1e-12);
    }
    CHECK(efficiency(point(w.max_rate, w.min_out), w) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(efficiency(point(w.min_rate, w.max_out), w) == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
}

TEST_CASE("BDE is invariant under rescaling the rate unit")
{
    std::vector<PerformanceResult> a = {point(10, 0.2), point(4, 0.05), point(7, 0.0), point(6, 0.1)};
    std::vector<PerformanceResult> b = a;
    for (auto& r : b) {
        r.total_rate_bps *= 1e9;
    }
    const BdeSurface sa = bde_surface(a);
    const BdeSurface sb = bde_surface(b);
    REQUIRE(sa.entries.size() == sb.entries.size());
    for (std::size_t k = 0; k < sa.entries.size(); ++k) {
        CHECK(sa.entries[k].bde == doctest::Approx(sb.entries[k].bde).epsilon(1e-12));
    }
}

TEST_CASE("sweep grid")
{
    const SweepGrid d = SweepGrid::defaults();
    CHECK(d.size() == 720);
    CHECK(d.points().front().strategy == Strategy::EqualBeam);
    CHECK(d.points().front().n_beams == 1);
    CHECK(d.points()[1].overlap == doctest::Approx(0.1));
    CHECK(d.points()[6].n_beams == 2);
    CHECK(d.points().back().strategy == Strategy::EqualCoverage);
    CHECK(d.points().back().n_beams == 60);
    CHECK(d.points().back().overlap == doctest::Approx(0.5));

    SweepGrid bad = d;
    bad.overlaps.push_back(0.6);
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = d;
    bad.n_beams.clear();
    CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("run_sweep is ordered and independent of the job count")
{
    SweepGrid g;
    g.n_beams = {1, 4, 9, 16};
    g.overlaps = {0.0, 0.3};
    g.strategies = {Strategy::EqualBeam, Strategy::EqualCoverage};
    const ScenarioParams p = with_sigma(0.04);
    const auto one = run_sweep(g, p, {}, 1);
    const auto four = run_sweep(g, p, {}, 4);
    const auto again = run_sweep(g, p, {}, 1);
    REQUIRE(one.size() == g.size());
    REQUIRE(four.size() == g.size());
    const auto pts = g.points();
    for (std::size_t k = 0; k < pts.size(); ++k) {
        CHECK(one[k].spec.strategy == pts[k].strategy);
        CHECK(one[k].spec.n_beams == pts[k].n_beams);
        CHECK(one[k].spec.overlap == pts[k].overlap);
        CHECK(one[k].total_rate_bps == four[k].total_rate_bps);
        CHECK(one[k].outage_fraction == four[k].outage_fraction);
        CHECK(one[k].total_rate_bps == again[k].total_rate_bps);
    }
    const BdeSurface s = bde_surface(one);
    for (const auto& e : s.entries) {
        CHECK(e.bde >= 0.0);
        CHECK(e.bde <= 1.0);
    }
}

TEST_CASE("run_sweep reports the failing grid point")
{
    SweepGrid g;
    g.n_beams = {3};
    g.overlaps = {0.2};
    g.strategies = {Strategy::EqualCoverage};
    try {
        (void)run_sweep(g, with_sigma(0.04), QuadratureConfig{1e-15, 1e-300, 1}, 2);
        FAIL("expected NumericalFailure");
    } catch (const NumericalFailure& e) {
        const std::string msg = e.what();
        CHECK(msg.find("equal_coverage") != std::string::npos);
        CHECK(msg.find("n_beams=3") != std::string::npos);
        CHECK(e.beam() >= 1);
    }
}
