// SPDX-License-Identifier: Apache-2.0

#include "beamsw/errors.hpp"
#include "beamsw/geometry.hpp"
#include "beamsw/link_budget.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

using namespace beamsw;

namespace {

const ScenarioParams kRef{};

} // namespace

TEST_CASE("derive: reference scenario constants")
{
    const LinkBudget lb = derive(kRef);
    CHECK(lb.d_el == doctest::Approx(6.26498204307083389).epsilon(1e-12));
    CHECK(lb.theta_el == doctest::Approx(0.555178576120604579).epsilon(1e-12));
    CHECK(linear_to_db(lb.noise_mw) == doctest::Approx(-74.6554624884906910).epsilon(1e-12));
    CHECK(lb.noise_mw == doctest::Approx(3.42336929571600513e-8).epsilon(1e-10));
    CHECK(linear_to_db(lb.path_gain) == doctest::Approx(-58.0108082295562465).epsilon(1e-12));
    CHECK(lb.path_gain == doctest::Approx(1.58095379365095846e-6).epsilon(1e-10));
    CHECK(lb.wavelength_m == doctest::Approx(299792458.0 / 60e9));
    CHECK(lb.theta_el > 0.0);
    CHECK(lb.theta_el < std::numbers::pi / 2);
    CHECK(lb.d_el >= kRef.rsu_offset_m);
}

TEST_CASE("derive validates the scenario")
{
    ScenarioParams bad = kRef;
    bad.vehicle_height_m = 8.0;
    CHECK_THROWS_AS(derive(bad), ConfigError);
    bad = kRef;
    bad.bandwidth_hz = 0.0;
    CHECK_THROWS_AS(derive(bad), ConfigError);
    bad = kRef;
    bad.sigma_v_mps = -1.0;
    CHECK_THROWS_AS(derive(bad), ConfigError);
}

TEST_CASE("rx_gain")
{
    const LinkBudget lb = derive(kRef);
    const double unity = std::numbers::pi * std::numbers::pi / lb.theta_el;
    CHECK(rx_gain(unity, lb) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(rx_gain(0.3021868, lb) == doctest::Approx(58.8290123005578431).epsilon(1e-12));
    CHECK(rx_gain(0.15, lb) == doctest::Approx(2.0 * rx_gain(0.3, lb)).epsilon(1e-14));
    CHECK_THROWS_AS(rx_gain(0.0, lb), DomainError);
    CHECK_THROWS_AS(rx_gain(-0.1, lb), DomainError);
}

TEST_CASE("rx_power, snr and capacity at closest approach")
{
    const LinkBudget lb = derive(kRef);
    const double theta = std::atan(10.0 / 3.0);   // beam [50, 60] of the 10-beam equal-coverage plan
    CHECK(build_plan({Strategy::EqualCoverage, 10, 0.0}, kRef).beam(6).width_rad ==
          doctest::Approx(theta).epsilon(1e-14));
    CHECK(rx_power(2.0, theta, lb, kRef) == doctest::Approx(5.59707005336331353e-7).epsilon(1e-10));
    CHECK(snr(2.0, theta, lb, kRef) == doctest::Approx(16.3495947117580085).epsilon(1e-10));
    CHECK(capacity(2.0, theta, lb, kRef) == doctest::Approx(8892352922.22623070).epsilon(1e-10));
}

TEST_CASE("capacity: unit SNR gives the bandwidth, vanishing SNR gives zero")
{
    LinkBudget lb = derive(kRef);
    const double theta = 0.5;
    lb.noise_mw = rx_power(1.0, theta, lb, kRef);
    CHECK(capacity(1.0, theta, lb, kRef) == doctest::Approx(2.16e9).epsilon(1e-13));
    lb.noise_mw = 1e30;
    CHECK(capacity(1.0, theta, lb, kRef) < 1e-10);
}

TEST_CASE("rx_power symmetry, inverse-square law and monotonicity")
{
    const LinkBudget lb = derive(kRef);
    const double tt = kRef.traversal_time();
    for (double t : {0.0, 0.3, 1.1, 1.9}) {
        CHECK(rx_power(t, 0.4, lb, kRef) == doctest::Approx(rx_power(tt - t, 0.4, lb, kRef)).epsilon(1e-13));
    }
    // pick t with (v t - d_l/2)^2 + d_el^2 = 4 d_el^2
    const double t4 = (50.0 + std::sqrt(3.0) * lb.d_el) / 25.0;
    CHECK(rx_power(t4, 0.4, lb, kRef) == doctest::Approx(rx_power(2.0, 0.4, lb, kRef) / 4.0).epsilon(1e-12));

    double prev = rx_power(2.0, 0.4, lb, kRef);
    for (int k = 1; k <= 200; ++k) {
        const double t = 2.0 + 0.01 * k;
        const double p = rx_power(t, 0.4, lb, kRef);
        CHECK(p < prev);
        CHECK(capacity(t, 0.4, lb, kRef) > 0.0);
        prev = p;
    }
    CHECK(rx_power(1.0, 0.3, lb, kRef) > rx_power(1.0, 0.31, lb, kRef));
    CHECK(capacity(1.0, 0.3, lb, kRef) > capacity(1.0, 0.31, lb, kRef));
}

TEST_CASE("dB conversions round-trip")
{
    for (double db = -200.0; db <= 200.0; db += 3.7) {
        CHECK(linear_to_db(db_to_linear(db)) == doctest::Approx(db).epsilon(1e-12));
    }
    for (double lin : {1e-20, 3.3e-8, 1.0, 42.0, 7e15}) {
        CHECK(db_to_linear(linear_to_db(lin)) == doctest::Approx(lin).epsilon(1e-12));
    }
}

TEST_CASE("equal-coverage midpoint capacities stay near the plan mean")
{
    const LinkBudget lb = derive(kRef);
    const BeamPlan plan = build_plan({Strategy::EqualCoverage, 10, 0.0}, kRef);
    std::vector<double> c;
    double mean = 0.0;
    for (const auto& b : plan.sectors) {
        const double t_mid = 0.5 * (b.begin_m + b.end_m) / kRef.speed_mps;
        c.push_back(capacity(t_mid, b.width_rad, lb, kRef));
        mean += c.back() / static_cast<double>(plan.size());
    }
    for (double ci : c) {
        CHECK(ci >= 0.7 * mean);
        CHECK(ci <= 1.3 * mean);
    }
}
