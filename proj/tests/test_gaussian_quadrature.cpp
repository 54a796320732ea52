// SPDX-License-Identifier: Apache-2.0

#include "beamsw/errors.hpp"
#include "beamsw/gaussian.hpp"
#include "beamsw/quadrature.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

using namespace beamsw;

TEST_CASE("gaussian_pdf")
{
    CHECK(gaussian_pdf(0.0, 1.0) == doctest::Approx(0.398942280401432678).epsilon(1e-15));
    CHECK(gaussian_pdf(0.0, 2.0) == doctest::Approx(0.5 * 0.398942280401432678).epsilon(1e-15));
    CHECK(gaussian_pdf(1.0, 1.0) == doctest::Approx(0.241970724519143365).epsilon(1e-14));
    for (double x : {0.1, 0.7, 2.5, 5.0}) {
        CHECK(gaussian_pdf(x, 0.8) == gaussian_pdf(-x, 0.8));
    }
    CHECK_THROWS_AS(gaussian_pdf(0.0, 0.0), DomainError);
    CHECK_THROWS_AS(gaussian_pdf(0.0, -1.0), DomainError);
}

TEST_CASE("gaussian_pdf integrates to the truncated mass")
{
    const double sigma = 0.5;
    const QuadratureConfig q{1e-12, 1e-15, 40};
    const double mass = integrate([&](double x) { return gaussian_pdf(x, sigma); }, -6 * sigma, 6 * sigma, q);
    CHECK(mass == doctest::Approx(std::erf(6.0 / std::numbers::sqrt2)).epsilon(1e-12));
}

TEST_CASE("q_function")
{
    CHECK(q_function(0.0) == 0.5);
    CHECK(q_function(1.6448536269514722) == doctest::Approx(0.05).epsilon(1e-12));
    CHECK(q_function(3.0) == doctest::Approx(1.34989803163009452e-3).epsilon(1e-12));
    CHECK(q_function(10.0) == doctest::Approx(7.61985302416046e-24).epsilon(1e-10));
    for (double x : {0.2, 1.0, 2.3, 4.4}) {
        CHECK(q_function(x) + q_function(-x) == doctest::Approx(1.0).epsilon(1e-15));
    }
    CHECK(q_function(std::numeric_limits<double>::infinity()) == 0.0);
}

TEST_CASE("adaptive Gauss-Kronrod on known integrals")
{
    const QuadratureConfig q{1e-12, 1e-14, 40};
    CHECK(integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, q) ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(integrate([](double x) { return std::exp(-x); }, 0.0, 30.0, q) ==
          doctest::Approx(1.0 - std::exp(-30.0)).epsilon(1e-12));
    CHECK(integrate([](double x) { return 1.0 / (1.0 + x * x); }, -50.0, 50.0, q) ==
          doctest::Approx(2.0 * std::atan(50.0)).epsilon(1e-12));
    // needs bisection: a sharp peak well inside the interval
    CHECK(integrate([](double x) { return 1e-3 / (1e-6 + (x - 0.3) * (x - 0.3)); }, 0.0, 1.0, q) ==
          doctest::Approx(std::atan(700.0) + std::atan(300.0)).epsilon(1e-10));
    // a kink
    CHECK(integrate([](double x) { return std::abs(x - 0.37); }, 0.0, 1.0, q) ==
          doctest::Approx(0.5 * (0.37 * 0.37 + 0.63 * 0.63)).epsilon(1e-10));
}

TEST_CASE("high-degree polynomials integrate to machine precision")
{
    const QuadratureConfig q{1e-14, 1e-300, 40};
    auto p = [](double x) { return 3.0 * std::pow(x, 20) - 2.0 * std::pow(x, 7) + 1.0; };
    CHECK(integrate(p, -1.0, 1.0, q) == doctest::Approx(6.0 / 21.0 + 2.0).epsilon(1e-14));
    // degree 13 is exact for the embedded Gauss rule, so one panel suffices
    const QuadratureConfig one_panel{1e-12, 1e-300, 0};
    auto p13 = [](double x) { return std::pow(x, 13) + 5.0 * std::pow(x, 12); };
    CHECK(integrate(p13, -1.0, 1.0, one_panel) == doctest::Approx(10.0 / 13.0).epsilon(1e-14));
}

TEST_CASE("empty and reversed intervals integrate to zero")
{
    const QuadratureConfig q{};
    CHECK(integrate([](double) { return 1.0; }, 2.0, 2.0, q) == 0.0);
    CHECK(integrate([](double) { return 1.0; }, 3.0, 2.0, q) == 0.0);
}

TEST_CASE("exceeding max_depth throws NumericalFailure")
{
    const QuadratureConfig q{1e-14, 1e-300, 3};
    CHECK_THROWS_AS(integrate([](double x) { return std::sqrt(std::abs(x - 0.123456)); }, 0.0, 1.0, q),
                    NumericalFailure);
}

TEST_CASE("QuadratureConfig validation")
{
    CHECK_NOTHROW(QuadratureConfig{}.validate());
    CHECK_THROWS_AS((QuadratureConfig{0.0, 1e-3, 40}.validate()), ConfigError);
    CHECK_THROWS_AS((QuadratureConfig{1e-6, -1.0, 40}.validate()), ConfigError);
    CHECK_THROWS_AS((QuadratureConfig{1e-6, 1e-3, 0}.validate()), ConfigError);
}
