// SPDX-License-Identifier: Apache-2.0
//
// Scalar reference vs. runtime-selected SIMD kernels.

#include "beamsw/kernels.hpp"
#include "beamsw/link_budget.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

using namespace beamsw;
using namespace beamsw::kernels;

namespace {

struct IsaGuard {
    Isa saved = active_isa();
    ~IsaGuard() { select_isa(saved); }
};

std::vector<double> time_grid(std::size_t n, double t0, double t1)
{
    std::vector<double> t(n);
    for (std::size_t k = 0; k < n; ++k) {
        t[k] = t0 + (t1 - t0) * (static_cast<double>(k) + 0.5) / static_cast<double>(n);
    }
    return t;
}

} // namespace

TEST_CASE("scalar kernel matches the link-budget capacity")
{
    const ScenarioParams p{};
    const LinkBudget lb = derive(p);
    const auto args = make_capacity_args(0.37, lb, p);
    const auto t = time_grid(101, 0.0, 4.0);
    std::vector<double> c(t.size());
    scalar::capacity_batch(args, t, c);
    for (std::size_t k = 0; k < t.size(); ++k) {
        CHECK(c[k] == doctest::Approx(capacity(t[k], 0.37, lb, p)).epsilon(1e-14));
    }
}

TEST_CASE("SIMD kernels agree with the scalar reference")
{
    if (!avx2::available()) {
        MESSAGE("AVX2 not available on this CPU; equivalence test skipped");
        return;
    }
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> theta(1e-3, 3.0);
    std::uniform_real_distribution<double> expo(1.6, 4.0);

    for (int trial = 0; trial < 60; ++trial) {
        ScenarioParams p{};
        if (trial % 3 == 1) {
            p.pathloss_exp = expo(rng);   // exercises the exp/log path
        }
        if (trial % 3 == 2) {
            p.eirp_dbm = -40.0;   // low SNR, log near 1
        }
        const LinkBudget lb = derive(p);
        const auto args = make_capacity_args(theta(rng), lb, p);
        // odd length to cover the masked tail
        const auto t = time_grid(37 + static_cast<std::size_t>(trial), -0.5, 4.5);
        std::vector<double> ref(t.size());
        std::vector<double> simd(t.size());
        scalar::capacity_batch(args, t, ref);
        avx2::capacity_batch(args, t, simd);
        for (std::size_t k = 0; k < t.size(); ++k) {
            CHECK(simd[k] == doctest::Approx(ref[k]).epsilon(1e-13));
        }
        std::vector<double> w(t.size());
        for (std::size_t k = 0; k < t.size(); ++k) {
            w[k] = 1.0 + 0.01 * static_cast<double>(k);
        }
        CHECK(avx2::capacity_dot(args, t, w) == doctest::Approx(scalar::capacity_dot(args, t, w)).epsilon(1e-13));
    }
}

TEST_CASE("SIMD log and exp hold up across magnitudes")
{
    if (!avx2::available()) {
        return;
    }
    // capacity = B log2(1 + snr_scale / r^(2h)); sweep snr over many decades.
    CapacityArgs a;
    a.speed = 1.0;
    a.centre_m = 0.0;
    a.d_el_sq = 1.0;
    a.bandwidth = 1.0;
    for (double h : {1.0, 1.37, 2.0}) {
        a.half_exponent = h;
        for (double scale = 1e-12; scale < 1e12; scale *= 7.3) {
            a.snr_scale = scale;
            const std::vector<double> t = {0.0, 0.5, 3.0, 1e3, 2.0, 9.0, 0.1};
            std::vector<double> ref(t.size());
            std::vector<double> simd(t.size());
            scalar::capacity_batch(a, t, ref);
            avx2::capacity_batch(a, t, simd);
            for (std::size_t k = 0; k < t.size(); ++k) {
                CHECK(simd[k] == doctest::Approx(ref[k]).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("dispatcher honours ISA selection")
{
    IsaGuard guard;
    CHECK(select_isa(Isa::Scalar) == Isa::Scalar);
    CHECK(active_isa() == Isa::Scalar);
    const Isa got = select_isa(Isa::Avx2);
    CHECK(got == (avx2::available() ? Isa::Avx2 : Isa::Scalar));
    CHECK(detect_isa() == got);
}
