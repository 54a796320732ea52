// SPDX-License-Identifier: Apache-2.0
//
// beamsw: beam-switching design and analysis for mm-wave V2I roadside units
//
// Adaptive 7/15-point Gauss-Kronrod quadrature with recursive bisection.

#pragma once

#include "beamsw/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <string>

namespace beamsw {

struct QuadratureConfig {
    double rel_tol = 1e-6;
    double abs_tol = 1e-3;
    int max_depth = 40;

    void validate() const;
};

namespace gk15 {

inline constexpr int kPoints = 15;

// Abscissae on [-1, 1] in ascending order; Gauss nodes are the odd indices.
inline constexpr std::array<double, kPoints> kNodes = {
    -0.991455371120812639206854697526329, -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926, -0.741531185599394439863864773280788,
    -0.586087235467691130294144845693013, -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245, 0.0,
    0.207784955007898467600689403773245,  0.405845151377397166906606412076961,
    0.586087235467691130294144845693013,  0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,  0.949107912342758524526189684047851,
    0.991455371120812639206854697526329};

inline constexpr std::array<double, kPoints> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
    0.204432940075298892414161999234649, 0.190350578064785409913256402421014,
    0.169004726639267902826583426598550, 0.140653259715525918745189590510238,
    0.104790010322250183839876322541518, 0.063092092629978553290700663189204,
    0.022935322010529224963732008058970};

inline constexpr std::array<double, kPoints> kGaussWeights = {
    0.0, 0.129484966168869693270611432679082, 0.0, 0.279705391489276667901467771423780,
    0.0, 0.381830050505118944950369775488975, 0.0, 0.417959183673469387755102040816327,
    0.0, 0.381830050505118944950369775488975, 0.0, 0.279705391489276667901467771423780,
    0.0, 0.129484966168869693270611432679082, 0.0};

struct PanelEstimate {
    double kronrod = 0.0;
    double error = 0.0;
};

/// Single-panel rule using a batch integrand: eval(nodes, values) fills
/// values[k] = f(nodes[k]) for all 15 nodes at once.
template <class BatchFn>
PanelEstimate panel_batch(BatchFn& eval, double a, double b)
{
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    std::array<double, kPoints> x{};
    std::array<double, kPoints> fx{};
    for (int k = 0; k < kPoints; ++k) {
        x[k] = mid + half * kNodes[k];
    }
    eval(std::span<const double>(x), std::span<double>(fx));
    double kr = 0.0;
    double ga = 0.0;
    for (int k = 0; k < kPoints; ++k) {
        kr += kKronrodWeights[k] * fx[k];
        ga += kGaussWeights[k] * fx[k];
    }
    return {kr * half, std::abs((kr - ga) * half)};
}

} // namespace gk15

namespace detail {

template <class BatchFn>
double refine(BatchFn& eval, double a, double b, const gk15::PanelEstimate& est,
              double tol_per_width, const QuadratureConfig& cfg, int depth)
{
    const double tol = tol_per_width * (b - a);
    if (est.error <= tol || est.error <= 1e-15 * std::abs(est.kronrod)) {
        return est.kronrod;
    }
    if (depth >= cfg.max_depth) {
        throw NumericalFailure("quadrature did not converge on [" + std::to_string(a) + ", " +
                               std::to_string(b) + "] within max_depth " +
                               std::to_string(cfg.max_depth));
    }
    const double mid = 0.5 * (a + b);
    const auto left = gk15::panel_batch(eval, a, mid);
    const auto right = gk15::panel_batch(eval, mid, b);
    return refine(eval, a, mid, left, tol_per_width, cfg, depth + 1) +
           refine(eval, mid, b, right, tol_per_width, cfg, depth + 1);
}

} // namespace detail

/// Integrates a batch integrand over [a, b]. Returns 0 for an empty or
/// reversed interval. The target absolute error is
/// max(abs_tol, rel_tol * |first estimate|), distributed by panel width.
template <class BatchFn>
double integrate_batch(BatchFn&& eval, double a, double b, const QuadratureConfig& cfg)
{
    if (!(b > a)) {
        return 0.0;
    }
    const auto first = gk15::panel_batch(eval, a, b);
    const double target = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(first.kronrod));
    return detail::refine(eval, a, b, first, target / (b - a), cfg, 0);
}

/// Scalar-integrand convenience wrapper.
template <class Fn>
double integrate(Fn&& f, double a, double b, const QuadratureConfig& cfg)
{
    auto batch = [&f](std::span<const double> x, std::span<double> y) {
        for (std::size_t k = 0; k < x.size(); ++k) {
            y[k] = f(x[k]);
        }
    };
    return integrate_batch(batch, a, b, cfg);
}

} // namespace beamsw
