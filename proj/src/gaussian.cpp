// SPDX-License-Identifier: Apache-2.0
//
// beamsw: beam-switching design and analysis for mm-wave V2I roadside units

#include "beamsw/gaussian.hpp"

#include "beamsw/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace beamsw {

double gaussian_pdf(double x, double sigma)
{
    if (!(sigma > 0.0)) {
        throw DomainError("gaussian_pdf: sigma must be positive (got " + std::to_string(sigma) + ")");
    }
    const double z = x / sigma;
    return std::exp(-0.5 * z * z) / (sigma * std::sqrt(2.0 * std::numbers::pi));
}

double q_function(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

} // namespace beamsw
