// SPDX-License-Identifier: Apache-2.0
//
// beamsw: beam-switching design and analysis for mm-wave V2I roadside units

#pragma once

namespace beamsw {

/// Zero-mean normal density. Throws DomainError for sigma <= 0.
double gaussian_pdf(double x, double sigma);

/// Standard normal upper tail, Q(x) = P(Z > x).
double q_function(double x);

} // namespace beamsw
