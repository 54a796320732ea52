// SPDX-License-Identifier: Apache-2.0
//
// beamsw: beam-switching design and analysis for mm-wave V2I roadside units

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace beamsw {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Rejected scenario, design, or run configuration.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Adaptive quadrature failed to converge. Carries the beam being
/// evaluated when known (0 = not beam-specific).
class NumericalFailure : public std::runtime_error {
public:
    explicit NumericalFailure(const std::string& what, std::size_t beam = 0)
        : std::runtime_error(what), beam_(beam) {}

    std::size_t beam() const noexcept { return beam_; }

private:
    std::size_t beam_;
};

/// The BDE weight system has no unique solution for the supplied results.
class CalibrationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace beamsw
