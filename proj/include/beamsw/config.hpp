// SPDX-License-Identifier: Apache-2.0
//
// beamsw: beam-switching design and analysis for mm-wave V2I roadside units
//
// Run configuration: a flat `key = value` document with dotted section
// prefixes (scenario., design., sweep., quad., mc.). '#' starts a comment.
// Unknown keys are rejected. Environment variables named
// BEAMSW_<SECTION>__<KEY> (upper case) override document values.

#pragma once

#include "beamsw/bde.hpp"
#include "beamsw/montecarlo.hpp"
#include "beamsw/quadrature.hpp"
#include "beamsw/scenario.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace beamsw {

inline constexpr std::string_view kEnvPrefix = "BEAMSW_";

struct RunConfig {
    ScenarioParams scenario;
    std::variant<DesignSpec, SweepGrid> design;
    QuadratureConfig quad;
    std::optional<McConfig> mc;
    std::filesystem::path output_path;

    bool is_sweep() const { return std::holds_alternative<SweepGrid>(design); }
};

using KeyValues = std::map<std::string, std::string, std::less<>>;

/// Splits a document into key/value pairs. Throws ConfigError on malformed
/// lines or duplicate keys.
KeyValues parse_key_values(std::string_view text);

/// Collects BEAMSW_* overrides from an environment block (`environ` style).
KeyValues env_overrides(char** envp);

/// Builds a RunConfig from parsed keys. Scenario keys default to the
/// reference scenario. Exactly one of the design.* or sweep.* sections must
/// be present.
RunConfig build_config(const KeyValues& keys);

RunConfig parse_config(std::string_view text, const KeyValues& overrides = {});

} // namespace beamsw
