// SPDX-License-Identifier: Apache-2.0
//
// beamsw: beam-switching design and analysis for mm-wave V2I roadside units

#include "beamsw/config.hpp"

#include "beamsw/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace beamsw {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> parts;
    for (;;) {
        const auto pos = s.find(sep);
        parts.push_back(trim(s.substr(0, pos)));
        if (pos == std::string_view::npos) {
            return parts;
        }
        s.remove_prefix(pos + 1);
    }
}

double to_double(std::string_view key, std::string_view text)
{
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty()) {
        throw ConfigError("key '" + std::string(key) + "': '" + std::string(text) + "' is not a number");
    }
    return value;
}

template <class Int>
Int to_integer(std::string_view key, std::string_view text)
{
    Int value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty()) {
        throw ConfigError("key '" + std::string(key) + "': '" + std::string(text) + "' is not an integer");
    }
    return value;
}

// "1..60", "5,10,20" or a mix ("1..4,10").
std::vector<int> to_int_list(std::string_view key, std::string_view text)
{
    std::vector<int> out;
    for (auto item : split(text, ',')) {
        const auto dots = item.find("..");
        if (dots == std::string_view::npos) {
            out.push_back(to_integer<int>(key, item));
            continue;
        }
        const int lo = to_integer<int>(key, trim(item.substr(0, dots)));
        const int hi = to_integer<int>(key, trim(item.substr(dots + 2)));
        if (hi < lo) {
            throw ConfigError("key '" + std::string(key) + "': empty range '" + std::string(item) + "'");
        }
        for (int n = lo; n <= hi; ++n) {
            out.push_back(n);
        }
    }
    return out;
}

std::vector<double> to_double_list(std::string_view key, std::string_view text)
{
    std::vector<double> out;
    for (auto item : split(text, ',')) {
        out.push_back(to_double(key, item));
    }
    return out;
}

struct Pending {
    DesignSpec design;
    SweepGrid sweep = SweepGrid::defaults();
    std::optional<double> sigma_rel;
    bool sigma_abs = false;
    McConfig mc;
    bool any_mc = false;
};

} // namespace

KeyValues parse_key_values(std::string_view text)
{
    KeyValues kv;
    int line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (key.empty()) {
            throw ConfigError("line " + std::to_string(line_no) + ": empty key");
        }
        if (!kv.emplace(key, value).second) {
            throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
        }
    }
    return kv;
}

KeyValues env_overrides(char** envp)
{
    KeyValues kv;
    if (envp == nullptr) {
        return kv;
    }
    for (char** e = envp; *e != nullptr; ++e) {
        std::string_view entry(*e);
        if (!entry.starts_with(kEnvPrefix)) {
            continue;
        }
        const auto eq = entry.find('=');
        if (eq == std::string_view::npos) {
            continue;
        }
        std::string key;
        const std::string_view name = entry.substr(kEnvPrefix.size(), eq - kEnvPrefix.size());
        for (std::size_t k = 0; k < name.size(); ++k) {
            if (name[k] == '_' && k + 1 < name.size() && name[k + 1] == '_') {
                key += '.';
                ++k;
            } else {
                key += static_cast<char>(std::tolower(static_cast<unsigned char>(name[k])));
            }
        }
        kv[key] = std::string(entry.substr(eq + 1));
    }
    return kv;
}

RunConfig build_config(const KeyValues& keys)
{
    RunConfig cfg;
    Pending p;

    auto scen = [](double ScenarioParams::*field) {
        return [field](RunConfig& c, Pending&, std::string_view k, std::string_view v) {
            c.scenario.*field = to_double(k, v);
        };
    };
    using Handler = std::function<void(RunConfig&, Pending&, std::string_view, std::string_view)>;
    const std::map<std::string, Handler, std::less<>> handlers = {
        {"scenario.carrier_freq_hz", scen(&ScenarioParams::carrier_freq_hz)},
        {"scenario.pathloss_exp", scen(&ScenarioParams::pathloss_exp)},
        {"scenario.eirp_dbm", scen(&ScenarioParams::eirp_dbm)},
        {"scenario.covered_length_m", scen(&ScenarioParams::covered_length_m)},
        {"scenario.rsu_offset_m", scen(&ScenarioParams::rsu_offset_m)},
        {"scenario.rsu_height_m", scen(&ScenarioParams::rsu_height_m)},
        {"scenario.vehicle_height_m", scen(&ScenarioParams::vehicle_height_m)},
        {"scenario.speed_mps", scen(&ScenarioParams::speed_mps)},
        {"scenario.noise_figure_db", scen(&ScenarioParams::noise_figure_db)},
        {"scenario.bandwidth_hz", scen(&ScenarioParams::bandwidth_hz)},
        {"scenario.shadow_margin_db", scen(&ScenarioParams::shadow_margin_db)},
        {"scenario.lane_width_m", scen(&ScenarioParams::lane_width_m)},
        {"scenario.sigma_v_mps",
         [](RunConfig& c, Pending& pp, std::string_view k, std::string_view v) {
             c.scenario.sigma_v_mps = to_double(k, v);
             pp.sigma_abs = true;
         }},
        {"scenario.sigma_v_rel",
         [](RunConfig&, Pending& pp, std::string_view k, std::string_view v) { pp.sigma_rel = to_double(k, v); }},
        {"design.strategy",
         [](RunConfig&, Pending& pp, std::string_view, std::string_view v) { pp.design.strategy = parse_strategy(v); }},
        {"design.n_beams",
         [](RunConfig&, Pending& pp, std::string_view k, std::string_view v) {
             pp.design.n_beams = to_integer<int>(k, v);
         }},
        {"design.overlap",
         [](RunConfig&, Pending& pp, std::string_view k, std::string_view v) { pp.design.overlap = to_double(k, v); }},
        {"sweep.preset",
         [](RunConfig&, Pending&, std::string_view k, std::string_view v) {
             if (v != "default") {
                 throw ConfigError("key '" + std::string(k) + "': only 'default' is supported");
             }
         }},
        {"sweep.strategies",
         [](RunConfig&, Pending& pp, std::string_view, std::string_view v) {
             pp.sweep.strategies.clear();
             for (auto s : split(v, ',')) {
                 pp.sweep.strategies.push_back(parse_strategy(s));
             }
         }},
        {"sweep.n_beams",
         [](RunConfig&, Pending& pp, std::string_view k, std::string_view v) { pp.sweep.n_beams = to_int_list(k, v); }},
        {"sweep.overlaps",
         [](RunConfig&, Pending& pp, std::string_view k, std::string_view v) {
             pp.sweep.overlaps = to_double_list(k, v);
         }},
        {"quad.rel_tol", [](RunConfig& c, Pending&, std::string_view k, std::string_view v) { c.quad.rel_tol = to_double(k, v); }},
        {"quad.abs_tol", [](RunConfig& c, Pending&, std::string_view k, std::string_view v) { c.quad.abs_tol = to_double(k, v); }},
        {"quad.max_depth",
         [](RunConfig& c, Pending&, std::string_view k, std::string_view v) { c.quad.max_depth = to_integer<int>(k, v); }},
        {"mc.n_samples",
         [](RunConfig&, Pending& pp, std::string_view k, std::string_view v) {
             pp.mc.n_samples = to_integer<std::uint64_t>(k, v);
             pp.any_mc = true;
         }},
        {"mc.dt_s",
         [](RunConfig&, Pending& pp, std::string_view k, std::string_view v) {
             pp.mc.dt_s = to_double(k, v);
             pp.any_mc = true;
         }},
        {"mc.seed",
         [](RunConfig&, Pending& pp, std::string_view k, std::string_view v) {
             pp.mc.seed = to_integer<std::uint64_t>(k, v);
             pp.any_mc = true;
         }},
        {"output.path",
         [](RunConfig& c, Pending&, std::string_view, std::string_view v) { c.output_path = std::string(v); }},
    };

    bool has_design = false;
    bool has_sweep = false;
    for (const auto& [key, value] : keys) {
        const auto h = handlers.find(key);
        if (h == handlers.end()) {
            throw ConfigError("unknown configuration key '" + key + "'");
        }
        has_design = has_design || key.starts_with("design.");
        has_sweep = has_sweep || key.starts_with("sweep.");
        h->second(cfg, p, key, value);
    }

    if (p.sigma_rel && p.sigma_abs) {
        throw ConfigError("set only one of scenario.sigma_v_mps and scenario.sigma_v_rel");
    }
    if (p.sigma_rel) {
        cfg.scenario.sigma_v_mps = *p.sigma_rel * cfg.scenario.speed_mps;
    } else if (!p.sigma_abs) {
        cfg.scenario.sigma_v_mps = 0.04 * cfg.scenario.speed_mps;
    }
    cfg.scenario.validate();

    if (has_design && has_sweep) {
        throw ConfigError("configuration has both design.* and sweep.* sections; choose one");
    }
    if (!has_design && !has_sweep) {
        throw ConfigError("missing required design section (design.* for one plan or sweep.* for a grid)");
    }
    if (has_design) {
        p.design.validate();
        cfg.design = p.design;
    } else {
        p.sweep.validate();
        cfg.design = p.sweep;
    }
    cfg.quad.validate();
    if (p.any_mc) {
        p.mc.validate();
        cfg.mc = p.mc;
    }
    return cfg;
}

RunConfig parse_config(std::string_view text, const KeyValues& overrides)
{
    KeyValues kv = parse_key_values(text);
    for (const auto& [k, v] : overrides) {
        kv[k] = v;
    }
    return build_config(kv);
}

} // namespace beamsw
