// SPDX-License-Identifier: Apache-2.0
//
// beamsw: beam-switching design and analysis for mm-wave V2I roadside units
//
// Command-line front end. See README.md for the configuration keys.

#include "beamsw/commands.hpp"
#include "beamsw/config.hpp"
#include "beamsw/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

extern char** environ;

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw beamsw::ConfigError("cannot read config file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::ofstream open_output(const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw beamsw::ConfigError("cannot write '" + path.string() + "'");
    }
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"beamsw - RSU beam-switching design and analysis"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    std::string out_path;
    std::uint64_t seed = 0;
    bool degrees = false;
    unsigned jobs = 1;
    app.add_option("--config", config_path, "Configuration file (key = value)");
    auto* out_opt = app.add_option("--out", out_path, "Output CSV (default: output.path or stdout)");
    auto* seed_opt = app.add_option("--seed", seed, "Monte Carlo seed (overrides mc.seed)");
    app.add_flag("--degrees", degrees, "Write beam angles in degrees");
    app.add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

    auto* design = app.add_subcommand("design", "Write the beam table of one design");
    auto* evaluate = app.add_subcommand("evaluate", "Analytic rate and outage of one design");
    auto* sweep = app.add_subcommand("sweep", "Analytic rate and outage over a design grid");
    auto* bde = app.add_subcommand("bde", "Sweep, calibrate BDE weights, and score the grid");
    auto* mc = app.add_subcommand("mc", "Cross-check one design against the Monte Carlo replay");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : beamsw::kExitConfig;
    }

    try {
        const std::string text = config_path.empty() ? std::string() : read_file(config_path);
        beamsw::RunConfig cfg = beamsw::parse_config(text, beamsw::env_overrides(environ));
        if (*seed_opt) {
            beamsw::McConfig m = cfg.mc.value_or(beamsw::McConfig{});
            m.seed = seed;
            cfg.mc = m;
        }
        if (*out_opt) {
            cfg.output_path = out_path;
        }

        const beamsw::CommandOptions opt{degrees, jobs};
        std::ofstream file;
        std::ostream* out = &std::cout;
        if (!cfg.output_path.empty()) {
            file = open_output(cfg.output_path);
            out = &file;
        }

        if (*design) {
            return beamsw::cmd_design(cfg, *out, std::cerr, opt);
        }
        if (*evaluate) {
            return beamsw::cmd_evaluate(cfg, *out, std::cerr, opt);
        }
        if (*sweep) {
            return beamsw::cmd_sweep(cfg, *out, std::cerr, opt);
        }
        if (*bde) {
            if (cfg.output_path.empty()) {
                return beamsw::cmd_bde(cfg, *out, std::cerr, std::cerr, opt);
            }
            std::filesystem::path weights_path = cfg.output_path;
            weights_path += ".weights.csv";
            std::ofstream weights = open_output(weights_path);
            return beamsw::cmd_bde(cfg, *out, weights, std::cerr, opt);
        }
        if (*mc) {
            return beamsw::cmd_mc(cfg, *out, std::cerr, opt);
        }
    } catch (const beamsw::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return beamsw::kExitConfig;
    } catch (const beamsw::NumericalFailure& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return beamsw::kExitNumerical;
    } catch (const beamsw::CalibrationError& e) {
        std::cerr << "calibration failure: " << e.what() << '\n';
        return beamsw::kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
