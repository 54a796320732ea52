// SPDX-License-Identifier: Apache-2.0
//
// beamsw: beam-switching design and analysis for mm-wave V2I roadside units

#include "beamsw/csv.hpp"

#include <array>
#include <charconv>
#include <numbers>

namespace beamsw::csv {

std::string format_number(double value)
{
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 9);
    return ec == std::errc{} ? std::string(buf.data(), ptr) : std::string("nan");
}

void write_design(std::ostream& os, const BeamPlan& plan, bool degrees)
{
    const double k = degrees ? 180.0 / std::numbers::pi : 1.0;
    os << (degrees ? kDesignHeaderDeg : kDesignHeader) << '\n';
    for (const auto& b : plan.sectors) {
        os << b.index << ',' << format_number(b.begin_m) << ',' << format_number(b.end_m) << ','
           << format_number(b.switch_m) << ',' << format_number(b.width_rad * k) << ','
           << format_number(b.nominal_width_rad * k) << '\n';
    }
}

namespace {

void write_point(std::ostream& os, const PerformanceResult& r)
{
    os << to_string(r.spec.strategy) << ',' << r.spec.n_beams << ',' << format_number(r.spec.overlap) << ','
       << format_number(r.sigma_v_mps) << ',' << format_number(r.total_rate_bps) << ','
       << format_number(r.outage_fraction);
}

} // namespace

void write_sweep(std::ostream& os, const std::vector<PerformanceResult>& results)
{
    os << kSweepHeader << '\n';
    for (const auto& r : results) {
        write_point(os, r);
        os << '\n';
    }
}

void write_bde(std::ostream& os, const std::vector<PerformanceResult>& results, const BdeSurface& surface)
{
    os << kBdeHeader << '\n';
    for (std::size_t k = 0; k < results.size(); ++k) {
        write_point(os, results[k]);
        os << ',' << format_number(surface.entries.at(k).bde) << '\n';
    }
}

void write_weights(std::ostream& os, const BdeWeights& w)
{
    os << kWeightsHeader << '\n'
       << format_number(w.alpha) << ',' << format_number(w.beta) << ',' << format_number(w.max_rate) << ','
       << format_number(w.min_rate) << ',' << format_number(w.max_out) << ',' << format_number(w.min_out) << '\n';
}

void write_mc(std::ostream& os, const std::vector<McRow>& rows)
{
    os << kMcHeader << '\n';
    for (const auto& r : rows) {
        os << r.source << ',' << format_number(r.rate_bps) << ',' << format_number(r.outage_fraction) << ','
           << format_number(r.stderr_rate) << ',' << format_number(r.stderr_outage) << '\n';
    }
}

} // namespace beamsw::csv
