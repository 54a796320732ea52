// SPDX-License-Identifier: Apache-2.0
//
// beamsw: beam-switching design and analysis for mm-wave V2I roadside units

#include "beamsw/kernels.hpp"

#include <atomic>

namespace beamsw::kernels {

#if !defined(BEAMSW_HAVE_AVX2_KERNELS)
namespace avx2 {
bool available() { return false; }
void capacity_batch(const CapacityArgs& args, std::span<const double> t, std::span<double> out)
{
    scalar::capacity_batch(args, t, out);
}
double capacity_dot(const CapacityArgs& args, std::span<const double> t, std::span<const double> weights)
{
    return scalar::capacity_dot(args, t, weights);
}
} // namespace avx2
#endif

namespace {

std::atomic<Isa>& current()
{
    static std::atomic<Isa> isa{detect_isa()};
    return isa;
}

} // namespace

std::string_view to_string(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

Isa detect_isa() { return avx2::available() ? Isa::Avx2 : Isa::Scalar; }

Isa active_isa() { return current().load(std::memory_order_relaxed); }

Isa select_isa(Isa isa)
{
    const Isa chosen = (isa == Isa::Avx2 && !avx2::available()) ? Isa::Scalar : isa;
    current().store(chosen, std::memory_order_relaxed);
    return chosen;
}

void capacity_batch(const CapacityArgs& args, std::span<const double> t, std::span<double> out)
{
    if (active_isa() == Isa::Avx2) {
        avx2::capacity_batch(args, t, out);
    } else {
        scalar::capacity_batch(args, t, out);
    }
}

double capacity_dot(const CapacityArgs& args, std::span<const double> t, std::span<const double> weights)
{
    return active_isa() == Isa::Avx2 ? avx2::capacity_dot(args, t, weights)
                                     : scalar::capacity_dot(args, t, weights);
}

} // namespace beamsw::kernels
