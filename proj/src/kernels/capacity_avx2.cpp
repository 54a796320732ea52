// SPDX-License-Identifier: Apache-2.0
//
// beamsw: beam-switching design and analysis for mm-wave V2I roadside units
//
// AVX2+FMA capacity kernels. Compiled with -mavx2 -mfma; only reached through
// the runtime dispatcher after a CPU feature check.

#include "beamsw/kernels.hpp"

#include <immintrin.h>

#include <array>
#include <numbers>

namespace beamsw::kernels::avx2 {

namespace {

constexpr double kLn2Hi = 6.93147180369123816490e-01;
constexpr double kLn2Lo = 1.90821492927058770002e-10;

// Natural log for positive normal inputs. x = m * 2^e with m in
// [sqrt(1/2), sqrt(2)); log(m) = 2 atanh(s), s = (m-1)/(m+1), |s| <= 0.1716,
// series truncated after s^23 (remainder < 1e-17).
inline __m256d log_pd(__m256d x)
{
    const __m256i bits = _mm256_castpd_si256(x);
    const __m256i mant_mask = _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL);
    const __m256i one_bits = _mm256_set1_epi64x(0x3FF0000000000000LL);
    __m256d m = _mm256_castsi256_pd(_mm256_or_si256(_mm256_and_si256(bits, mant_mask), one_bits));

    // Biased exponent -> double via the 2^52 magic constant.
    const __m256i biased = _mm256_srli_epi64(bits, 52);
    const __m256d magic = _mm256_set1_pd(4503599627370496.0);   // 2^52
    __m256d e = _mm256_sub_pd(_mm256_castsi256_pd(_mm256_or_si256(biased, _mm256_castpd_si256(magic))),
                              _mm256_set1_pd(4503599627370496.0 + 1023.0));

    const __m256d big = _mm256_cmp_pd(m, _mm256_set1_pd(std::numbers::sqrt2), _CMP_GT_OQ);
    m = _mm256_blendv_pd(m, _mm256_mul_pd(m, _mm256_set1_pd(0.5)), big);
    e = _mm256_add_pd(e, _mm256_and_pd(big, _mm256_set1_pd(1.0)));

    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d s = _mm256_div_pd(_mm256_sub_pd(m, one), _mm256_add_pd(m, one));
    const __m256d z = _mm256_mul_pd(s, s);

    __m256d p = _mm256_set1_pd(1.0 / 23.0);
    p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(1.0 / 21.0));
    p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(1.0 / 19.0));
    p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(1.0 / 17.0));
    p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(1.0 / 15.0));
    p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(1.0 / 13.0));
    p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(1.0 / 11.0));
    p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(1.0 / 9.0));
    p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(1.0 / 7.0));
    p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(1.0 / 5.0));
    p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(1.0 / 3.0));
    // log(m) = 2s + 2s*z*p
    const __m256d two_s = _mm256_add_pd(s, s);
    const __m256d log_m = _mm256_fmadd_pd(_mm256_mul_pd(two_s, z), p, two_s);

    return _mm256_fmadd_pd(e, _mm256_set1_pd(kLn2Hi), _mm256_fmadd_pd(e, _mm256_set1_pd(kLn2Lo), log_m));
}

// exp for arguments well inside the normal range (|x| < 700).
inline __m256d exp_pd(__m256d x)
{
    const __m256d k = _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(std::numbers::log2e)),
                                      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(k, _mm256_set1_pd(kLn2Hi), x);
    r = _mm256_fnmadd_pd(k, _mm256_set1_pd(kLn2Lo), r);

    // Taylor to r^13 on |r| <= ln2/2.
    static constexpr std::array<double, 14> kInvFact = {
        1.0,
        1.0,
        1.0 / 2.0,
        1.0 / 6.0,
        1.0 / 24.0,
        1.0 / 120.0,
        1.0 / 720.0,
        1.0 / 5040.0,
        1.0 / 40320.0,
        1.0 / 362880.0,
        1.0 / 3628800.0,
        1.0 / 39916800.0,
        1.0 / 479001600.0,
        1.0 / 6227020800.0};
    __m256d p = _mm256_set1_pd(kInvFact[13]);
    for (int j = 12; j >= 0; --j) {
        p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(kInvFact[static_cast<std::size_t>(j)]));
    }

    // 2^k assembled directly in the exponent field.
    const __m256d shifter = _mm256_set1_pd(6755399441055744.0);   // 2^52 + 2^51
    const __m256i ki = _mm256_castpd_si256(_mm256_add_pd(k, shifter));
    const __m256i kbits = _mm256_slli_epi64(
        _mm256_add_epi64(_mm256_sub_epi64(ki, _mm256_castpd_si256(shifter)), _mm256_set1_epi64x(1023)), 52);
    return _mm256_mul_pd(p, _mm256_castsi256_pd(kbits));
}

struct Lanes {
    __m256d scale, speed, centre, d_el_sq, half_exp, bw_over_ln2;
    bool square_law;

    explicit Lanes(const CapacityArgs& a)
        : scale(_mm256_set1_pd(a.snr_scale)), speed(_mm256_set1_pd(a.speed)), centre(_mm256_set1_pd(a.centre_m)),
          d_el_sq(_mm256_set1_pd(a.d_el_sq)), half_exp(_mm256_set1_pd(a.half_exponent)),
          bw_over_ln2(_mm256_set1_pd(a.bandwidth / std::numbers::ln2)), square_law(a.half_exponent == 1.0)
    {
    }

    __m256d capacity(__m256d t) const
    {
        const __m256d u = _mm256_fmsub_pd(speed, t, centre);
        const __m256d dist_sq = _mm256_fmadd_pd(u, u, d_el_sq);
        const __m256d path = square_law ? dist_sq : exp_pd(_mm256_mul_pd(half_exp, log_pd(dist_sq)));
        const __m256d snr = _mm256_div_pd(scale, path);
        return _mm256_mul_pd(bw_over_ln2, log_pd(_mm256_add_pd(_mm256_set1_pd(1.0), snr)));
    }
};

} // namespace

bool available()
{
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

void capacity_batch(const CapacityArgs& args, std::span<const double> t, std::span<double> out)
{
    const Lanes lanes(args);
    const std::size_t n = t.size();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        _mm256_storeu_pd(out.data() + k, lanes.capacity(_mm256_loadu_pd(t.data() + k)));
    }
    if (k < n) {
        alignas(32) std::array<double, 4> tail_t{};
        alignas(32) std::array<double, 4> tail_out{};
        for (std::size_t j = 0; j < n - k; ++j) {
            tail_t[j] = t[k + j];
        }
        _mm256_store_pd(tail_out.data(), lanes.capacity(_mm256_load_pd(tail_t.data())));
        for (std::size_t j = 0; j < n - k; ++j) {
            out[k + j] = tail_out[j];
        }
    }
}

double capacity_dot(const CapacityArgs& args, std::span<const double> t, std::span<const double> weights)
{
    const Lanes lanes(args);
    const std::size_t n = t.size();
    __m256d acc = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(weights.data() + k), lanes.capacity(_mm256_loadu_pd(t.data() + k)),
                              acc);
    }
    if (k < n) {
        alignas(32) std::array<double, 4> tail_t{};
        alignas(32) std::array<double, 4> tail_w{};
        for (std::size_t j = 0; j < n - k; ++j) {
            tail_t[j] = t[k + j];
            tail_w[j] = weights[k + j];
        }
        acc = _mm256_fmadd_pd(_mm256_load_pd(tail_w.data()), lanes.capacity(_mm256_load_pd(tail_t.data())), acc);
    }
    alignas(32) std::array<double, 4> lanes_sum{};
    _mm256_store_pd(lanes_sum.data(), acc);
    return (lanes_sum[0] + lanes_sum[1]) + (lanes_sum[2] + lanes_sum[3]);
}

} // namespace beamsw::kernels::avx2
