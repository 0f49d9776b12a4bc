#include "qalg/kernels.hpp"

#if QALG_HAVE_AVX2_KERNELS

#include <immintrin.h>

namespace qalg::simd::avx2 {

namespace {

// Barrett reduction of eight lanes t < 2^31 with m = floor(2^31 / p).
// The estimated quotient is low by at most one, so a single conditional
// subtraction lands in [0, p).
__attribute__((target("avx2"))) inline __m256i reduce_lanes(__m256i t, __m256i m, __m256i vp)
{
    __m256i q_even = _mm256_srli_epi64(_mm256_mul_epu32(t, m), 31);
    __m256i q_odd = _mm256_srli_epi64(_mm256_mul_epu32(_mm256_srli_epi64(t, 32), m), 31);
    __m256i q = _mm256_blend_epi32(q_even, _mm256_slli_epi64(q_odd, 32), 0xAA);
    __m256i r = _mm256_sub_epi32(t, _mm256_mullo_epi32(q, vp));
    return _mm256_min_epu32(r, _mm256_sub_epi32(r, vp));
}

}  // namespace

__attribute__((target("avx2"))) void axpy_mod(std::uint32_t* dst, const std::uint32_t* src,
                                              std::uint32_t c, std::uint32_t p, std::size_t n)
{
    if (p > kAvx2MaxModulus) {
        scalar::axpy_mod(dst, src, c, p, n);
        return;
    }
    if (c == 0)
        return;
    const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i m = _mm256_set1_epi32(static_cast<int>((1u << 31) / p));
    std::size_t k = 0;
    for (; k + 8 <= n; k += 8) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + k));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + k));
        __m256i t = _mm256_add_epi32(y, _mm256_mullo_epi32(vc, x));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + k), reduce_lanes(t, m, vp));
    }
    scalar::axpy_mod(dst + k, src + k, c, p, n - k);
}

__attribute__((target("avx2"))) void scale_mod(std::uint32_t* dst, std::uint32_t c,
                                               std::uint32_t p, std::size_t n)
{
    if (p > kAvx2MaxModulus) {
        scalar::scale_mod(dst, c, p, n);
        return;
    }
    const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i m = _mm256_set1_epi32(static_cast<int>((1u << 31) / p));
    std::size_t k = 0;
    for (; k + 8 <= n; k += 8) {
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + k));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + k),
                            reduce_lanes(_mm256_mullo_epi32(vc, y), m, vp));
    }
    scalar::scale_mod(dst + k, c, p, n - k);
}

}  // namespace qalg::simd::avx2

#endif
