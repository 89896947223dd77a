// Compiled with -mavx2. Keep this translation unit free of standard library
// templates so no AVX2-encoded inline instantiation can leak into other objects.

#include "cech/simd/kernels.hpp"

#include <immintrin.h>

namespace cech::simd {
namespace {

void mark_disk_span_avx2(const double* xs, std::size_t n, double cx, double dy2, double r2,
                         std::uint8_t* out) {
    const __m256d vcx = _mm256_set1_pd(cx);
    const __m256d vdy2 = _mm256_set1_pd(dy2);
    const __m256d vr2 = _mm256_set1_pd(r2);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + i), vcx);
        const __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), vdy2);
        const int bits = _mm256_movemask_pd(_mm256_cmp_pd(d2, vr2, _CMP_LE_OQ));
        if (bits == 0) continue;
        out[i + 0] |= static_cast<std::uint8_t>(bits & 1);
        out[i + 1] |= static_cast<std::uint8_t>((bits >> 1) & 1);
        out[i + 2] |= static_cast<std::uint8_t>((bits >> 2) & 1);
        out[i + 3] |= static_cast<std::uint8_t>((bits >> 3) & 1);
    }
    for (; i < n; ++i) {
        const double dx = xs[i] - cx;
        if (dx * dx + dy2 <= r2) out[i] = 1;
    }
}

void flag_within_avx2(const double* xs, const double* ys, std::size_t n, double qx, double qy,
                      double r2, std::uint8_t* out) {
    const __m256d vqx = _mm256_set1_pd(qx);
    const __m256d vqy = _mm256_set1_pd(qy);
    const __m256d vr2 = _mm256_set1_pd(r2);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + i), vqx);
        const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys + i), vqy);
        const __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
        const int bits = _mm256_movemask_pd(_mm256_cmp_pd(d2, vr2, _CMP_LE_OQ));
        out[i + 0] = static_cast<std::uint8_t>(bits & 1);
        out[i + 1] = static_cast<std::uint8_t>((bits >> 1) & 1);
        out[i + 2] = static_cast<std::uint8_t>((bits >> 2) & 1);
        out[i + 3] = static_cast<std::uint8_t>((bits >> 3) & 1);
    }
    for (; i < n; ++i) {
        const double dx = xs[i] - qx;
        const double dy = ys[i] - qy;
        out[i] = (dx * dx + dy * dy <= r2) ? 1 : 0;
    }
}

constexpr Kernels kAvx2{Isa::avx2, &mark_disk_span_avx2, &flag_within_avx2};

} // namespace

const Kernels* avx2_kernels() { return &kAvx2; }

} // namespace cech::simd
