#include "cech/simd/kernels.hpp"

#include <arm_neon.h>

namespace cech::simd {
namespace {

void mark_disk_span_neon(const double* xs, std::size_t n, double cx, double dy2, double r2,
                         std::uint8_t* out) {
    const float64x2_t vcx = vdupq_n_f64(cx);
    const float64x2_t vdy2 = vdupq_n_f64(dy2);
    const float64x2_t vr2 = vdupq_n_f64(r2);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t dx = vsubq_f64(vld1q_f64(xs + i), vcx);
        const float64x2_t d2 = vaddq_f64(vmulq_f64(dx, dx), vdy2);
        const uint64x2_t le = vcleq_f64(d2, vr2);
        out[i + 0] |= static_cast<std::uint8_t>(vgetq_lane_u64(le, 0) & 1);
        out[i + 1] |= static_cast<std::uint8_t>(vgetq_lane_u64(le, 1) & 1);
    }
    for (; i < n; ++i) {
        const double dx = xs[i] - cx;
        if (dx * dx + dy2 <= r2) out[i] = 1;
    }
}

void flag_within_neon(const double* xs, const double* ys, std::size_t n, double qx, double qy,
                      double r2, std::uint8_t* out) {
    const float64x2_t vqx = vdupq_n_f64(qx);
    const float64x2_t vqy = vdupq_n_f64(qy);
    const float64x2_t vr2 = vdupq_n_f64(r2);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t dx = vsubq_f64(vld1q_f64(xs + i), vqx);
        const float64x2_t dy = vsubq_f64(vld1q_f64(ys + i), vqy);
        const float64x2_t d2 = vaddq_f64(vmulq_f64(dx, dx), vmulq_f64(dy, dy));
        const uint64x2_t le = vcleq_f64(d2, vr2);
        out[i + 0] = static_cast<std::uint8_t>(vgetq_lane_u64(le, 0) & 1);
        out[i + 1] = static_cast<std::uint8_t>(vgetq_lane_u64(le, 1) & 1);
    }
    for (; i < n; ++i) {
        const double dx = xs[i] - qx;
        const double dy = ys[i] - qy;
        out[i] = (dx * dx + dy * dy <= r2) ? 1 : 0;
    }
}

constexpr Kernels kNeon{Isa::neon, &mark_disk_span_neon, &flag_within_neon};

} // namespace

const Kernels* neon_kernels() { return &kNeon; }

} // namespace cech::simd
