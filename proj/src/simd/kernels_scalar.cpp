#include "cech/simd/kernels.hpp"

namespace cech::simd {
namespace {

void mark_disk_span_scalar(const double* xs, std::size_t n, double cx, double dy2, double r2,
                           std::uint8_t* out) {
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - cx;
        if (dx * dx + dy2 <= r2) out[i] = 1;
    }
}

void flag_within_scalar(const double* xs, const double* ys, std::size_t n, double qx, double qy,
                        double r2, std::uint8_t* out) {
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - qx;
        const double dy = ys[i] - qy;
        out[i] = (dx * dx + dy * dy <= r2) ? 1 : 0;
    }
}

constexpr Kernels kScalar{Isa::scalar, &mark_disk_span_scalar, &flag_within_scalar};

} // namespace

const Kernels& scalar_kernels() { return kScalar; }

} // namespace cech::simd
