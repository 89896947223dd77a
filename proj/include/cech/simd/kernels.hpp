#pragma once

// Data-parallel inner loops behind rasterization and neighbor scans.
//
// Every ISA variant must produce results identical to the scalar reference:
// the arithmetic is the same sequence of IEEE multiplies, adds and compares
// (the build disables FP contraction so no variant fuses into FMA).

#include <cstddef>
#include <cstdint>

namespace cech::simd {

enum class Isa { scalar, avx2, neon };

const char* isa_name(Isa isa);

struct Kernels {
    Isa isa;

    /// out[i] |= ((xs[i] - cx)^2 + dy2 <= r2) for i in [0, n).
    void (*mark_disk_span)(const double* xs, std::size_t n, double cx, double dy2, double r2,
                           std::uint8_t* out);

    /// out[i] = ((xs[i] - qx)^2 + (ys[i] - qy)^2 <= r2) for i in [0, n).
    void (*flag_within)(const double* xs, const double* ys, std::size_t n, double qx, double qy,
                        double r2, std::uint8_t* out);
};

const Kernels& scalar_kernels();

/// nullptr when the variant was not compiled for this target.
const Kernels* avx2_kernels();
const Kernels* neon_kernels();

bool cpu_supports(Isa isa);

/// Best variant the running CPU supports. The CECH_SIMD environment variable
/// ("scalar", "avx2", "neon") pins a choice; unsupported requests fall back to scalar.
const Kernels& active_kernels();

} // namespace cech::simd
