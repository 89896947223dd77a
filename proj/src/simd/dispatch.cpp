#include "cech/simd/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace cech::simd {

#ifndef CECH_HAVE_AVX2
const Kernels* avx2_kernels() { return nullptr; }
#endif
#ifndef CECH_HAVE_NEON
const Kernels* neon_kernels() { return nullptr; }
#endif

const char* isa_name(Isa isa) {
    switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
    }
    return "unknown";
}

bool cpu_supports(Isa isa) {
    switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(CECH_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
        return __builtin_cpu_supports("avx2") != 0;
#else
        return false;
#endif
    case Isa::neon:
#ifdef CECH_HAVE_NEON
        return true; // baseline on aarch64
#else
        return false;
#endif
    }
    return false;
}

namespace {

const Kernels* variant(Isa isa) {
    switch (isa) {
    case Isa::scalar: return &scalar_kernels();
    case Isa::avx2: return avx2_kernels();
    case Isa::neon: return neon_kernels();
    }
    return nullptr;
}

const Kernels& select() {
    if (const char* env = std::getenv("CECH_SIMD")) {
        const std::string_view want{env};
        for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
            if (want == isa_name(isa)) {
                const Kernels* k = variant(isa);
                return (k != nullptr && cpu_supports(isa)) ? *k : scalar_kernels();
            }
        }
    }
    for (Isa isa : {Isa::avx2, Isa::neon}) {
        const Kernels* k = variant(isa);
        if (k != nullptr && cpu_supports(isa)) return *k;
    }
    return scalar_kernels();
}

} // namespace

const Kernels& active_kernels() {
    static const Kernels& chosen = select();
    return chosen;
}

} // namespace cech::simd
