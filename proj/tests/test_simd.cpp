#include "cech/simd/kernels.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace cech::simd;

namespace {

std::vector<const Kernels*> variants() {
    std::vector<const Kernels*> out;
    if (const Kernels* k = avx2_kernels(); k && cpu_supports(Isa::avx2)) out.push_back(k);
    if (const Kernels* k = neon_kernels(); k && cpu_supports(Isa::neon)) out.push_back(k);
    return out;
}

} // namespace

TEST_CASE("active kernels are a supported variant") {
    const Kernels& k = active_kernels();
    CHECK(cpu_supports(k.isa));
    MESSAGE("active kernels: " << isa_name(k.isa));
}

TEST_CASE("vector kernels match the scalar reference bit for bit") {
    const Kernels& ref = scalar_kernels();
    const auto vs = variants();
    if (vs.empty()) MESSAGE("no vector variant on this machine; scalar only");
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (const Kernels* k : vs) {
        for (std::size_t n = 0; n < 70; ++n) {
            for (int rep = 0; rep < 20; ++rep) {
                std::vector<double> xs(n), ys(n);
                for (std::size_t i = 0; i < n; ++i) {
                    // Dyadic grid values make exact boundary hits common.
                    xs[i] = rep % 2 ? u(rng) : static_cast<double>(static_cast<int>(u(rng) * 8)) / 8;
                    ys[i] = rep % 2 ? u(rng) : static_cast<double>(static_cast<int>(u(rng) * 8)) / 8;
                }
                const double cx = rep % 2 ? u(rng) : 0.25, cy = rep % 2 ? u(rng) : -0.5;
                const double r2 = rep % 2 ? u(rng) * u(rng) : 1.0;
                const double dy2 = rep % 3 == 0 ? 0.0 : 0.25;

                std::vector<std::uint8_t> a(n, rep % 4 == 0), b(n, rep % 4 == 0);
                ref.mark_disk_span(xs.data(), n, cx, dy2, r2, a.data());
                k->mark_disk_span(xs.data(), n, cx, dy2, r2, b.data());
                REQUIRE(a == b);

                std::vector<std::uint8_t> fa(n, 7), fb(n, 7);
                ref.flag_within(xs.data(), ys.data(), n, cx, cy, r2, fa.data());
                k->flag_within(xs.data(), ys.data(), n, cx, cy, r2, fb.data());
                REQUIRE(fa == fb);
            }
        }
    }
}

TEST_CASE("scalar kernels follow their contract") {
    const Kernels& k = scalar_kernels();
    const std::vector<double> xs{0.0, 1.0, 2.0, 3.0};
    std::vector<std::uint8_t> out{0, 0, 0, 1};
    k.mark_disk_span(xs.data(), xs.size(), 1.0, 0.0, 1.0, out.data());
    CHECK(out == std::vector<std::uint8_t>{1, 1, 1, 1});

    const std::vector<double> ys{0.0, 0.0, 0.0, 0.0};
    std::vector<std::uint8_t> flags(4, 9);
    k.flag_within(xs.data(), ys.data(), 4, 0.0, 0.0, 1.0, flags.data());
    CHECK(flags == std::vector<std::uint8_t>{1, 1, 0, 0});
}
