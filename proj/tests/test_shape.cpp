#include "cech/error.hpp"
#include "cech/shape.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace cech;

namespace {

GridMask disk_mask(int n, double rho, double hole = 0.0) {
    GridMask m(n, n, BoundingBox({-1, -1}, {1, 1}));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            const double d = std::hypot(m.column_x(i), m.row_y(j));
            m.set(i, j, d <= rho && d >= hole);
        }
    return m;
}

bool on_true_cell(const GridMask& m, Point2 p) {
    for (int j = 0; j < m.height(); ++j)
        for (int i = 0; i < m.width(); ++i)
            if (m.at(i, j) && m.cell_center(i, j) == p) return true;
    return false;
}

} // namespace

TEST_CASE("strategy names") {
    CHECK(parse_sampling_strategy("boundary+interior") == SamplingStrategy::boundary_interior);
    CHECK_THROWS_AS(parse_sampling_strategy("random"), Error);
}

TEST_CASE("grid sampling at cell spacing takes every true cell") {
    GridMask full(8, 8, BoundingBox({0, 0}, {8, 8}));
    for (auto& c : full.cells()) c = 1;
    const auto pts = sample_region(full, {SamplingStrategy::grid, 1.0, 0});
    CHECK(pts.size() == 64);
}

TEST_CASE("sampling errors") {
    GridMask m(8, 8, BoundingBox({0, 0}, {8, 8}));
    CHECK_THROWS_AS(sample_region(m, {SamplingStrategy::grid, 1.0, 0}), Error);
    m.set(2, 2, true);
    m.set(3, 2, true);
    CHECK_THROWS_AS(sample_region(m, {SamplingStrategy::grid, 0.0, 0}), Error);
    CHECK_THROWS_AS(sample_region(m, {SamplingStrategy::grid, 3.0, 0}), Error);
    CHECK_NOTHROW(sample_region(m, {SamplingStrategy::grid, 2.0, 0}));
}

TEST_CASE("poisson sampling keeps its minimum distance and is seed-deterministic") {
    const GridMask m = disk_mask(64, 0.9);
    for (double d : {0.05, 0.1, 0.3}) {
        const auto a = sample_region(m, {SamplingStrategy::poisson, d, 5});
        const auto b = sample_region(m, {SamplingStrategy::poisson, d, 5});
        CHECK(a == b);
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(on_true_cell(m, a[i]));
            for (std::size_t j = i + 1; j < a.size(); ++j) CHECK(distance(a[i], a[j]) >= d);
        }
    }
    CHECK(sample_region(m, {SamplingStrategy::poisson, 0.1, 5}) != sample_region(m, {SamplingStrategy::poisson, 0.1, 6}));
}

TEST_CASE("boundary and interior sampling reaches the boundary of an L shape") {
    GridMask m(20, 20, BoundingBox({0, 0}, {20, 20}));
    for (int j = 0; j < 20; ++j)
        for (int i = 0; i < 20; ++i) m.set(i, j, i < 6 || j < 6);
    const auto pts = sample_region(m, {SamplingStrategy::boundary_interior, 3.0, 0});
    int near_boundary = 0;
    for (Point2 p : pts) {
        CHECK(on_true_cell(m, p));
        const int i = static_cast<int>(p.x), j = static_cast<int>(p.y);
        const bool edge = i == 0 || j == 0 || i == 19 || j == 19 || !m.at(i + 1, j) || !m.at(i, j + 1);
        near_boundary += edge;
    }
    CHECK(near_boundary > 0);
    // The inner corner cell is a boundary cell within one cell of every chosen boundary sample chain.
    bool corner = false;
    for (Point2 p : pts) corner = corner || (std::abs(p.x - 5.5) <= 1.0 && std::abs(p.y - 5.5) <= 1.0);
    CHECK(corner);
}

TEST_CASE("approximate shape of a disk") {
    const GridMask m = disk_mask(96, 0.8);
    const double r = 0.2;
    const auto rep = approximate_shape(m, {SamplingStrategy::grid, r, 0}, r);
    CHECK(rep.coverage_fraction == 1.0);
    CHECK(rep.betti_region == BettiNumbers{1, 0});
    CHECK(rep.betti_agree);
    CHECK(rep.excess_fraction > 0.0);
    CHECK(rep.n_centers == rep.centers.size());
}

TEST_CASE("approximate shape of an annulus") {
    const GridMask m = disk_mask(128, 0.9, 0.5);
    const auto rep = approximate_shape(m, {SamplingStrategy::grid, 0.1, 0}, 0.12);
    CHECK(rep.coverage_fraction == 1.0);
    CHECK(rep.betti_region == BettiNumbers{1, 1});
    CHECK(rep.betti_complex == BettiNumbers{1, 1});
}

TEST_CASE("tiny balls leave a multi-cell mask uncovered") {
    const GridMask m = disk_mask(32, 0.8);
    const auto centers = sample_region(m, {SamplingStrategy::grid, 0.3, 0});
    double min_pair = INFINITY;
    for (std::size_t i = 0; i < centers.size(); ++i)
        for (std::size_t j = i + 1; j < centers.size(); ++j) min_pair = std::min(min_pair, distance(centers[i], centers[j]));
    const auto rep = assess_centers(m, centers, min_pair / 2.5);
    CHECK(rep.coverage_fraction < 1.0);
    CHECK(rep.betti_complex.b0 == static_cast<int>(centers.size()));
}

TEST_CASE("coverage and excess are monotone in r") {
    const GridMask m = disk_mask(64, 0.7, 0.2);
    const auto centers = sample_region(m, {SamplingStrategy::poisson, 0.25, 3});
    double cov = 0, exc = 0;
    for (double r = 0.02; r < 0.5; r *= 1.25) {
        const auto rep = assess_centers(m, centers, r);
        CHECK(rep.coverage_fraction >= cov);
        CHECK(rep.excess_fraction >= exc);
        cov = rep.coverage_fraction;
        exc = rep.excess_fraction;
    }
}
