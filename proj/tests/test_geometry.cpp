#include "cech/error.hpp"
#include "cech/geometry.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

using namespace cech;

namespace {

std::vector<Point2> random_points(std::mt19937_64& rng, int n, double lo = -1.0, double hi = 1.0) {
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<Point2> pts;
    for (int i = 0; i < n; ++i) pts.emplace_back(u(rng), u(rng));
    return pts;
}

} // namespace

TEST_CASE("points and disks reject bad coordinates") {
    CHECK_THROWS_AS(Point2(std::nan(""), 0.0), Error);
    CHECK_THROWS_AS(Point2(0.0, std::numeric_limits<double>::infinity()), Error);
    CHECK_THROWS_AS(Disk({0, 0}, 0.0), Error);
    CHECK_THROWS_AS(Disk({0, 0}, -1.0), Error);
    CHECK_NOTHROW(Disk({0, 0}, 1e-12));
}

TEST_CASE("min enclosing disk small cases") {
    CHECK_THROWS_AS(min_enclosing_disk({}), Error);

    const std::vector<Point2> one{{2, 3}};
    CHECK(min_enclosing_disk(one).radius == 0.0);

    const std::vector<Point2> two{{0, 0}, {2, 0}};
    const auto c2 = min_enclosing_disk(two);
    CHECK(c2.radius == doctest::Approx(1.0));
    CHECK(c2.center.x == doctest::Approx(1.0));

    const std::vector<Point2> tri{{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}};
    CHECK(min_enclosing_disk(tri).radius == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));

    // Obtuse: the long side is the diameter.
    const std::vector<Point2> obtuse{{0, 0}, {4, 0}, {2, 0.5}};
    CHECK(min_enclosing_disk(obtuse).radius == doctest::Approx(2.0));

    const std::vector<Point2> dup{{1, 1}, {1, 1}, {1, 1}};
    CHECK(min_enclosing_disk(dup).radius == 0.0);

    const std::vector<Point2> collinear{{0, 0}, {1, 0}, {2, 0}, {3, 0}};
    CHECK(min_enclosing_disk(collinear).radius == doctest::Approx(1.5));
}

TEST_CASE("min enclosing disk contains every point") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 300; ++t) {
        const int n = 1 + static_cast<int>(rng() % 64);
        const auto pts = random_points(rng, n, -5.0, 5.0);
        const auto c = min_enclosing_disk(pts);
        for (const auto& p : pts) CHECK(distance(p, c.center) <= c.radius + 1e-9);
    }
}

TEST_CASE("min enclosing disk matches candidate enumeration") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 500; ++t) {
        const int n = 1 + static_cast<int>(rng() % 10);
        auto pts = random_points(rng, n);
        if (t % 7 == 0 && n > 2) pts[1] = pts[0]; // duplicates
        CHECK(std::abs(min_enclosing_disk(pts).radius - oracle::enclosing_radius(pts)) <= 1e-9);
    }
}

TEST_CASE("common point of closed balls") {
    const std::vector<Point2> tangent{{0, 0}, {2, 0}};
    CHECK(disks_common_point(tangent, 1.0));
    CHECK_FALSE(disks_common_point(tangent, 0.999));

    const std::vector<Point2> tri{{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}};
    CHECK(disks_common_point(std::span(tri).first(2), 0.55));
    CHECK_FALSE(disks_common_point(tri, 0.55));
    CHECK(disks_common_point(tri, 0.58));

    const std::vector<Point2> single{{4, 4}};
    CHECK(disks_common_point(single, 0.1));
}

TEST_CASE("common point agrees with quadtree search away from ties") {
    std::mt19937_64 rng(13);
    int checked = 0;
    while (checked < 300) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const auto pts = random_points(rng, n);
        const double r = std::uniform_real_distribution<double>(0.2, 1.2)(rng);
        const double med = oracle::enclosing_radius(pts);
        if (std::abs(med - r) <= 1e-3 * r) continue;
        ++checked;
        CHECK(disks_common_point(pts, r) == oracle::grid_common_point(pts, r));
    }
}

TEST_CASE("common point is monotone in r") {
    std::mt19937_64 rng(14);
    for (int t = 0; t < 200; ++t) {
        const auto pts = random_points(rng, 2 + static_cast<int>(rng() % 6));
        double r = 0.05;
        bool seen = false;
        for (int k = 0; k < 40; ++k, r *= 1.1) {
            const bool now = disks_common_point(pts, r);
            CHECK((!seen || now));
            seen = seen || now;
        }
    }
}

TEST_CASE("rasterize union matches a per-cell loop") {
    const BoundingBox box{{-2, -2}, {2, 2}};
    const std::vector<Disk> one{Disk({0, 0}, 1)};
    const GridMask m = rasterize_union(one, box, 4, 4);
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) CHECK(m.at(i, j) == point_in_disk(m.cell_center(i, j), one[0]));
    CHECK(m.count() == 4);

    CHECK(rasterize_union({}, box, 8, 8).empty());

    const std::vector<Disk> twice{Disk({0.3, 0.1}, 0.9), Disk({0.3, 0.1}, 0.9)};
    CHECK(rasterize_union(twice, box, 64, 64) == rasterize_union(std::span(twice).first(1), box, 64, 64));

    CHECK_THROWS_AS(rasterize_union(one, BoundingBox({0, 0}, {0, 1}), 4, 4), Error);
}

TEST_CASE("rasterize union exact on random disks and monotone") {
    std::mt19937_64 rng(15);
    std::uniform_real_distribution<double> u(-1.0, 1.0), rad(0.05, 0.7);
    const BoundingBox box{{-1.3, -1.1}, {1.2, 1.4}};
    for (int t = 0; t < 40; ++t) {
        std::vector<Disk> disks;
        GridMask prev = rasterize_union(disks, box, 97, 83);
        for (int k = 0; k < 6; ++k) {
            disks.emplace_back(Point2(u(rng), u(rng)), rad(rng));
            const GridMask cur = rasterize_union(disks, box, 97, 83);
            for (int j = 0; j < cur.height(); ++j)
                for (int i = 0; i < cur.width(); ++i) {
                    bool in = false;
                    for (const auto& d : disks) in = in || point_in_disk(cur.cell_center(i, j), d);
                    REQUIRE(cur.at(i, j) == in);
                    REQUIRE((!prev.at(i, j) || cur.at(i, j)));
                }
            prev = cur;
        }
    }
}

TEST_CASE("point in disk boundary conventions") {
    const Disk d({0, 0}, 1);
    CHECK(point_in_disk({1, 0}, d));
    CHECK_FALSE(point_in_disk_interior({1, 0}, d));
    CHECK(point_in_disk_interior({0.5, 0.5}, d));
    CHECK_FALSE(point_in_disk({1, 1e-3}, d));
}
