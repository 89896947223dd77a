#include "cech/error.hpp"
#include "cech/proximity.hpp"
#include "cech/region.hpp"

#include <doctest.h>

#include <memory>
#include <random>

using namespace cech;

namespace {

const BoundingBox kBox{{-5, -5}, {5, 5}};

Region disk(double x, double y, double r) { return Region::disk_union({Disk({x, y}, r)}, {}, kBox); }
Region point(double x, double y) { return Region::singleton({{x, y}, {}}, kBox); }

GridMask block_mask(int i0, int j0, int w, int h) {
    GridMask m(10, 10, kBox);
    for (int j = j0; j < j0 + h; ++j)
        for (int i = i0; i < i0 + w; ++i) m.set(i, j, true);
    return m;
}

} // namespace

TEST_CASE("region basics") {
    CHECK(Region::empty_region().is_empty());
    CHECK(point(1, 1).is_singleton());
    const Region two = Region::point_set(std::vector<SamplePoint>{{{0, 0}, {}}, {{0, 0}, {}}});
    CHECK(two.is_singleton());
    CHECK(disk(0, 0, 1).contains({1, 0}));
    CHECK_FALSE(disk(0, 0, 1).interior_contains({1, 0}));
    CHECK(disk(0, 0, 1).has_interior());
    CHECK_FALSE(point(0, 0).has_interior());

    const Region u = Region::unite(disk(0, 0, 1), point(3, 3));
    CHECK(u.kind() == RegionKind::composite);
    CHECK(Region::unite(u, Region::whole(kBox)).is_whole());
    CHECK(Region::unite(Region::empty_region(), u).kind() == RegionKind::composite);
    CHECK_THROWS_AS(Region::unite(disk(0, 0, 1), Region::disk_union({Disk({0, 0}, 1)}, {}, BoundingBox({0, 0}, {1, 1}))),
                    Error);
}

TEST_CASE("mask interiors across shared cell edges") {
    const Region m = Region::grid_mask(block_mask(2, 2, 3, 3));
    // Cells are 1x1 on [-5,5]^2; the block covers [-3,0]^2.
    CHECK(m.interior_contains({-1.5, -1.5}));
    CHECK(m.interior_contains({-2.0, -1.5})); // shared edge between two true cells
    CHECK(m.interior_contains({-2.0, -2.0})); // shared corner of four true cells
    CHECK_FALSE(m.interior_contains({0.0, -1.5}));
    CHECK(m.contains({0.0, -1.5}));
    CHECK(m.samples().size() == 9);
}

TEST_CASE("near follows closure contact") {
    CHECK(near(disk(0, 0, 1), disk(2, 0, 1)));
    CHECK_FALSE(near(disk(0, 0, 1), disk(3, 0, 1)));
    CHECK_FALSE(near(Region::empty_region(), disk(0, 0, 1)));
    ProximalRelator loose;
    loose.gap_tolerance = 1.0;
    CHECK(near(disk(0, 0, 1), disk(3, 0, 1), loose));
    CHECK_THROWS_AS(near(disk(0, 0, 1), Region::whole(BoundingBox({0, 0}, {1, 1}))), Error);
    ProximalRelator bad;
    bad.gap_tolerance = -1;
    CHECK_THROWS_AS(near(disk(0, 0, 1), disk(0, 0, 1), bad), Error);
}

TEST_CASE("strong nearness in interior-overlap mode") {
    CHECK(strongly_near(disk(0, 0, 1), disk(1, 0, 1)));
    CHECK_FALSE(strongly_near(disk(0, 0, 1), disk(2, 0, 1)));
    CHECK(strongly_near(point(1, 1), point(1, 1)));
    CHECK_FALSE(strongly_near(point(1, 1), point(1, 2)));
    CHECK(strongly_near(point(0.5, 0), disk(0, 0, 1)));
    CHECK_FALSE(strongly_near(point(1, 0), disk(0, 0, 1)));
    CHECK(strongly_near(Region::whole(kBox), point(4, 4)));
    CHECK_FALSE(strongly_near(Region::whole(kBox), Region::empty_region()));

    // Two masks sharing only an edge do not overlap in the interior.
    const Region a = Region::grid_mask(block_mask(0, 0, 2, 2));
    const Region b = Region::grid_mask(block_mask(2, 0, 2, 2));
    CHECK(near(a, b));
    CHECK_FALSE(strongly_near(a, b));
}

TEST_CASE("strong nearness in boundary-contact mode is intersection") {
    ProximalRelator rel;
    rel.strong_mode = StrongMode::boundary_contact;
    CHECK(strongly_near(disk(0, 0, 1), disk(2, 0, 1), rel));
    CHECK(strongly_near(point(1, 0), disk(0, 0, 1), rel));
    CHECK_FALSE(strongly_near(disk(0, 0, 1), disk(2.001, 0, 1), rel));
}

TEST_CASE("strongly near implies near on random region pairs") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-3, 3), rad(0.1, 1.5);
    for (int t = 0; t < 2000; ++t) {
        auto pick = [&]() -> Region {
            switch (rng() % 4) {
            case 0: return point(std::round(u(rng)), std::round(u(rng)));
            case 1: return disk(u(rng), u(rng), rad(rng));
            case 2: return Region::grid_mask(block_mask(static_cast<int>(rng() % 8), static_cast<int>(rng() % 8), 2, 2));
            default: return Region::unite(disk(u(rng), u(rng), rad(rng)), point(u(rng), u(rng)));
            }
        };
        const Region a = pick(), b = pick();
        if (strongly_near(a, b)) CHECK(near(a, b));
        CHECK(near(a, b) == near(b, a));
        CHECK(strongly_near(a, b) == strongly_near(b, a));
        CHECK(regions_intersect(a, b) == (region_distance(a, b) == 0.0));
    }
}

TEST_CASE("nerves strongly near") {
    auto cfg = std::make_shared<const std::vector<Point2>>(
        std::vector<Point2>{{0, 0}, {1, 0}, {3, 0}, {4, 0}, {10, 0}});
    const CechNerve a({0, 1}, 1.0, cfg), b({2, 3}, 1.0, cfg), c({4}, 1.0, cfg), shared({1}, 1.0, cfg);
    CHECK(nerves_strongly_near(a, b)); // centers 1 and 3 are exactly 2r apart
    CHECK_FALSE(nerves_strongly_near(a, c));
    CHECK(nerves_strongly_near(a, shared));
    const CechNerve other({0}, 2.0, cfg);
    CHECK_THROWS_AS(nerves_strongly_near(a, other), Error);
}
