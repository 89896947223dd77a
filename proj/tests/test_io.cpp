#include "cech/error.hpp"
#include "cech/io.hpp"

#include <doctest.h>

#include <filesystem>
#include <random>

using namespace cech;

namespace {

std::size_t occurrences(const std::string& s, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
    return n;
}

} // namespace

TEST_CASE("points csv") {
    const auto two = parse_points_csv_text("x,y\n0,0\n1,0\n");
    REQUIRE(two.size() == 2);
    CHECK(two[1].position == Point2(1, 0));
    CHECK(two[0].features.empty());

    const auto feat = parse_points_csv_text("x,y,f1\n0,0,0.5");
    REQUIRE(feat.size() == 1);
    CHECK(feat[0].features == FeatureVector{0.5});

    CHECK_THROWS_WITH_AS(parse_points_csv_text("x,y\n0,abc\n"), "line 2: not a number: 'abc'", Error);
    CHECK_THROWS_WITH_AS(parse_points_csv_text("x,y\n0,1,2\n"), doctest::Contains("line 2"), Error);
    CHECK_THROWS_AS(parse_points_csv_text("a,b\n0,0\n"), Error);
    CHECK_THROWS_AS(parse_points_csv_text(""), Error);
    CHECK(parse_points_csv_text("x,y\r\n1,2\r\n\r\n").size() == 1);
}

TEST_CASE("points csv round trip") {
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    std::vector<SamplePoint> pts;
    for (int i = 0; i < 200; ++i) pts.push_back({{u(rng), u(rng)}, {u(rng), u(rng) * 1e-7}});
    const auto back = parse_points_csv_text(format_points_csv(pts));
    REQUIRE(back.size() == pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        CHECK(std::abs(back[i].position.x - pts[i].position.x) <= 1e-12 * std::abs(pts[i].position.x));
        CHECK(back[i] == pts[i]);
    }
}

TEST_CASE("pgm masks") {
    const GridMask m = parse_mask_pgm_text("P2\n2 2\n255\n0 255\n255 0\n");
    CHECK(m.width() == 2);
    CHECK(m.box() == BoundingBox({0, 0}, {2, 2}));
    // First image row is the top of the mask.
    CHECK_FALSE(m.at(0, 1));
    CHECK(m.at(1, 1));
    CHECK(m.at(0, 0));
    CHECK_FALSE(m.at(1, 0));

    CHECK(parse_mask_pgm_text("P2\n# comment\n3 1\n4\n0 0 0\n").empty());
    CHECK(parse_mask_pgm_text("P2 1 1 4 2").empty()); // 2 is not above 4/2
    CHECK_FALSE(parse_mask_pgm_text("P2 1 1 4 3").empty());
    CHECK_THROWS_WITH_AS(parse_mask_pgm_text("P2\n2 2\n255\n0 255 255\n"), "unexpected end of file", Error);
    CHECK_THROWS_AS(parse_mask_pgm_text("P5\n2 2\n255\n"), Error);
    CHECK_THROWS_AS(parse_mask_pgm_text("P2\n1 1\n1\n0 1\n"), Error);
    CHECK_THROWS_AS(parse_mask_pgm_text("P2\n1 1\n0\n0\n"), Error);
    CHECK_THROWS_AS(parse_mask_pgm_text("P2\n1 1\n1\n7\n"), Error);

    GridMask g(5, 3, BoundingBox({0, 0}, {5, 3}));
    g.set(0, 0, true);
    g.set(4, 2, true);
    CHECK(parse_mask_pgm_text(format_mask_pgm(g)) == g);
}

TEST_CASE("svg rendering") {
    const std::vector<Point2> fig1{{2.5, 1.8}, {2.5, 2.5}, {1.5, 1.5}};
    const auto k = build_cech_complex(fig1, 1.2);
    const std::string svg = render_svg(k, fig1, 1.2);
    CHECK(occurrences(svg, "class=\"ball\"") == 3);
    CHECK(occurrences(svg, "class=\"edge\"") == 3);
    CHECK(occurrences(svg, "class=\"face\"") == 1);
    CHECK(svg == render_svg(k, fig1, 1.2));

    const std::vector<Point2> one{{0, 0}};
    const std::string single = render_svg(build_cech_complex(one, 1.0), one, 1.0);
    CHECK(occurrences(single, "class=\"ball\"") == 1);
    CHECK(occurrences(single, "class=\"edge\"") == 0);
}

TEST_CASE("json reports") {
    NerveTheoremReport r;
    r.complex_betti = {1, 1};
    r.union_betti = {1, 1};
    r.agree = true;
    r.resolution = 1024;
    r.margin = 0.25;
    const auto j = to_json(r);
    for (const char* key : {"b0_complex", "b1_complex", "b0_union", "b1_union", "agree", "resolution", "margin"})
        CHECK(j.contains(key));
    CHECK(j["b1_union"] == 1);
}

TEST_CASE("atomic writes") {
    const auto dir = std::filesystem::temp_directory_path() / "cech_io_test";
    std::filesystem::create_directories(dir);
    const auto file = dir / "out.txt";
    write_file_atomic(file, "first");
    write_file_atomic(file, "second");
    CHECK(read_file(file) == "second");
    CHECK_FALSE(std::filesystem::exists(dir / "out.txt.tmp"));
    std::filesystem::remove_all(dir);
    CHECK_THROWS_AS(read_file(dir / "missing.csv"), Error);
}
