// Command-line front end. Exit codes: 0 ok, 1 usage, 2 data error, 3 check failure.

#include "cech/axioms.hpp"
#include "cech/complex.hpp"
#include "cech/descriptive.hpp"
#include "cech/error.hpp"
#include "cech/homology.hpp"
#include "cech/io.hpp"
#include "cech/proximity.hpp"
#include "cech/shape.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <string>

namespace fs = std::filesystem;
using namespace cech;

namespace {

struct Options {
    std::string input;
    std::string second;
    std::string region;
    double radius = 0.0;
    double feature_radius = 0.0;
    std::string phi;
    int resolution = 1024;
    std::uint64_t seed = 0;
    std::string strategy = "grid";
    double spacing = 0.0;
    int max_dim = 2;
    double tolerance = 0.0;
    double density = 0.0;
    int trials = 500;
    std::string strong_mode = "interior-overlap";
    std::string out;
};

bool is_pgm(const std::string& path) { return fs::path(path).extension() == ".pgm"; }

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) std::cout << text;
    else write_file_atomic(o.out, text);
}

void emit_json(const Options& o, const nlohmann::json& j) { emit(o, j.dump(2) + "\n"); }

std::vector<Point2> positions(const std::vector<SamplePoint>& pts) {
    std::vector<Point2> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(p.position);
    return out;
}

FeatureMap feature_map(const Options& o, const std::vector<SamplePoint>& pts) {
    const std::size_t arity = pts.empty() ? 0 : pts.front().features.size();
    if (o.phi.empty()) return arity > 0 ? FeatureMap::payload(arity) : FeatureMap::position();
    return FeatureMap::by_name(o.phi, arity);
}

void require_radius(const Options& o) {
    if (!(o.radius > 0.0)) throw CLI::ValidationError("--radius", "must be positive");
}

int cmd_build(const Options& o) {
    require_radius(o);
    const auto centers = positions(parse_points_csv(o.input));
    const auto complex = build_cech_complex(centers, o.radius, o.max_dim);
    nlohmann::json j = to_json(complex);
    nlohmann::json nerves = nlohmann::json::array();
    for (const auto& n : maximal_nerves(complex, centers, o.radius)) nerves.push_back(n.members());
    j["radius"] = o.radius;
    j["nerves"] = nerves;
    emit_json(o, j);
    return 0;
}

int cmd_cover(const Options& o) {
    require_radius(o);
    const auto centers = positions(parse_points_csv(o.input));
    Region region = Region::empty_region();
    double density = o.density;
    if (o.region.empty()) {
        region = Region::point_set(std::span<const Point2>(centers));
        if (density <= 0.0) density = 1.0;
    } else if (is_pgm(o.region)) {
        const GridMask mask = parse_mask_pgm(o.region);
        if (density <= 0.0) density = 1.0 / std::min(mask.cell_width(), mask.cell_height());
        region = Region::grid_mask(mask);
    } else {
        region = Region::point_set(parse_points_csv(o.region));
        if (density <= 0.0) density = 1.0;
    }
    emit_json(o, to_json(covering_check(region, centers, o.radius, density)));
    return 0;
}

Region load_region(const std::string& path, double radius) {
    if (is_pgm(path)) return Region::grid_mask(parse_mask_pgm(path));
    auto pts = parse_points_csv(path);
    if (radius > 0.0) {
        std::vector<Disk> disks;
        for (const auto& p : pts) disks.emplace_back(p.position, radius);
        return Region::disk_union(std::move(disks), std::move(pts));
    }
    return Region::point_set(std::move(pts));
}

int cmd_proximity(const Options& o) {
    const Region a = load_region(o.input, o.radius);
    const Region b = load_region(o.second, o.radius);
    ProximalRelator rel;
    rel.gap_tolerance = o.tolerance;
    rel.feature_tolerance = o.tolerance;
    if (o.strong_mode == "boundary-contact") rel.strong_mode = StrongMode::boundary_contact;
    nlohmann::json j{{"near", near(a, b, rel)}, {"strongly_near", strongly_near(a, b, rel)}};
    const auto samples = a.samples();
    if (!samples.empty() && !b.samples().empty()) {
        const FeatureMap phi = feature_map(o, samples);
        j["phi"] = phi.name();
        j["descriptively_near"] = descriptively_near(a, b, phi, o.tolerance);
        j["strongly_descriptively_near"] = strongly_descriptively_near(a, b, phi, o.tolerance);
    }
    emit_json(o, j);
    return 0;
}

int cmd_betti(const Options& o) {
    BettiNumbers b;
    if (is_pgm(o.input)) {
        b = grid_betti(parse_mask_pgm(o.input));
    } else {
        require_radius(o);
        const auto centers = positions(parse_points_csv(o.input));
        b = complex_betti(build_cech_complex(centers, o.radius, std::max(2, o.max_dim)));
    }
    emit_json(o, to_json(b));
    return 0;
}

int cmd_verify(const Options& o) {
    const AxiomSystem system = parse_axiom_system(o.input);
    ProximalRelator rel;
    if (o.strong_mode == "boundary-contact") rel.strong_mode = StrongMode::boundary_contact;
    else if (o.strong_mode != "interior-overlap") throw Error("unknown strong mode: " + o.strong_mode);
    const auto universe = make_random_universe(o.seed);
    const AxiomReport report = verify_axioms(system, universe, o.trials, o.seed, rel);
    emit_json(o, to_json(report));
    return report.all_passed() ? 0 : 3;
}

int cmd_nerve_check(const Options& o) {
    const auto pts = parse_points_csv(o.input);
    NerveTheoremReport report;
    if (!o.phi.empty()) {
        if (!(o.feature_radius > 0.0)) throw CLI::ValidationError("--feature-radius", "must be positive");
        report = descriptive_nerve_theorem_check(pts, feature_map(o, pts), o.feature_radius, o.resolution);
    } else {
        require_radius(o);
        report = nerve_theorem_check(positions(pts), o.radius, o.resolution);
    }
    emit_json(o, to_json(report));
    return report.agree ? 0 : 3;
}

int cmd_approx(const Options& o) {
    require_radius(o);
    const GridMask mask = parse_mask_pgm(o.input);
    SamplingOptions s;
    s.strategy = parse_sampling_strategy(o.strategy);
    s.spacing = o.spacing > 0.0 ? o.spacing : o.radius;
    s.seed = o.seed;
    emit_json(o, to_json(approximate_shape(mask, s, o.radius)));
    return 0;
}

int cmd_render(const Options& o) {
    require_radius(o);
    const auto centers = positions(parse_points_csv(o.input));
    emit(o, render_svg(build_cech_complex(centers, o.radius, std::max(2, o.max_dim)), centers, o.radius));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Čech nerves and proximities on planar regions"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--radius", o.radius, "Ball radius");
        sub->add_option("--out", o.out, "Output file (default: stdout)");
        sub->add_option("--max-dim", o.max_dim, "Highest simplex dimension")->check(CLI::Range(0, 16));
        sub->add_option("--seed", o.seed, "Random seed");
    };

    auto* build = app.add_subcommand("build", "Čech complex and maximal nerves of a point set");
    build->add_option("centers", o.input, "Centers CSV")->required()->check(CLI::ExistingFile);
    common(build);

    auto* cover = app.add_subcommand("cover", "Covering check of a region by balls around centers");
    cover->add_option("centers", o.input, "Centers CSV")->required()->check(CLI::ExistingFile);
    cover->add_option("--region", o.region, "Region as mask PGM or points CSV (default: the centers)")
        ->check(CLI::ExistingFile);
    cover->add_option("--density", o.density, "Samples per unit length");
    common(cover);

    auto* prox = app.add_subcommand("proximity", "Spatial and descriptive proximity of two regions");
    prox->add_option("a", o.input, "Region A (CSV or PGM)")->required()->check(CLI::ExistingFile);
    prox->add_option("b", o.second, "Region B (CSV or PGM)")->required()->check(CLI::ExistingFile);
    prox->add_option("--phi", o.phi, "Feature map: position, grayscale, color, constant, payload");
    prox->add_option("--tolerance", o.tolerance, "Gap and feature tolerance")->check(CLI::NonNegativeNumber);
    prox->add_option("--strong-mode", o.strong_mode, "interior-overlap or boundary-contact");
    common(prox);

    auto* betti = app.add_subcommand("betti", "Betti numbers of a mask or of a Čech complex");
    betti->add_option("input", o.input, "Mask PGM or centers CSV")->required()->check(CLI::ExistingFile);
    common(betti);

    auto* verify = app.add_subcommand("verify-axioms", "Check an axiom system on a random universe");
    verify->add_option("system", o.input, "lodato, strong, descriptive-lodato, descriptive-strong")->required();
    verify->add_option("--trials", o.trials, "Trials per axiom")->check(CLI::PositiveNumber);
    verify->add_option("--strong-mode", o.strong_mode, "interior-overlap or boundary-contact");
    common(verify);

    auto* nerve = app.add_subcommand("nerve-check", "Compare Betti numbers of nerve and union");
    nerve->add_option("centers", o.input, "Centers CSV")->required()->check(CLI::ExistingFile);
    nerve->add_option("--resolution", o.resolution, "Raster side in cells")->check(CLI::Range(64, 1 << 15));
    nerve->add_option("--phi", o.phi, "Run the descriptive check with this feature map");
    nerve->add_option("--feature-radius", o.feature_radius, "Feature-space ball radius");
    common(nerve);

    auto* approx = app.add_subcommand("approx", "Approximate a mask by a Čech nerve");
    approx->add_option("mask", o.input, "Mask PGM")->required()->check(CLI::ExistingFile);
    approx->add_option("--strategy", o.strategy, "grid, poisson, boundary+interior");
    approx->add_option("--spacing", o.spacing, "Sample spacing (default: radius)");
    common(approx);

    auto* render = app.add_subcommand("render", "SVG drawing of balls and complex");
    render->add_option("centers", o.input, "Centers CSV")->required()->check(CLI::ExistingFile);
    common(render);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*build) return cmd_build(o);
        if (*cover) return cmd_cover(o);
        if (*prox) return cmd_proximity(o);
        if (*betti) return cmd_betti(o);
        if (*verify) return cmd_verify(o);
        if (*nerve) return cmd_nerve_check(o);
        if (*approx) return cmd_approx(o);
        if (*render) return cmd_render(o);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "cech: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "cech: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
