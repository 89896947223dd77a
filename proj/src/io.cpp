#include "cech/io.hpp"

#include "cech/error.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace cech {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = line.find(sep, start);
        out.push_back(trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start)));
        if (pos == std::string_view::npos) return out;
        start = pos + 1;
    }
}

std::optional<double> parse_real(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size() || s.empty() || !std::isfinite(v))
        return std::nullopt;
    return v;
}

std::string fmt(const char* pattern, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, v);
    return buf;
}

} // namespace

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw Error("cannot write " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw Error("cannot replace " + path.string() + ": " + ec.message());
    }
}

// ---- CSV ----

std::vector<SamplePoint> parse_points_csv(const std::filesystem::path& path) {
    return parse_points_csv_text(read_file(path));
}

std::vector<SamplePoint> parse_points_csv_text(std::string_view text) {
    std::vector<SamplePoint> out;
    std::size_t columns = 0;
    std::size_t line_no = 0;
    bool header = false;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        const std::string_view raw = text.substr(0, nl);
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty()) continue;
        const auto fields = split(line, ',');
        if (!header) {
            if (fields.size() < 2 || fields[0] != "x" || fields[1] != "y")
                throw Error("line " + std::to_string(line_no) + ": header must start with x,y");
            columns = fields.size();
            header = true;
            continue;
        }
        if (fields.size() != columns)
            throw Error("line " + std::to_string(line_no) + ": expected " + std::to_string(columns) +
                        " columns, found " + std::to_string(fields.size()));
        std::vector<double> values;
        for (auto f : fields) {
            const auto v = parse_real(f);
            if (!v) throw Error("line " + std::to_string(line_no) + ": not a number: '" + std::string(f) + "'");
            values.push_back(*v);
        }
        out.push_back({{values[0], values[1]}, FeatureVector(values.begin() + 2, values.end())});
    }
    if (!header) throw Error("line 1: missing header");
    return out;
}

std::string format_points_csv(std::span<const SamplePoint> points) {
    std::size_t arity = points.empty() ? 0 : points.front().features.size();
    std::string out = "x,y";
    for (std::size_t k = 0; k < arity; ++k) out += ",f" + std::to_string(k + 1);
    out += '\n';
    for (const auto& p : points) {
        if (p.features.size() != arity) throw Error("points carry payloads of different sizes");
        out += fmt("%.17g", p.position.x) + ',' + fmt("%.17g", p.position.y);
        for (double f : p.features) out += ',' + fmt("%.17g", f);
        out += '\n';
    }
    return out;
}

// ---- PGM ----

GridMask parse_mask_pgm(const std::filesystem::path& path, std::optional<BoundingBox> box) {
    return parse_mask_pgm_text(read_file(path), box);
}

GridMask parse_mask_pgm_text(std::string_view text, std::optional<BoundingBox> box) {
    std::size_t pos = 0;
    auto next_token = [&]() -> std::optional<std::string_view> {
        for (;;) {
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos < text.size() && text[pos] == '#') {
                while (pos < text.size() && text[pos] != '\n') ++pos;
                continue;
            }
            break;
        }
        if (pos >= text.size()) return std::nullopt;
        const std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != '#') ++pos;
        return text.substr(start, pos - start);
    };
    auto next_int = [&](const char* what) {
        const auto tok = next_token();
        if (!tok) throw Error("unexpected end of file");
        long v = 0;
        const auto [end, ec] = std::from_chars(tok->data(), tok->data() + tok->size(), v);
        if (ec != std::errc() || end != tok->data() + tok->size())
            throw Error(std::string("bad ") + what + ": '" + std::string(*tok) + "'");
        return v;
    };

    const auto magic = next_token();
    if (!magic || *magic != "P2") throw Error("not a plain PGM (expected magic number P2)");
    const long w = next_int("width");
    const long h = next_int("height");
    const long maxval = next_int("maxval");
    if (w < 1 || h < 1) throw Error("image dimensions must be positive");
    if (maxval < 1) throw Error("maxval must be at least 1");

    const BoundingBox frame = box.value_or(BoundingBox{{0.0, 0.0}, {static_cast<double>(w), static_cast<double>(h)}});
    GridMask mask(static_cast<int>(w), static_cast<int>(h), frame);
    for (long row = 0; row < h; ++row)
        for (long col = 0; col < w; ++col) {
            const long v = next_int("pixel");
            if (v < 0 || v > maxval) throw Error("pixel value out of range: " + std::to_string(v));
            // 2v > maxval is v > maxval/2 without rounding.
            mask.set(static_cast<int>(col), static_cast<int>(h - 1 - row), 2 * v > maxval);
        }
    if (next_token()) throw Error("more pixel values than the header dimensions allow");
    return mask;
}

std::string format_mask_pgm(const GridMask& mask) {
    std::string out = "P2\n" + std::to_string(mask.width()) + ' ' + std::to_string(mask.height()) + "\n1\n";
    for (int row = mask.height() - 1; row >= 0; --row) {
        for (int i = 0; i < mask.width(); ++i) {
            if (i) out += ' ';
            out += mask.at(i, row) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

// ---- JSON ----

nlohmann::json to_json(Point2 p) { return nlohmann::json::array({p.x, p.y}); }

nlohmann::json to_json(const BettiNumbers& b) { return {{"b0", b.b0}, {"b1", b.b1}}; }

nlohmann::json to_json(const NerveTheoremReport& r) {
    nlohmann::json j{{"b0_complex", r.complex_betti.b0}, {"b1_complex", r.complex_betti.b1},
                     {"b0_union", r.union_betti.b0},     {"b1_union", r.union_betti.b1},
                     {"agree", r.agree},                 {"resolution", r.resolution}};
    j["margin"] = std::isfinite(r.margin) ? nlohmann::json(r.margin) : nlohmann::json(nullptr);
    return j;
}

nlohmann::json to_json(const ApproximationReport& r) {
    nlohmann::json centers = nlohmann::json::array();
    for (Point2 c : r.centers) centers.push_back(to_json(c));
    return {{"n_centers", r.n_centers},
            {"radius", r.radius},
            {"coverage_fraction", r.coverage_fraction},
            {"excess_fraction", r.excess_fraction},
            {"betti_region", to_json(r.betti_region)},
            {"betti_complex", to_json(r.betti_complex)},
            {"betti_agree", r.betti_agree},
            {"betti_union", to_json(r.betti_union)},
            {"centers", centers}};
}

nlohmann::json to_json(const CoveringReport& r) {
    nlohmann::json missed = nlohmann::json::array();
    for (Point2 p : r.uncovered_samples) missed.push_back(to_json(p));
    return {{"covered", r.covered},
            {"fraction", r.fraction},
            {"total_samples", r.total_samples},
            {"uncovered_samples", missed}};
}

namespace {

nlohmann::json describe(const Region& region) {
    nlohmann::json j{{"kind", region_kind_name(region.kind())}};
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : region.points()) pts.push_back(to_json(p.position));
    nlohmann::json disks = nlohmann::json::array();
    for (const auto& d : region.disks()) disks.push_back({{"center", to_json(d.center)}, {"radius", d.radius}});
    nlohmann::json rects = nlohmann::json::array();
    for (const auto& r : region.rects()) rects.push_back({to_json(r.min), to_json(r.max)});
    if (!pts.empty()) j["points"] = pts;
    if (!disks.empty()) j["disks"] = disks;
    if (!rects.empty()) j["rects"] = rects;
    return j;
}

} // namespace

nlohmann::json to_json(const AxiomReport& report) {
    nlohmann::json results = nlohmann::json::array();
    for (const auto& r : report.results) {
        nlohmann::json j{{"axiom", r.id}, {"passed", r.passed}, {"exercised", r.exercised}, {"trials", r.trials}};
        if (r.counterexample) {
            nlohmann::json regions = nlohmann::json::array();
            for (const auto& g : r.counterexample->regions) regions.push_back(describe(g));
            j["counterexample"] = {{"note", r.counterexample->note}, {"regions", regions}};
            if (r.counterexample->point) j["counterexample"]["point"] = to_json(*r.counterexample->point);
        }
        results.push_back(j);
    }
    return {{"system", axiom_system_name(report.system)}, {"all_passed", report.all_passed()}, {"results", results}};
}

nlohmann::json to_json(const SimplicialComplex& complex) {
    nlohmann::json by_dim = nlohmann::json::array();
    for (int d = 0; d <= complex.dimension(); ++d) by_dim.push_back(complex.simplices(d));
    return {{"vertex_count", complex.vertex_count()},
            {"dimension", complex.dimension()},
            {"simplices", by_dim},
            {"facets", complex.facets()}};
}

// ---- SVG ----

std::string render_svg(const SimplicialComplex& complex, std::span<const Point2> centers, double r,
                       const SvgOptions& options) {
    if (centers.empty()) return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1\" height=\"1\"/>\n";
    BoundingBox box = BoundingBox::around(centers).expanded(r);
    const double span = std::max(box.width(), box.height());
    box = box.expanded(span * options.padding);
    const double scale = options.width / std::max(box.width(), box.height());
    const int height = static_cast<int>(std::lround(box.height() * scale));
    auto sx = [&](double x) { return fmt("%.3f", (x - box.min.x) * scale); };
    auto sy = [&](double y) { return fmt("%.3f", (box.max.y - y) * scale); };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(options.width) +
           "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(options.width) +
           ' ' + std::to_string(height) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (options.draw_balls)
        for (Point2 c : centers)
            out += "<circle class=\"ball\" cx=\"" + sx(c.x) + "\" cy=\"" + sy(c.y) + "\" r=\"" +
                   fmt("%.3f", r * scale) + "\" fill=\"#4a90d9\" fill-opacity=\"0.18\" stroke=\"#4a90d9\"/>\n";
    for (const Simplex& t : complex.simplices(2)) {
        out += "<polygon class=\"face\" points=\"";
        for (std::size_t k = 0; k < t.size(); ++k) {
            if (k) out += ' ';
            out += sx(centers[t[k]].x) + ',' + sy(centers[t[k]].y);
        }
        out += "\" fill=\"#e0a030\" fill-opacity=\"0.45\" stroke=\"none\"/>\n";
    }
    for (const Simplex& e : complex.simplices(1))
        out += "<line class=\"edge\" x1=\"" + sx(centers[e[0]].x) + "\" y1=\"" + sy(centers[e[0]].y) +
               "\" x2=\"" + sx(centers[e[1]].x) + "\" y2=\"" + sy(centers[e[1]].y) +
               "\" stroke=\"#222\" stroke-width=\"1.5\"/>\n";
    for (Point2 c : centers)
        out += "<circle class=\"vertex\" cx=\"" + sx(c.x) + "\" cy=\"" + sy(c.y) + "\" r=\"3\" fill=\"#222\"/>\n";
    out += "</svg>\n";
    return out;
}

} // namespace cech
