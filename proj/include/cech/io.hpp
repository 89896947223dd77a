#pragma once

#include "cech/axioms.hpp"
#include "cech/complex.hpp"
#include "cech/homology.hpp"
#include "cech/region.hpp"
#include "cech/shape.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cech {

/// Header `x,y[,f1,...,fn]`; extra columns become the feature payload.
/// Errors name the offending line.
std::vector<SamplePoint> parse_points_csv(const std::filesystem::path& path);
std::vector<SamplePoint> parse_points_csv_text(std::string_view text);
std::string format_points_csv(std::span<const SamplePoint> points);

/// Plain P2 graymap. A cell is true iff its value exceeds maxval/2. The first
/// image row is the top of the mask; the box defaults to [0,w] x [0,h].
GridMask parse_mask_pgm(const std::filesystem::path& path,
                        std::optional<BoundingBox> box = std::nullopt);
GridMask parse_mask_pgm_text(std::string_view text, std::optional<BoundingBox> box = std::nullopt);
std::string format_mask_pgm(const GridMask& mask);

std::string read_file(const std::filesystem::path& path);
/// Writes to a sibling temp file, then renames over the target.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

nlohmann::json to_json(const BettiNumbers& b);
nlohmann::json to_json(const NerveTheoremReport& report);
nlohmann::json to_json(const ApproximationReport& report);
nlohmann::json to_json(const CoveringReport& report);
nlohmann::json to_json(const AxiomReport& report);
nlohmann::json to_json(const SimplicialComplex& complex);
nlohmann::json to_json(Point2 p);

struct SvgOptions {
    int width = 640;
    double padding = 0.05;
    bool draw_balls = true;
};

/// One translucent circle per ball, one line per edge and one filled polygon
/// per triangle, in index order so equal input gives identical bytes.
std::string render_svg(const SimplicialComplex& complex, std::span<const Point2> centers, double r,
                       const SvgOptions& options = {});

} // namespace cech
