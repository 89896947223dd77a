#include "cech/shape.hpp"

#include "cech/error.hpp"
#include "cech/region.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <unordered_map>

namespace cech {

SamplingStrategy parse_sampling_strategy(std::string_view name) {
    if (name == "grid") return SamplingStrategy::grid;
    if (name == "poisson") return SamplingStrategy::poisson;
    if (name == "boundary+interior" || name == "boundary-interior")
        return SamplingStrategy::boundary_interior;
    throw Error("unknown sampling strategy: " + std::string(name));
}

const char* sampling_strategy_name(SamplingStrategy strategy) {
    switch (strategy) {
    case SamplingStrategy::grid: return "grid";
    case SamplingStrategy::poisson: return "poisson";
    case SamplingStrategy::boundary_interior: return "boundary+interior";
    }
    return "unknown";
}

namespace {

// Chosen centers bucketed by a square hash grid of side `reach` so distance
// queries only visit the 3x3 neighboring buckets.
class CenterIndex {
public:
    explicit CenterIndex(double reach) : reach_(reach) {}

    /// Some center q with |p - q|^2 <= reach^2 (or < when strict).
    bool any_within(Point2 p, bool strict) const {
        const auto [bx, by] = bucket(p);
        const double r2 = reach_ * reach_;
        for (long dy = -1; dy <= 1; ++dy)
            for (long dx = -1; dx <= 1; ++dx) {
                auto it = buckets_.find(key(bx + dx, by + dy));
                if (it == buckets_.end()) continue;
                for (Point2 q : it->second) {
                    const double ex = p.x - q.x, ey = p.y - q.y;
                    const double d2 = ex * ex + ey * ey;
                    if (strict ? d2 < r2 : d2 <= r2) return true;
                }
            }
        return false;
    }

    void add(Point2 p) {
        const auto [bx, by] = bucket(p);
        buckets_[key(bx, by)].push_back(p);
        points_.push_back(p);
    }

    std::vector<Point2> take() { return std::move(points_); }

private:
    std::pair<long, long> bucket(Point2 p) const {
        return {static_cast<long>(std::floor(p.x / reach_)), static_cast<long>(std::floor(p.y / reach_))};
    }
    static long long key(long x, long y) { return (static_cast<long long>(x) << 32) ^ (y & 0xffffffffLL); }

    double reach_;
    std::unordered_map<long long, std::vector<Point2>> buckets_;
    std::vector<Point2> points_;
};

bool is_boundary_cell(const GridMask& m, int i, int j) {
    if (i == 0 || j == 0 || i == m.width() - 1 || j == m.height() - 1) return true;
    return !m.at(i - 1, j) || !m.at(i + 1, j) || !m.at(i, j - 1) || !m.at(i, j + 1);
}

void lattice_then_fill(const GridMask& m, double spacing, CenterIndex& chosen, bool skip_boundary) {
    const int sx = std::max(1, static_cast<int>(std::floor(spacing / m.cell_width())));
    const int sy = std::max(1, static_cast<int>(std::floor(spacing / m.cell_height())));
    for (int j = 0; j < m.height(); j += sy)
        for (int i = 0; i < m.width(); i += sx) {
            if (!m.at(i, j) || (skip_boundary && is_boundary_cell(m, i, j))) continue;
            const Point2 c = m.cell_center(i, j);
            if (!chosen.any_within(c, true) || !skip_boundary) chosen.add(c);
        }
    for (int j = 0; j < m.height(); ++j)
        for (int i = 0; i < m.width(); ++i) {
            if (!m.at(i, j)) continue;
            const Point2 c = m.cell_center(i, j);
            if (!chosen.any_within(c, false)) chosen.add(c);
        }
}

} // namespace

std::vector<Point2> sample_region(const GridMask& mask, const SamplingOptions& options) {
    if (mask.empty()) throw Error("empty mask");
    if (!(options.spacing > 0.0) || !std::isfinite(options.spacing))
        throw Error("spacing must be positive");
    int i0 = mask.width(), i1 = -1, j0 = mask.height(), j1 = -1;
    for (int j = 0; j < mask.height(); ++j)
        for (int i = 0; i < mask.width(); ++i)
            if (mask.at(i, j)) {
                i0 = std::min(i0, i);
                i1 = std::max(i1, i);
                j0 = std::min(j0, j);
                j1 = std::max(j1, j);
            }
    const double extent = std::max((i1 - i0 + 1) * mask.cell_width(), (j1 - j0 + 1) * mask.cell_height());
    if (options.spacing > extent) throw Error("spacing exceeds the mask extent");

    CenterIndex chosen(options.spacing);
    switch (options.strategy) {
    case SamplingStrategy::grid:
        lattice_then_fill(mask, options.spacing, chosen, false);
        break;
    case SamplingStrategy::poisson: {
        std::vector<Point2> cells;
        for (int j = 0; j < mask.height(); ++j)
            for (int i = 0; i < mask.width(); ++i)
                if (mask.at(i, j)) cells.push_back(mask.cell_center(i, j));
        std::mt19937_64 rng(options.seed);
        std::shuffle(cells.begin(), cells.end(), rng);
        for (Point2 c : cells)
            if (!chosen.any_within(c, true)) chosen.add(c);
        break;
    }
    case SamplingStrategy::boundary_interior:
        for (int j = 0; j < mask.height(); ++j)
            for (int i = 0; i < mask.width(); ++i) {
                if (!mask.at(i, j) || !is_boundary_cell(mask, i, j)) continue;
                const Point2 c = mask.cell_center(i, j);
                if (!chosen.any_within(c, true)) chosen.add(c);
            }
        lattice_then_fill(mask, options.spacing, chosen, true);
        break;
    }
    return chosen.take();
}

ApproximationReport assess_centers(const GridMask& mask, std::vector<Point2> centers, double r) {
    if (!(r > 0.0) || !std::isfinite(r)) throw Error("radius must be positive");
    if (centers.empty()) throw Error("no centers");
    ApproximationReport report;
    report.n_centers = centers.size();
    report.radius = r;

    const double density = 1.0 / std::min(mask.cell_width(), mask.cell_height());
    const Region region = Region::grid_mask(mask);
    report.coverage_fraction = covering_check(region, centers, r, density).fraction;

    // Extend the mask grid by whole cells so the union is rasterized on the same lattice.
    const int px = static_cast<int>(std::ceil(r / mask.cell_width())) + 1;
    const int py = static_cast<int>(std::ceil(r / mask.cell_height())) + 1;
    const BoundingBox& b = mask.box();
    const BoundingBox wide{{b.min.x - px * mask.cell_width(), b.min.y - py * mask.cell_height()},
                           {b.max.x + px * mask.cell_width(), b.max.y + py * mask.cell_height()}};
    std::vector<Disk> disks;
    for (Point2 c : centers) disks.emplace_back(c, r);
    const GridMask uni = rasterize_union(disks, wide, mask.width() + 2 * px, mask.height() + 2 * py);
    std::size_t outside = 0;
    for (int j = 0; j < uni.height(); ++j)
        for (int i = 0; i < uni.width(); ++i) {
            if (!uni.at(i, j)) continue;
            const int mi = i - px, mj = j - py;
            const bool in_mask = mi >= 0 && mj >= 0 && mi < mask.width() && mj < mask.height() && mask.at(mi, mj);
            if (!in_mask) ++outside;
        }
    report.excess_fraction = static_cast<double>(outside) / static_cast<double>(mask.count());

    report.betti_region = grid_betti(mask);
    report.betti_complex = complex_betti(build_cech_complex(centers, r, 2));
    report.betti_union = grid_betti(uni);
    report.betti_agree = report.betti_region == report.betti_complex;
    report.centers = std::move(centers);
    return report;
}

ApproximationReport approximate_shape(const GridMask& mask, const SamplingOptions& options, double r) {
    if (!(r > 0.0) || !std::isfinite(r)) throw Error("radius must be positive");
    return assess_centers(mask, sample_region(mask, options), r);
}

} // namespace cech
