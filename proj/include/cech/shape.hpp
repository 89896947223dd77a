#pragma once

#include "cech/complex.hpp"
#include "cech/geometry.hpp"
#include "cech/homology.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace cech {

enum class SamplingStrategy { grid, poisson, boundary_interior };

/// "grid", "poisson", "boundary+interior".
SamplingStrategy parse_sampling_strategy(std::string_view name);
const char* sampling_strategy_name(SamplingStrategy strategy);

struct SamplingOptions {
    SamplingStrategy strategy = SamplingStrategy::grid;
    /// Lattice spacing, or the minimum distance for poisson.
    double spacing = 1.0;
    std::uint64_t seed = 0;
};

/// Picks centers among true cell centers.
///
/// grid: lattice cells every floor(spacing / cell) cells, then any true cell
/// farther than `spacing` from every chosen center is added in scan order, so
/// every true cell center ends up within `spacing` of a center.
/// poisson: seeded dart throwing over cell centers, pairwise distances >= spacing.
/// boundary+interior: boundary cells thinned to `spacing`, then the grid rule.
///
/// Throws on an empty mask, nonpositive spacing, or spacing above the extent
/// of the true cells.
std::vector<Point2> sample_region(const GridMask& mask, const SamplingOptions& options);

struct ApproximationReport {
    std::size_t n_centers = 0;
    double radius = 0.0;
    double coverage_fraction = 0.0;
    /// Union cells outside the mask per mask cell.
    double excess_fraction = 0.0;
    BettiNumbers betti_region;
    BettiNumbers betti_complex;
    bool betti_agree = false;
    /// Betti numbers of the rasterized ball union, for diagnosis.
    BettiNumbers betti_union;
    std::vector<Point2> centers;
};

/// Coverage is covering_check on every true cell; excess counts union cells
/// outside the mask on the mask grid extended by r on each side.
ApproximationReport approximate_shape(const GridMask& mask, const SamplingOptions& options,
                                      double r);

/// Same report for caller-chosen centers.
ApproximationReport assess_centers(const GridMask& mask, std::vector<Point2> centers, double r);

} // namespace cech
