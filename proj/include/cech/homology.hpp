#pragma once

#include "cech/complex.hpp"
#include "cech/descriptive.hpp"
#include "cech/geometry.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace cech {

struct BettiNumbers {
    int b0 = 0;
    int b1 = 0;

    friend bool operator==(const BettiNumbers&, const BettiNumbers&) = default;
};

/// Boundary map from dimension k to k-1 over Z/2, stored column-sparse:
/// column c lists the row indices of the faces of cols[c], ascending.
struct BoundaryMatrix {
    std::vector<Simplex> rows;
    std::vector<Simplex> cols;
    std::vector<std::vector<int>> columns;
};

/// ∂_k of the complex. Requires k >= 1.
BoundaryMatrix boundary_matrix(const SimplicialComplex& complex, int k);

/// Rank over the two-element field by column reduction.
std::size_t z2_rank(const BoundaryMatrix& matrix);

/// b0 = V - rank ∂1, b1 = (E - rank ∂1) - rank ∂2. Throws on an empty complex.
BettiNumbers complex_betti(const SimplicialComplex& complex);

/// Connected components of the 1-skeleton by union-find.
int union_find_b0(const SimplicialComplex& complex);

/// b0 = 4-connected true components, b1 = 8-connected false components that
/// do not reach the frame. Throws "empty union" on an all-false mask.
BettiNumbers grid_betti(const GridMask& mask);

struct MarginOptions {
    /// Critical radii within this fraction of r are rejected.
    double relative = 1e-3;
    /// Necks, gaps and holes thinner than this many cells are rejected.
    double thin_cells = 3.0;
    /// An exposed crossing of two circles is rejected when its outer wedge widens
    /// slower than this (half-width per unit length from the tip).
    double min_wedge_slope = 0.5;
};

struct NerveTheoremReport {
    BettiNumbers complex_betti;
    BettiNumbers union_betti;
    bool agree = false;
    int resolution = 0;
    /// Smallest distance between r and any critical radius of the configuration
    /// (half pair distances and triple circumradii); +inf for a single ball.
    double margin = 0.0;
};

/// Square raster of side `resolution` around the balls, with square cells.
BoundingBox raster_box(std::span<const Point2> centers, double r, int resolution);

/// Throws UnstableConfiguration when a pair or triple of balls sits too close to
/// a combinatorial change for the raster to resolve. Returns the observed margin.
double check_margins(std::span<const Point2> centers, double r, double cell,
                     const MarginOptions& options = {});

/// Compares (b0, b1) of the Čech complex with those of the rasterized union.
NerveTheoremReport nerve_theorem_check(std::span<const Point2> centers, double r, int resolution,
                                       const MarginOptions& options = {});

/// Maps the domain through Φ (1D values become points on the x axis) and runs
/// nerve_theorem_check on the feature points with radius feature_radius.
/// Throws "union oracle unavailable" for features of dimension above 2.
NerveTheoremReport descriptive_nerve_theorem_check(std::span<const SamplePoint> domain,
                                                   const FeatureMap& phi, double feature_radius,
                                                   int resolution,
                                                   const MarginOptions& options = {});

/// Φ(domain) as planar points.
std::vector<Point2> feature_points(std::span<const SamplePoint> domain, const FeatureMap& phi);

} // namespace cech
