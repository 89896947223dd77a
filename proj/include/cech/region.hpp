#pragma once

#include "cech/geometry.hpp"

#include <optional>
#include <span>
#include <vector>

namespace cech {

using FeatureVector = std::vector<double>;

/// A point together with its measured feature payload (possibly empty).
struct SamplePoint {
    Point2 position;
    FeatureVector features;

    friend bool operator==(const SamplePoint&, const SamplePoint&) = default;
};

/// Closed axis-aligned rectangle with positive area (one mask cell, or the ambient box).
struct Rect {
    Point2 min;
    Point2 max;
};

enum class RegionKind { empty, point_set, disk_union, grid_mask, whole, composite };

const char* region_kind_name(RegionKind kind);

/// A finite, bounded planar region.
///
/// Geometrically a region is a finite union of pieces: isolated points, closed
/// disks and closed rectangles. Every region also carries a finite list of
/// sample points with features, which is what descriptive relations look at.
/// For point sets the samples are the points themselves; disk unions default to
/// their centers and masks to their cell centers. Unions of regions of
/// different kinds are `composite`; any union with the whole space is the whole
/// space.
class Region {
public:
    /// The empty set.
    static Region empty_region();
    static Region point_set(std::vector<SamplePoint> points,
                            std::optional<BoundingBox> ambient = std::nullopt);
    static Region point_set(std::span<const Point2> points,
                            std::optional<BoundingBox> ambient = std::nullopt);
    static Region singleton(SamplePoint point, std::optional<BoundingBox> ambient = std::nullopt);
    static Region disk_union(std::vector<Disk> disks, std::vector<SamplePoint> samples = {},
                             std::optional<BoundingBox> ambient = std::nullopt);
    /// Union of the closed true cells. The ambient box is the mask box.
    static Region grid_mask(GridMask mask, std::vector<SamplePoint> samples = {});
    /// The ambient space X itself, a closed box.
    static Region whole(BoundingBox box, std::vector<SamplePoint> samples = {});

    static Region unite(const Region& a, const Region& b);

    RegionKind kind() const { return kind_; }
    bool is_empty() const { return kind_ == RegionKind::empty; }
    bool is_whole() const { return kind_ == RegionKind::whole; }
    /// Exactly one point (possibly listed more than once).
    bool is_singleton() const;

    const std::optional<BoundingBox>& ambient() const { return ambient_; }

    std::span<const SamplePoint> points() const { return points_; }
    std::span<const Disk> disks() const { return disks_; }
    std::span<const Rect> rects() const { return rects_; }
    const std::optional<GridMask>& mask() const { return mask_; }

    /// Descriptive payload: point pieces followed by attached samples.
    std::vector<SamplePoint> samples() const;

    /// Closed membership.
    bool contains(Point2 p) const;
    /// Interior membership. Exact for points inside an open piece and for points
    /// on shared cell edges; a point whose neighborhood is covered only jointly by
    /// curved boundaries through it is conservatively reported as not interior.
    bool interior_contains(Point2 p) const;
    bool has_interior() const { return !disks_.empty() || !rects_.empty(); }

private:
    Region() = default;

    RegionKind kind_ = RegionKind::empty;
    std::vector<SamplePoint> points_;
    std::vector<Disk> disks_;
    std::vector<Rect> rects_;
    std::vector<SamplePoint> samples_;
    std::optional<GridMask> mask_;
    std::optional<BoundingBox> ambient_;
};

/// Minimum Euclidean distance between the two closed sets; +inf if either is empty.
double region_distance(const Region& a, const Region& b);

/// Exact predicate for A ∩ B ≠ ∅ on the closed pieces.
bool regions_intersect(const Region& a, const Region& b);

/// Int A ∩ Int B ≠ ∅. Both regions are finite unions of closed pieces, so this
/// holds iff some open piece of A meets some open piece of B.
bool interiors_overlap(const Region& a, const Region& b);

/// Sound (not complete) test for A ⊆ B: every piece of A lies in a single piece of B.
bool piecewise_subset(const Region& a, const Region& b);

} // namespace cech
