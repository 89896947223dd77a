#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cech {

/// Absolute slack used when comparing an enclosing radius against a ball radius.
/// Tangent closed balls share a point, so ties resolve to "intersecting".
inline constexpr double kTieTolerance = 1e-9;

/// A point of the plane. Coordinates must be finite.
class Point2 {
public:
    constexpr Point2() = default;
    Point2(double x, double y);

    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

/// Closed ball of positive radius.
class Disk {
public:
    Disk(Point2 center, double radius);

    Point2 center;
    double radius;

    friend bool operator==(const Disk&, const Disk&) = default;
};

/// Smallest enclosing circle of a point set. Unlike Disk the radius may be zero.
struct EnclosingCircle {
    Point2 center;
    double radius = 0.0;
};

class BoundingBox {
public:
    BoundingBox(Point2 min, Point2 max);

    /// Tight box around a nonempty point list.
    static BoundingBox around(std::span<const Point2> points);

    Point2 min;
    Point2 max;

    double width() const { return max.x - min.x; }
    double height() const { return max.y - min.y; }
    bool has_area() const { return width() > 0.0 && height() > 0.0; }
    bool contains(Point2 p) const;
    BoundingBox expanded(double margin) const;

    friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

/// Row-major occupancy grid over a box. Cell (i, j) is column i, row j and
/// stands for the point at the center of its subcell.
class GridMask {
public:
    GridMask(int width, int height, BoundingBox box);
    GridMask(int width, int height, BoundingBox box, std::vector<std::uint8_t> cells);

    int width() const { return width_; }
    int height() const { return height_; }
    const BoundingBox& box() const { return box_; }
    double cell_width() const { return box_.width() / width_; }
    double cell_height() const { return box_.height() / height_; }

    std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * width_ + i; }
    bool at(int i, int j) const { return cells_[index(i, j)] != 0; }
    void set(int i, int j, bool value) { cells_[index(i, j)] = value ? 1 : 0; }

    double column_x(int i) const;
    double row_y(int j) const;
    Point2 cell_center(int i, int j) const { return {column_x(i), row_y(j)}; }

    std::size_t count() const;
    bool empty() const { return count() == 0; }

    std::span<const std::uint8_t> cells() const { return cells_; }
    std::span<std::uint8_t> cells() { return cells_; }

    friend bool operator==(const GridMask&, const GridMask&) = default;

private:
    int width_;
    int height_;
    BoundingBox box_;
    std::vector<std::uint8_t> cells_;
};

double distance(Point2 p, Point2 q);
double squared_distance(Point2 p, Point2 q);

/// Smallest circle containing every point. Throws on an empty list.
EnclosingCircle min_enclosing_disk(std::span<const Point2> points);

/// True iff the closed balls of radius r around all centers share a point.
bool disks_common_point(std::span<const Point2> centers, double r,
                        double tie_tolerance = kTieTolerance);

/// Closed-ball membership (boundary included).
bool point_in_disk(Point2 p, const Disk& d);
/// Open-ball membership.
bool point_in_disk_interior(Point2 p, const Disk& d);

/// Marks every cell whose center lies in at least one closed disk.
GridMask rasterize_union(std::span<const Disk> disks, const BoundingBox& box, int width,
                         int height);

} // namespace cech
