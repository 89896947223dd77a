#include "cech/geometry.hpp"

#include "cech/error.hpp"
#include "cech/simd/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace cech {

Point2::Point2(double x_, double y_) : x(x_), y(y_) {
    if (!std::isfinite(x_) || !std::isfinite(y_)) throw Error("point coordinates must be finite");
}

Disk::Disk(Point2 center_, double radius_) : center(center_), radius(radius_) {
    if (!(radius_ > 0.0) || !std::isfinite(radius_)) throw Error("disk radius must be positive");
}

BoundingBox::BoundingBox(Point2 min_, Point2 max_) : min(min_), max(max_) {
    if (min.x > max.x || min.y > max.y) throw Error("bounding box min exceeds max");
}

BoundingBox BoundingBox::around(std::span<const Point2> points) {
    if (points.empty()) throw Error("empty point set");
    Point2 lo = points.front();
    Point2 hi = points.front();
    for (const Point2& p : points) {
        lo.x = std::min(lo.x, p.x);
        lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x);
        hi.y = std::max(hi.y, p.y);
    }
    return {lo, hi};
}

bool BoundingBox::contains(Point2 p) const {
    return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y;
}

BoundingBox BoundingBox::expanded(double margin) const {
    return {{min.x - margin, min.y - margin}, {max.x + margin, max.y + margin}};
}

GridMask::GridMask(int width, int height, BoundingBox box)
    : GridMask(width, height, box,
               std::vector<std::uint8_t>(
                   width > 0 && height > 0 ? static_cast<std::size_t>(width) * height : 0, 0)) {}

GridMask::GridMask(int width, int height, BoundingBox box, std::vector<std::uint8_t> cells)
    : width_(width), height_(height), box_(box), cells_(std::move(cells)) {
    if (width < 1 || height < 1) throw Error("grid dimensions must be positive");
    if (!box_.has_area()) throw Error("zero-area box");
    if (cells_.size() != static_cast<std::size_t>(width) * height)
        throw Error("cell count does not match grid dimensions");
    for (auto& c : cells_) c = c != 0 ? 1 : 0;
}

double GridMask::column_x(int i) const { return box_.min.x + (i + 0.5) * cell_width(); }
double GridMask::row_y(int j) const { return box_.min.y + (j + 0.5) * cell_height(); }

std::size_t GridMask::count() const {
    return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), std::uint8_t{1}));
}

double distance(Point2 p, Point2 q) { return std::hypot(p.x - q.x, p.y - q.y); }

double squared_distance(Point2 p, Point2 q) {
    const double dx = p.x - q.x;
    const double dy = p.y - q.y;
    return dx * dx + dy * dy;
}

// ---- smallest enclosing circle (randomized incremental, Welzl style) ----

namespace {

struct Circle {
    Point2 c;
    double r = -1.0;

    bool valid() const { return r >= 0.0; }
    bool contains(Point2 p) const { return distance(c, p) <= r * (1.0 + 1e-14) + 1e-15; }
};

double cross(Point2 o, Point2 a, Point2 b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Circle diameter_circle(Point2 a, Point2 b) {
    const Point2 c{(a.x + b.x) / 2.0, (a.y + b.y) / 2.0};
    return {c, std::max(distance(c, a), distance(c, b))};
}

Circle circumcircle(Point2 a, Point2 b, Point2 c) {
    // Work relative to the bounding-box center to limit cancellation.
    const double ox = (std::min({a.x, b.x, c.x}) + std::max({a.x, b.x, c.x})) / 2.0;
    const double oy = (std::min({a.y, b.y, c.y}) + std::max({a.y, b.y, c.y})) / 2.0;
    const double ax = a.x - ox, ay = a.y - oy;
    const double bx = b.x - ox, by = b.y - oy;
    const double cx = c.x - ox, cy = c.y - oy;
    const double d = (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by)) * 2.0;
    if (d == 0.0) return {};
    const double a2 = ax * ax + ay * ay;
    const double b2 = bx * bx + by * by;
    const double c2 = cx * cx + cy * cy;
    const double x = (a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d;
    const double y = (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d;
    if (!std::isfinite(x) || !std::isfinite(y)) return {};
    const Point2 center{ox + x, oy + y};
    return {center, std::max({distance(center, a), distance(center, b), distance(center, c)})};
}

// Smallest circle through p and q containing points[0, end).
Circle circle_with_two(std::span<const Point2> points, std::size_t end, Point2 p, Point2 q) {
    const Circle base = diameter_circle(p, q);
    Circle left;
    Circle right;
    for (std::size_t k = 0; k < end; ++k) {
        const Point2 r = points[k];
        if (base.contains(r)) continue;
        const double side = cross(p, q, r);
        const Circle c = circumcircle(p, q, r);
        if (!c.valid()) continue;
        const double offset = cross(p, q, c.c);
        if (side > 0.0 && (!left.valid() || offset > cross(p, q, left.c))) {
            left = c;
        } else if (side < 0.0 && (!right.valid() || offset < cross(p, q, right.c))) {
            right = c;
        }
    }
    if (!left.valid() && !right.valid()) return base;
    if (!left.valid()) return right;
    if (!right.valid()) return left;
    return left.r <= right.r ? left : right;
}

// Smallest circle with p on its boundary containing points[0, end).
Circle circle_with_one(std::span<const Point2> points, std::size_t end, Point2 p) {
    Circle c{p, 0.0};
    for (std::size_t k = 0; k < end; ++k) {
        const Point2 q = points[k];
        if (c.contains(q)) continue;
        c = (c.r == 0.0) ? diameter_circle(p, q) : circle_with_two(points, k, p, q);
    }
    return c;
}

} // namespace

EnclosingCircle min_enclosing_disk(std::span<const Point2> points) {
    if (points.empty()) throw Error("empty point set");

    std::vector<Point2> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(),
              [](Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    // Fixed seed keeps the function pure; expected linear time still holds for
    // inputs that are not adversarially ordered against this permutation.
    std::mt19937 rng(0x5eedu);
    std::shuffle(pts.begin(), pts.end(), rng);

    Circle c;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        if (!c.valid() || !c.contains(pts[k])) c = circle_with_one(pts, k, pts[k]);
    }
    return {c.c, c.r};
}

bool disks_common_point(std::span<const Point2> centers, double r, double tie_tolerance) {
    if (centers.empty()) throw Error("empty point set");
    if (!(r > 0.0)) throw Error("radius must be positive");
    if (centers.size() == 1) return true;
    if (centers.size() == 2) {
        // Fast path; identical to comparing the diameter circle radius.
        return distance(centers[0], centers[1]) / 2.0 <= r + tie_tolerance;
    }
    return min_enclosing_disk(centers).radius <= r + tie_tolerance;
}

bool point_in_disk(Point2 p, const Disk& d) {
    const double dx = p.x - d.center.x;
    const double dy = p.y - d.center.y;
    return dx * dx + dy * dy <= d.radius * d.radius;
}

bool point_in_disk_interior(Point2 p, const Disk& d) {
    const double dx = p.x - d.center.x;
    const double dy = p.y - d.center.y;
    return dx * dx + dy * dy < d.radius * d.radius;
}

GridMask rasterize_union(std::span<const Disk> disks, const BoundingBox& box, int width,
                         int height) {
    if (width < 1 || height < 1) throw Error("grid dimensions must be positive");
    if (!box.has_area()) throw Error("zero-area box");
    GridMask mask(width, height, box);

    std::vector<double> xs(static_cast<std::size_t>(width));
    for (int i = 0; i < width; ++i) xs[static_cast<std::size_t>(i)] = mask.column_x(i);

    const auto& kernels = simd::active_kernels();
    const double cw = mask.cell_width();
    const double ch = mask.cell_height();
    auto cells = mask.cells();

    for (const Disk& d : disks) {
        // Cell window padded by one cell; the kernel decides exact membership.
        const int i_lo = std::max(0, static_cast<int>(std::floor((d.center.x - d.radius - box.min.x) / cw)) - 1);
        const int i_hi = std::min(width - 1, static_cast<int>(std::ceil((d.center.x + d.radius - box.min.x) / cw)) + 1);
        const int j_lo = std::max(0, static_cast<int>(std::floor((d.center.y - d.radius - box.min.y) / ch)) - 1);
        const int j_hi = std::min(height - 1, static_cast<int>(std::ceil((d.center.y + d.radius - box.min.y) / ch)) + 1);
        if (i_lo > i_hi || j_lo > j_hi) continue;

        const double r2 = d.radius * d.radius;
        for (int j = j_lo; j <= j_hi; ++j) {
            const double dy = mask.row_y(j) - d.center.y;
            const double dy2 = dy * dy;
            if (dy2 > r2) continue;
            kernels.mark_disk_span(xs.data() + i_lo, static_cast<std::size_t>(i_hi - i_lo + 1),
                                   d.center.x, dy2, r2, cells.data() + mask.index(i_lo, j));
        }
    }
    return mask;
}

} // namespace cech
