#include "cech/region.hpp"

#include "cech/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cech {

const char* region_kind_name(RegionKind kind) {
    switch (kind) {
    case RegionKind::empty: return "empty";
    case RegionKind::point_set: return "point-set";
    case RegionKind::disk_union: return "disk-union";
    case RegionKind::grid_mask: return "grid-mask";
    case RegionKind::whole: return "whole";
    case RegionKind::composite: return "composite";
    }
    return "unknown";
}

Region Region::empty_region() { return Region{}; }

Region Region::point_set(std::vector<SamplePoint> points, std::optional<BoundingBox> ambient) {
    if (points.empty()) return empty_region();
    Region r;
    r.kind_ = RegionKind::point_set;
    r.points_ = std::move(points);
    r.ambient_ = ambient;
    return r;
}

Region Region::point_set(std::span<const Point2> points, std::optional<BoundingBox> ambient) {
    std::vector<SamplePoint> pts;
    pts.reserve(points.size());
    for (Point2 p : points) pts.push_back({p, {}});
    return point_set(std::move(pts), ambient);
}

Region Region::singleton(SamplePoint point, std::optional<BoundingBox> ambient) {
    return point_set(std::vector<SamplePoint>{std::move(point)}, ambient);
}

Region Region::disk_union(std::vector<Disk> disks, std::vector<SamplePoint> samples,
                          std::optional<BoundingBox> ambient) {
    if (disks.empty()) return empty_region();
    Region r;
    r.kind_ = RegionKind::disk_union;
    if (samples.empty()) {
        for (const Disk& d : disks) samples.push_back({d.center, {}});
    }
    r.disks_ = std::move(disks);
    r.samples_ = std::move(samples);
    r.ambient_ = ambient;
    return r;
}

Region Region::grid_mask(GridMask mask, std::vector<SamplePoint> samples) {
    if (mask.empty()) return empty_region();
    Region r;
    r.kind_ = RegionKind::grid_mask;
    const double cw = mask.cell_width();
    const double ch = mask.cell_height();
    const BoundingBox& box = mask.box();
    const bool fill_samples = samples.empty();
    for (int j = 0; j < mask.height(); ++j) {
        for (int i = 0; i < mask.width(); ++i) {
            if (!mask.at(i, j)) continue;
            r.rects_.push_back({{box.min.x + i * cw, box.min.y + j * ch},
                                {box.min.x + (i + 1) * cw, box.min.y + (j + 1) * ch}});
            if (fill_samples) samples.push_back({mask.cell_center(i, j), {}});
        }
    }
    r.samples_ = std::move(samples);
    r.ambient_ = box;
    r.mask_ = std::move(mask);
    return r;
}

Region Region::whole(BoundingBox box, std::vector<SamplePoint> samples) {
    if (!box.has_area()) throw Error("zero-area box");
    Region r;
    r.kind_ = RegionKind::whole;
    r.rects_.push_back({box.min, box.max});
    r.samples_ = std::move(samples);
    r.ambient_ = box;
    return r;
}

Region Region::unite(const Region& a, const Region& b) {
    if (a.ambient_ && b.ambient_ && !(*a.ambient_ == *b.ambient_))
        throw Error("regions live in different ambient boxes");
    if (a.is_empty()) return b;
    if (b.is_empty()) return a;

    Region r;
    r.ambient_ = a.ambient_ ? a.ambient_ : b.ambient_;
    r.samples_ = a.samples();
    for (const auto& s : b.samples()) r.samples_.push_back(s);

    if (a.is_whole() || b.is_whole()) {
        r.kind_ = RegionKind::whole;
        r.rects_ = a.is_whole() ? a.rects_ : b.rects_;
        return r;
    }

    r.kind_ = a.kind_ == b.kind_ && a.kind_ != RegionKind::grid_mask ? a.kind_
                                                                     : RegionKind::composite;
    if (r.kind_ == RegionKind::point_set) {
        // Point sets keep their payload as pieces, not as attached samples.
        r.samples_.clear();
    }
    r.points_ = a.points_;
    r.points_.insert(r.points_.end(), b.points_.begin(), b.points_.end());
    r.disks_ = a.disks_;
    r.disks_.insert(r.disks_.end(), b.disks_.begin(), b.disks_.end());
    r.rects_ = a.rects_;
    r.rects_.insert(r.rects_.end(), b.rects_.begin(), b.rects_.end());
    if (r.kind_ == RegionKind::composite) {
        // Point pieces already appear in samples(); avoid listing them twice.
        std::erase_if(r.samples_, [&](const SamplePoint& s) {
            return std::find(r.points_.begin(), r.points_.end(), s) != r.points_.end();
        });
    }
    return r;
}

bool Region::is_singleton() const {
    if (kind_ != RegionKind::point_set || points_.empty()) return false;
    const Point2 first = points_.front().position;
    return std::all_of(points_.begin(), points_.end(),
                       [&](const SamplePoint& s) { return s.position == first; });
}

std::vector<SamplePoint> Region::samples() const {
    std::vector<SamplePoint> out = points_;
    out.insert(out.end(), samples_.begin(), samples_.end());
    return out;
}

namespace {

double squared_distance_to_rect(Point2 p, const Rect& r) {
    const double dx = std::max({r.min.x - p.x, 0.0, p.x - r.max.x});
    const double dy = std::max({r.min.y - p.y, 0.0, p.y - r.max.y});
    return dx * dx + dy * dy;
}

bool rect_contains(const Rect& r, Point2 p) {
    return p.x >= r.min.x && p.x <= r.max.x && p.y >= r.min.y && p.y <= r.max.y;
}

bool rect_open_contains(const Rect& r, Point2 p) {
    return p.x > r.min.x && p.x < r.max.x && p.y > r.min.y && p.y < r.max.y;
}

double rect_rect_distance(const Rect& a, const Rect& b) {
    const double dx = std::max({a.min.x - b.max.x, 0.0, b.min.x - a.max.x});
    const double dy = std::max({a.min.y - b.max.y, 0.0, b.min.y - a.max.y});
    return std::hypot(dx, dy);
}

double point_piece_distance(Point2 p, const Region& r) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& q : r.points()) best = std::min(best, distance(p, q.position));
    for (const auto& d : r.disks()) best = std::min(best, std::max(0.0, distance(p, d.center) - d.radius));
    for (const auto& rc : r.rects()) best = std::min(best, std::sqrt(squared_distance_to_rect(p, rc)));
    return best;
}

} // namespace

bool Region::contains(Point2 p) const {
    for (const auto& q : points_)
        if (q.position == p) return true;
    for (const auto& d : disks_)
        if (point_in_disk(p, d)) return true;
    for (const auto& rc : rects_)
        if (rect_contains(rc, p)) return true;
    return false;
}

bool Region::interior_contains(Point2 p) const {
    for (const auto& d : disks_)
        if (point_in_disk_interior(p, d)) return true;
    for (const auto& rc : rects_)
        if (rect_open_contains(rc, p)) return true;

    // p sits on piece boundaries only. It is interior iff each of the four closed
    // quadrants at p is swept, near p, by a single piece.
    for (const int sx : {1, -1}) {
        for (const int sy : {1, -1}) {
            bool covered = false;
            for (const auto& rc : rects_) {
                if (!rect_contains(rc, p)) continue;
                const bool x_ok = sx > 0 ? rc.max.x > p.x : rc.min.x < p.x;
                const bool y_ok = sy > 0 ? rc.max.y > p.y : rc.min.y < p.y;
                if (x_ok && y_ok) { covered = true; break; }
            }
            if (!covered) {
                for (const auto& d : disks_) {
                    if (!point_in_disk(p, d)) continue;
                    const double nx = d.center.x - p.x;
                    const double ny = d.center.y - p.y;
                    if (nx * sx > 0.0 && ny * sy > 0.0) { covered = true; break; }
                }
            }
            if (!covered) return false;
        }
    }
    return true;
}

double region_distance(const Region& a, const Region& b) {
    double best = std::numeric_limits<double>::infinity();
    if (a.is_empty() || b.is_empty()) return best;
    for (const auto& p : a.points()) best = std::min(best, point_piece_distance(p.position, b));
    for (const auto& p : b.points()) best = std::min(best, point_piece_distance(p.position, a));
    for (const auto& d : a.disks()) {
        for (const auto& e : b.disks())
            best = std::min(best, std::max(0.0, distance(d.center, e.center) - d.radius - e.radius));
        for (const auto& rc : b.rects())
            best = std::min(best, std::max(0.0, std::sqrt(squared_distance_to_rect(d.center, rc)) - d.radius));
    }
    for (const auto& rc : a.rects()) {
        for (const auto& e : b.disks())
            best = std::min(best, std::max(0.0, std::sqrt(squared_distance_to_rect(e.center, rc)) - e.radius));
        for (const auto& sc : b.rects()) best = std::min(best, rect_rect_distance(rc, sc));
    }
    return best;
}

bool regions_intersect(const Region& a, const Region& b) {
    if (a.is_empty() || b.is_empty()) return false;
    for (const auto& p : a.points())
        if (b.contains(p.position)) return true;
    for (const auto& p : b.points())
        if (a.contains(p.position)) return true;
    for (const auto& d : a.disks()) {
        for (const auto& e : b.disks()) {
            const double rr = d.radius + e.radius;
            if (squared_distance(d.center, e.center) <= rr * rr) return true;
        }
        for (const auto& rc : b.rects())
            if (squared_distance_to_rect(d.center, rc) <= d.radius * d.radius) return true;
    }
    for (const auto& rc : a.rects()) {
        for (const auto& e : b.disks())
            if (squared_distance_to_rect(e.center, rc) <= e.radius * e.radius) return true;
        for (const auto& sc : b.rects()) {
            if (rc.min.x <= sc.max.x && sc.min.x <= rc.max.x && rc.min.y <= sc.max.y &&
                sc.min.y <= rc.max.y)
                return true;
        }
    }
    return false;
}

bool interiors_overlap(const Region& a, const Region& b) {
    for (const auto& d : a.disks()) {
        for (const auto& e : b.disks()) {
            const double rr = d.radius + e.radius;
            if (squared_distance(d.center, e.center) < rr * rr) return true;
        }
        for (const auto& rc : b.rects())
            if (squared_distance_to_rect(d.center, rc) < d.radius * d.radius) return true;
    }
    for (const auto& rc : a.rects()) {
        for (const auto& e : b.disks())
            if (squared_distance_to_rect(e.center, rc) < e.radius * e.radius) return true;
        for (const auto& sc : b.rects()) {
            if (rc.min.x < sc.max.x && sc.min.x < rc.max.x && rc.min.y < sc.max.y &&
                sc.min.y < rc.max.y)
                return true;
        }
    }
    return false;
}

bool piecewise_subset(const Region& a, const Region& b) {
    if (a.is_empty()) return true;
    if (b.is_empty()) return false;
    for (const auto& p : a.points())
        if (!b.contains(p.position)) return false;
    for (const auto& d : a.disks()) {
        bool inside = false;
        for (const auto& e : b.disks()) {
            if (distance(d.center, e.center) + d.radius <= e.radius) { inside = true; break; }
        }
        for (const auto& rc : b.rects()) {
            if (inside) break;
            inside = d.center.x - d.radius >= rc.min.x && d.center.x + d.radius <= rc.max.x &&
                     d.center.y - d.radius >= rc.min.y && d.center.y + d.radius <= rc.max.y;
        }
        if (!inside) return false;
    }
    for (const auto& rc : a.rects()) {
        bool inside = false;
        for (const auto& sc : b.rects()) {
            if (rc.min.x >= sc.min.x && rc.max.x <= sc.max.x && rc.min.y >= sc.min.y &&
                rc.max.y <= sc.max.y) {
                inside = true;
                break;
            }
        }
        for (const auto& e : b.disks()) {
            if (inside) break;
            const Disk& disk = e;
            inside = point_in_disk(rc.min, disk) && point_in_disk(rc.max, disk) &&
                     point_in_disk({rc.min.x, rc.max.y}, disk) &&
                     point_in_disk({rc.max.x, rc.min.y}, disk);
        }
        if (!inside) return false;
    }
    return true;
}

} // namespace cech
