#pragma once

// Brute-force reference implementations used only by tests. None of these
// share code with the library beyond the plain Point2 type.

#include "cech/geometry.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

struct Circle {
    double x, y, r;
};

inline bool circle_holds(const Circle& c, const std::vector<cech::Point2>& pts, double eps) {
    for (const auto& p : pts)
        if (std::hypot(p.x - c.x, p.y - c.y) > c.r + eps) return false;
    return true;
}

/// Smallest circle among all point, pair-diameter and triple-circumcircle candidates.
inline double enclosing_radius(const std::vector<cech::Point2>& pts) {
    double scale = 0.0;
    for (const auto& p : pts) scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
    const double eps = 1e-12 * std::max(1.0, scale);
    double best = INFINITY;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Circle c{pts[i].x, pts[i].y, 0.0};
        if (circle_holds(c, pts, eps)) best = std::min(best, 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const Circle d{(pts[i].x + pts[j].x) / 2, (pts[i].y + pts[j].y) / 2,
                           std::hypot(pts[i].x - pts[j].x, pts[i].y - pts[j].y) / 2};
            if (d.r < best && circle_holds(d, pts, eps)) best = d.r;
            for (std::size_t k = j + 1; k < n; ++k) {
                const double ax = pts[i].x, ay = pts[i].y;
                const double bx = pts[j].x - ax, by = pts[j].y - ay;
                const double cx = pts[k].x - ax, cy = pts[k].y - ay;
                const double det = 2 * (bx * cy - by * cx);
                if (std::abs(det) < 1e-300) continue;
                const double b2 = bx * bx + by * by, c2 = cx * cx + cy * cy;
                const double ux = (cy * b2 - by * c2) / det, uy = (bx * c2 - cx * b2) / det;
                const Circle t{ax + ux, ay + uy, std::hypot(ux, uy)};
                if (t.r < best && circle_holds(t, pts, eps)) best = t.r;
            }
        }
    }
    return best;
}

/// Quadtree search for a point inside every closed disk of radius r. Boxes are
/// discarded as soon as some center is farther than r from the whole box.
inline bool grid_common_point(const std::vector<cech::Point2>& centers, double r, int depth = 40) {
    double x0 = INFINITY, y0 = INFINITY, x1 = -INFINITY, y1 = -INFINITY;
    for (const auto& c : centers) {
        x0 = std::min(x0, c.x - r);
        y0 = std::min(y0, c.y - r);
        x1 = std::max(x1, c.x + r);
        y1 = std::max(y1, c.y + r);
    }
    struct Box {
        double x0, y0, x1, y1;
        int level;
    };
    std::vector<Box> stack{{x0, y0, x1, y1, 0}};
    while (!stack.empty()) {
        const Box b = stack.back();
        stack.pop_back();
        bool possible = true;
        bool center_in_all = true;
        const double mx = (b.x0 + b.x1) / 2, my = (b.y0 + b.y1) / 2;
        for (const auto& c : centers) {
            const double dx = std::max({b.x0 - c.x, 0.0, c.x - b.x1});
            const double dy = std::max({b.y0 - c.y, 0.0, c.y - b.y1});
            if (std::hypot(dx, dy) > r) {
                possible = false;
                break;
            }
            if (std::hypot(mx - c.x, my - c.y) > r) center_in_all = false;
        }
        if (!possible) continue;
        if (center_in_all) return true;
        if (b.level >= depth) continue;
        stack.push_back({b.x0, b.y0, mx, my, b.level + 1});
        stack.push_back({mx, b.y0, b.x1, my, b.level + 1});
        stack.push_back({b.x0, my, mx, b.y1, b.level + 1});
        stack.push_back({mx, my, b.x1, b.y1, b.level + 1});
    }
    return false;
}

/// Every index subset of size <= max_dim + 1 with a common point.
inline std::set<std::vector<int>> cech_simplices(const std::vector<cech::Point2>& centers, double r,
                                                 int max_dim) {
    std::set<std::vector<int>> out;
    const int n = static_cast<int>(centers.size());
    for (std::uint32_t bits = 1; bits < (1u << n); ++bits) {
        const int k = std::popcount(bits);
        if (k > max_dim + 1) continue;
        std::vector<int> s;
        std::vector<cech::Point2> sub;
        for (int i = 0; i < n; ++i)
            if (bits & (1u << i)) {
                s.push_back(i);
                sub.push_back(centers[i]);
            }
        if (grid_common_point(sub, r)) out.insert(s);
    }
    return out;
}

/// Betti numbers of a binary image from its Euler characteristic: pixels are
/// vertices, 4-neighbor pairs are edges, full 2x2 blocks are squares, and
/// b0 comes from union-find.
inline std::pair<int, int> euler_betti(const std::vector<std::vector<bool>>& img) {
    const int h = static_cast<int>(img.size()), w = h ? static_cast<int>(img[0].size()) : 0;
    std::vector<int> parent(static_cast<std::size_t>(w) * h);
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    long v = 0, e = 0, f = 0;
    int comps = 0;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            if (!img[y][x]) continue;
            ++v;
            ++comps;
            auto join = [&](int a, int b) {
                a = find(a);
                b = find(b);
                if (a != b) {
                    parent[a] = b;
                    --comps;
                }
            };
            if (x + 1 < w && img[y][x + 1]) {
                ++e;
                join(y * w + x, y * w + x + 1);
            }
            if (y + 1 < h && img[y + 1][x]) {
                ++e;
                join(y * w + x, (y + 1) * w + x);
            }
            if (x + 1 < w && y + 1 < h && img[y][x + 1] && img[y + 1][x] && img[y + 1][x + 1]) ++f;
        }
    const long chi = v - e + f;
    return {comps, static_cast<int>(comps - chi)};
}

/// Components of a union of intervals [v - r, v + r] by sorting.
inline int interval_components(std::vector<double> values, double r) {
    if (values.empty()) return 0;
    std::sort(values.begin(), values.end());
    int comps = 1;
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] - values[i - 1] > 2 * r) ++comps;
    return comps;
}

} // namespace oracle
