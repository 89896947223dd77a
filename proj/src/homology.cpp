#include "cech/homology.hpp"

#include "cech/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>

namespace cech {

BoundaryMatrix boundary_matrix(const SimplicialComplex& complex, int k) {
    if (k < 1) throw Error("boundary dimension must be at least 1");
    BoundaryMatrix m;
    m.rows = complex.simplices(k - 1);
    m.cols = complex.simplices(k);
    std::map<Simplex, int> row_index;
    for (std::size_t i = 0; i < m.rows.size(); ++i) row_index.emplace(m.rows[i], static_cast<int>(i));
    m.columns.reserve(m.cols.size());
    for (const Simplex& s : m.cols) {
        std::vector<int> col;
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            Simplex face;
            for (std::size_t v = 0; v < s.size(); ++v)
                if (v != drop) face.push_back(s[v]);
            col.push_back(row_index.at(face));
        }
        std::sort(col.begin(), col.end());
        m.columns.push_back(std::move(col));
    }
    return m;
}

std::size_t z2_rank(const BoundaryMatrix& matrix) {
    // pivot_owner[row] = reduced column whose lowest entry is row.
    std::vector<std::vector<int>> reduced;
    std::map<int, std::size_t> pivot_owner;
    std::size_t rank = 0;
    for (const auto& original : matrix.columns) {
        std::vector<int> col = original;
        while (!col.empty()) {
            auto it = pivot_owner.find(col.back());
            if (it == pivot_owner.end()) break;
            const auto& other = reduced[it->second];
            std::vector<int> sum;
            std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                          std::back_inserter(sum));
            col = std::move(sum);
        }
        if (col.empty()) continue;
        pivot_owner.emplace(col.back(), reduced.size());
        reduced.push_back(std::move(col));
        ++rank;
    }
    return rank;
}

BettiNumbers complex_betti(const SimplicialComplex& complex) {
    if (complex.vertex_count() == 0 || complex.count(0) == 0) throw Error("empty complex");
    const auto v = static_cast<long>(complex.count(0));
    const auto e = static_cast<long>(complex.count(1));
    const long rank1 = e > 0 ? static_cast<long>(z2_rank(boundary_matrix(complex, 1))) : 0;
    const long rank2 = complex.count(2) > 0 ? static_cast<long>(z2_rank(boundary_matrix(complex, 2))) : 0;
    return {static_cast<int>(v - rank1), static_cast<int>((e - rank1) - rank2)};
}

int union_find_b0(const SimplicialComplex& complex) {
    std::vector<int> parent(complex.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int components = static_cast<int>(complex.count(0));
    for (const Simplex& e : complex.simplices(1)) {
        const int a = find(e[0]), b = find(e[1]);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return components;
}

namespace {

// Labels components of cells equal to `value`; returns the count and, per
// component, whether it reaches the frame.
std::pair<int, std::vector<bool>> components(const GridMask& mask, bool value, bool eight) {
    const int w = mask.width(), h = mask.height();
    std::vector<int> label(static_cast<std::size_t>(w) * h, -1);
    std::vector<bool> touches;
    std::vector<std::pair<int, int>> stack;
    int count = 0;
    for (int j = 0; j < h; ++j)
        for (int i = 0; i < w; ++i) {
            if (mask.at(i, j) != value || label[mask.index(i, j)] >= 0) continue;
            bool edge = false;
            label[mask.index(i, j)] = count;
            stack.emplace_back(i, j);
            while (!stack.empty()) {
                const auto [x, y] = stack.back();
                stack.pop_back();
                if (x == 0 || y == 0 || x == w - 1 || y == h - 1) edge = true;
                for (int dy = -1; dy <= 1; ++dy)
                    for (int dx = -1; dx <= 1; ++dx) {
                        if ((dx == 0 && dy == 0) || (!eight && dx != 0 && dy != 0)) continue;
                        const int nx = x + dx, ny = y + dy;
                        if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
                        if (mask.at(nx, ny) != value || label[mask.index(nx, ny)] >= 0) continue;
                        label[mask.index(nx, ny)] = count;
                        stack.emplace_back(nx, ny);
                    }
            }
            touches.push_back(edge);
            ++count;
        }
    return {count, touches};
}

Point2 circumcenter(Point2 a, Point2 b, Point2 c) {
    const double bx = b.x - a.x, by = b.y - a.y, cx = c.x - a.x, cy = c.y - a.y;
    const double det = 2.0 * (bx * cy - by * cx);
    const double b2 = bx * bx + by * by, c2 = cx * cx + cy * cy;
    return {a.x + (cy * b2 - by * c2) / det, a.y + (bx * c2 - cx * b2) / det};
}

// No angle of the triangle is obtuse, so the circumcircle is the smallest enclosing circle.
bool acute(Point2 a, Point2 b, Point2 c) {
    auto dot = [](Point2 o, Point2 p, Point2 q) { return (p.x - o.x) * (q.x - o.x) + (p.y - o.y) * (q.y - o.y); };
    return dot(a, b, c) > 0.0 && dot(b, a, c) > 0.0 && dot(c, a, b) > 0.0;
}

double circumradius(Point2 a, Point2 b, Point2 c) {
    const double ab = distance(a, b), bc = distance(b, c), ca = distance(c, a);
    const double cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    const double scale = std::max({ab, bc, ca});
    if (std::abs(cross) <= 1e-12 * scale * scale) return std::numeric_limits<double>::infinity();
    return ab * bc * ca / (2.0 * std::abs(cross));
}

} // namespace

BettiNumbers grid_betti(const GridMask& mask) {
    if (mask.empty()) throw Error("empty union");
    const auto fg = components(mask, true, false);
    const auto bg = components(mask, false, true);
    const int holes = static_cast<int>(std::count(bg.second.begin(), bg.second.end(), false));
    return {fg.first, holes};
}

BoundingBox raster_box(std::span<const Point2> centers, double r, int resolution) {
    if (centers.empty()) throw Error("no centers");
    if (resolution < 64) throw Error("resolution must be at least 64");
    const BoundingBox tight = BoundingBox::around(centers);
    const double side = std::max(tight.width(), tight.height()) + 2.0 * r;
    const double cell = side / (resolution - 8);
    const double half = side / 2.0 + 4.0 * cell;
    const Point2 mid{(tight.min.x + tight.max.x) / 2.0, (tight.min.y + tight.max.y) / 2.0};
    return {{mid.x - half, mid.y - half}, {mid.x + half, mid.y + half}};
}

double check_margins(std::span<const Point2> centers, double r, double cell,
                     const MarginOptions& options) {
    const double radial = options.relative * r;
    const double thin = options.thin_cells * cell;
    double margin = std::numeric_limits<double>::infinity();
    const std::size_t n = centers.size();

    // A thin feature near q is harmless when some other ball swallows q with room to spare.
    auto buried = [&](Point2 q, std::initializer_list<std::size_t> skip) {
        const double deep = r - 2.0 * thin;
        if (deep <= 0.0) return false;
        for (std::size_t m = 0; m < n; ++m) {
            if (std::find(skip.begin(), skip.end(), m) != skip.end()) continue;
            if (squared_distance(q, centers[m]) <= deep * deep) return true;
        }
        return false;
    };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Point2 a = centers[i], b = centers[j];
            const double d = distance(a, b);
            const double slack = std::abs(d / 2.0 - r);
            margin = std::min(margin, slack);
            // The pair simplex itself must be decided without doubt.
            if (slack <= radial) throw UnstableConfiguration();
            if (d == 0.0) continue;
            const Point2 mid{(a.x + b.x) / 2.0, (a.y + b.y) / 2.0};
            if (d <= 2.0 * r) {
                // Narrow lens: both circle crossings must be buried for it not to matter.
                // Near tangency the outer wedge at an exposed crossing is a sliver of
                // background that rasterizes into stray one-cell holes.
                const double half = std::sqrt(r * r - d * d / 4.0);
                const double wedge = std::numbers::pi - 2.0 * std::asin(std::min(1.0, d / (2.0 * r)));
                if (2.0 * half >= thin && std::tan(wedge / 2.0) >= options.min_wedge_slope) continue;
                const double ux = -(b.y - a.y) / d, uy = (b.x - a.x) / d;
                if (!buried({mid.x + half * ux, mid.y + half * uy}, {i, j}) ||
                    !buried({mid.x - half * ux, mid.y - half * uy}, {i, j}))
                    throw UnstableConfiguration();
            } else if (d - 2.0 * r < thin && !buried(mid, {i, j})) {
                throw UnstableConfiguration();
            }
        }
    // Triple lenses and small holes open up around circumcenters.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const Point2 a = centers[i], b = centers[j], c = centers[k];
                const double big = circumradius(a, b, c);
                if (!std::isfinite(big) || big > 2.0 * r) continue;
                const double slack = std::abs(big - r);
                if (acute(a, b, c)) {
                    margin = std::min(margin, slack);
                    if (slack <= radial) throw UnstableConfiguration();
                }
                if (slack <= thin && !buried(circumcenter(a, b, c), {i, j, k})) throw UnstableConfiguration();
            }
    return margin;
}

NerveTheoremReport nerve_theorem_check(std::span<const Point2> centers, double r, int resolution,
                                       const MarginOptions& options) {
    if (!(r > 0.0) || !std::isfinite(r)) throw Error("radius must be positive");
    const BoundingBox box = raster_box(centers, r, resolution);
    NerveTheoremReport report;
    report.resolution = resolution;
    report.margin = check_margins(centers, r, box.width() / resolution, options);

    std::vector<Disk> disks;
    disks.reserve(centers.size());
    for (Point2 c : centers) disks.emplace_back(c, r);
    report.union_betti = grid_betti(rasterize_union(disks, box, resolution, resolution));
    report.complex_betti = complex_betti(build_cech_complex(centers, r, 2));
    report.agree = report.union_betti == report.complex_betti;
    return report;
}

std::vector<Point2> feature_points(std::span<const SamplePoint> domain, const FeatureMap& phi) {
    if (phi.arity() == 0 || phi.arity() > 2) throw Error("union oracle unavailable");
    std::vector<Point2> out;
    out.reserve(domain.size());
    for (const auto& s : domain) {
        const FeatureVector f = phi(s);
        out.emplace_back(f[0], f.size() > 1 ? f[1] : 0.0);
    }
    return out;
}

NerveTheoremReport descriptive_nerve_theorem_check(std::span<const SamplePoint> domain,
                                                   const FeatureMap& phi, double feature_radius,
                                                   int resolution, const MarginOptions& options) {
    const auto points = feature_points(domain, phi);
    return nerve_theorem_check(points, feature_radius, resolution, options);
}

} // namespace cech
