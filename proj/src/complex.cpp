#include "cech/complex.hpp"

#include "cech/error.hpp"
#include "cech/simd/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace cech {

// ---- SimplicialComplex ----

SimplicialComplex::SimplicialComplex(int vertex_count, int dimension_cap)
    : vertex_count_(vertex_count), dimension_cap_(dimension_cap) {
    if (vertex_count < 0) throw Error("vertex count must be nonnegative");
    if (dimension_cap < 0) throw Error("dimension cap must be nonnegative");
    by_dim_.resize(static_cast<std::size_t>(dimension_cap) + 1);
    for (int v = 0; v < vertex_count; ++v) by_dim_[0].insert(Simplex{v});
}

void SimplicialComplex::insert(Simplex simplex) {
    if (simplex.empty()) throw Error("empty simplex");
    std::sort(simplex.begin(), simplex.end());
    if (std::adjacent_find(simplex.begin(), simplex.end()) != simplex.end())
        throw Error("simplex has repeated vertices");
    if (simplex.front() < 0 || simplex.back() >= vertex_count_)
        throw Error("simplex vertex out of range");
    const int dim = static_cast<int>(simplex.size()) - 1;
    if (dim > dimension_cap_) throw Error("simplex exceeds dimension cap");
    if (by_dim_[static_cast<std::size_t>(dim)].contains(simplex)) return;

    // Faces via bitmask enumeration; simplices here have at most a handful of vertices.
    const std::size_t k = simplex.size();
    if (k > 20) throw Error("simplex too large");
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        Simplex face;
        for (std::size_t b = 0; b < k; ++b)
            if (mask & (1u << b)) face.push_back(simplex[b]);
        by_dim_[face.size() - 1].insert(std::move(face));
    }
}

bool SimplicialComplex::contains(const Simplex& simplex) const {
    if (simplex.empty() || simplex.size() > by_dim_.size()) return false;
    return by_dim_[simplex.size() - 1].contains(simplex);
}

int SimplicialComplex::dimension() const {
    for (int d = dimension_cap_; d >= 0; --d)
        if (!by_dim_[static_cast<std::size_t>(d)].empty()) return d;
    return -1;
}

std::vector<Simplex> SimplicialComplex::simplices(int dim) const {
    if (dim < 0 || dim > dimension_cap_) return {};
    const auto& s = by_dim_[static_cast<std::size_t>(dim)];
    return {s.begin(), s.end()};
}

std::size_t SimplicialComplex::count(int dim) const {
    if (dim < 0 || dim > dimension_cap_) return 0;
    return by_dim_[static_cast<std::size_t>(dim)].size();
}

std::size_t SimplicialComplex::size() const {
    std::size_t n = 0;
    for (const auto& s : by_dim_) n += s.size();
    return n;
}

std::vector<Simplex> SimplicialComplex::all() const {
    std::vector<Simplex> out;
    for (const auto& s : by_dim_) out.insert(out.end(), s.begin(), s.end());
    return out;
}

std::vector<Simplex> SimplicialComplex::facets() const {
    std::vector<Simplex> out;
    std::set<Simplex> covered;
    for (int d = dimension_cap_; d >= 0; --d) {
        std::set<Simplex> next_covered;
        for (const Simplex& s : by_dim_[static_cast<std::size_t>(d)]) {
            if (!covered.contains(s)) out.push_back(s);
            if (d == 0) continue;
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                Simplex face;
                face.reserve(s.size() - 1);
                for (std::size_t k = 0; k < s.size(); ++k)
                    if (k != drop) face.push_back(s[k]);
                next_covered.insert(std::move(face));
            }
        }
        covered = std::move(next_covered);
    }
    std::sort(out.begin(), out.end(), [](const Simplex& a, const Simplex& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

// ---- CechNerve ----

CechNerve::CechNerve(std::vector<int> members, double radius,
                     std::shared_ptr<const std::vector<Point2>> centers)
    : members_(std::move(members)), radius_(radius), centers_(std::move(centers)) {
    if (!centers_) throw Error("nerve needs a center configuration");
    if (members_.empty()) throw Error("nerve needs at least one ball");
    if (!(radius_ > 0.0)) throw Error("radius must be positive");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (members_.front() < 0 || members_.back() >= static_cast<int>(centers_->size()))
        throw Error("nerve member index out of range");
    if (!disks_common_point(member_centers(), radius_))
        throw Error("nerve balls have no common point");
}

std::vector<Point2> CechNerve::member_centers() const {
    std::vector<Point2> out;
    out.reserve(members_.size());
    for (int i : members_) out.push_back((*centers_)[static_cast<std::size_t>(i)]);
    return out;
}

std::vector<Disk> CechNerve::disks() const {
    std::vector<Disk> out;
    out.reserve(members_.size());
    for (int i : members_) out.emplace_back((*centers_)[static_cast<std::size_t>(i)], radius_);
    return out;
}

bool CechNerve::has_member(int index) const {
    return std::binary_search(members_.begin(), members_.end(), index);
}

// ---- construction ----

namespace {

struct Expander {
    std::span<const Point2> centers;
    double r;
    int max_dim;
    const std::vector<std::vector<int>>& upper_neighbors; // neighbors with larger index
    const std::vector<std::vector<std::uint8_t>>& adjacent;
    SimplicialComplex& out;

    void grow(std::vector<int>& simplex, std::vector<Point2>& pts) {
        if (static_cast<int>(simplex.size()) - 1 >= max_dim) return;
        for (int v : upper_neighbors[static_cast<std::size_t>(simplex.back())]) {
            bool all_adjacent = true;
            for (std::size_t k = 0; k + 1 < simplex.size(); ++k) {
                if (!adjacent[static_cast<std::size_t>(simplex[k])][static_cast<std::size_t>(v)]) {
                    all_adjacent = false;
                    break;
                }
            }
            if (!all_adjacent) continue;
            pts.push_back(centers[static_cast<std::size_t>(v)]);
            if (pts.size() == 2 || disks_common_point(pts, r)) {
                simplex.push_back(v);
                out.insert(simplex);
                grow(simplex, pts);
                simplex.pop_back();
            }
            pts.pop_back();
        }
    }
};

} // namespace

SimplicialComplex build_cech_complex(std::span<const Point2> centers, double r, int max_dim) {
    if (centers.empty()) throw Error("empty point set");
    if (!(r > 0.0) || !std::isfinite(r)) throw Error("radius must be positive");
    if (max_dim < 0) throw Error("max_dim must be nonnegative");

    const std::size_t n = centers.size();
    SimplicialComplex complex(static_cast<int>(n), max_dim);
    if (max_dim == 0) return complex;

    // Neighbor graph: a common point needs pairwise intersection, so pruning
    // here is lossless. The SIMD scan is a conservative prefilter; the pair test
    // below is the exact rule used for every simplex.
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = centers[i].x;
        ys[i] = centers[i].y;
    }
    const double reach = 2.0 * (r + kTieTolerance) * (1.0 + 1e-12);
    const auto& kernels = simd::active_kernels();
    std::vector<std::vector<std::uint8_t>> adjacent(n, std::vector<std::uint8_t>(n, 0));
    std::vector<std::vector<int>> upper(n);
    std::vector<std::uint8_t> flags(n);
    for (std::size_t i = 0; i < n; ++i) {
        kernels.flag_within(xs.data(), ys.data(), n, xs[i], ys[i], reach * reach, flags.data());
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!flags[j]) continue;
            const Point2 pair[2] = {centers[i], centers[j]};
            if (!disks_common_point(pair, r)) continue;
            adjacent[i][j] = adjacent[j][i] = 1;
            upper[i].push_back(static_cast<int>(j));
        }
    }

    Expander ex{centers, r, max_dim, upper, adjacent, complex};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<int> simplex{static_cast<int>(i)};
        std::vector<Point2> pts{centers[i]};
        ex.grow(simplex, pts);
    }
    return complex;
}

std::vector<CechNerve> maximal_nerves(const SimplicialComplex& complex,
                                      std::span<const Point2> centers, double r,
                                      std::size_t min_size) {
    if (static_cast<int>(centers.size()) != complex.vertex_count())
        throw Error("complex and center configuration differ in size");
    auto shared = std::make_shared<const std::vector<Point2>>(centers.begin(), centers.end());
    std::vector<CechNerve> nerves;
    for (Simplex& facet : complex.facets()) {
        if (facet.size() < min_size) continue;
        nerves.emplace_back(std::move(facet), r, shared);
    }
    return nerves;
}

CechComplexCover build_cover(const Region& region, std::span<const Point2> centers, double r,
                             int max_dim) {
    const auto complex = build_cech_complex(centers, r, max_dim);
    return {maximal_nerves(complex, centers, r), region};
}

// ---- covering ----

namespace {

std::vector<Point2> lattice_samples(const Region& region, double spacing) {
    std::vector<Point2> pieces;
    for (const auto& p : region.points()) pieces.push_back(p.position);
    for (const auto& d : region.disks()) {
        pieces.push_back({d.center.x - d.radius, d.center.y - d.radius});
        pieces.push_back({d.center.x + d.radius, d.center.y + d.radius});
    }
    for (const auto& rc : region.rects()) {
        pieces.push_back(rc.min);
        pieces.push_back(rc.max);
    }
    const BoundingBox box = BoundingBox::around(pieces);
    std::vector<Point2> out;
    for (const auto& p : region.points()) out.push_back(p.position);
    const auto nx = static_cast<long>(std::floor(box.width() / spacing));
    const auto ny = static_cast<long>(std::floor(box.height() / spacing));
    if ((nx + 1) * (ny + 1) > 50'000'000L) throw Error("sample density too high");
    for (long j = 0; j <= ny; ++j) {
        for (long i = 0; i <= nx; ++i) {
            const Point2 p{box.min.x + i * spacing, box.min.y + j * spacing};
            if (region.contains(p)) out.push_back(p);
        }
    }
    return out;
}

} // namespace

CoveringReport covering_check(const Region& region, std::span<const Point2> centers, double r,
                              double sample_density) {
    if (region.is_empty()) throw Error("empty region");
    if (!(sample_density > 0.0) || !std::isfinite(sample_density))
        throw Error("sample density must be positive");
    if (!(r > 0.0)) throw Error("radius must be positive");

    std::vector<Disk> disks;
    disks.reserve(centers.size());
    for (Point2 c : centers) disks.emplace_back(c, r);

    CoveringReport report;
    std::size_t covered = 0;
    auto record = [&](Point2 p, bool in) {
        ++report.total_samples;
        if (in) ++covered;
        else report.uncovered_samples.push_back(p);
    };

    if (region.kind() == RegionKind::grid_mask) {
        const GridMask& mask = *region.mask();
        // The union rasterized on the mask's own grid decides each cell center
        // with the same closed-ball predicate as point_in_disk.
        const GridMask uni = rasterize_union(disks, mask.box(), mask.width(), mask.height());
        const auto stride = [&](double cell) {
            return std::max(1, static_cast<int>(std::floor(1.0 / (sample_density * cell))));
        };
        const int sx = stride(mask.cell_width());
        const int sy = stride(mask.cell_height());
        for (int j = 0; j < mask.height(); j += sy)
            for (int i = 0; i < mask.width(); i += sx)
                if (mask.at(i, j)) record(mask.cell_center(i, j), uni.at(i, j));
    } else {
        std::vector<Point2> samples;
        if (region.kind() == RegionKind::point_set) {
            for (const auto& p : region.points()) samples.push_back(p.position);
        } else {
            samples = lattice_samples(region, 1.0 / sample_density);
        }
        for (Point2 p : samples) {
            bool in = false;
            for (const Disk& d : disks) {
                if (point_in_disk(p, d)) { in = true; break; }
            }
            record(p, in);
        }
    }
    if (report.total_samples == 0) throw Error("sample density yields no samples");
    report.covered = covered == report.total_samples;
    report.fraction = static_cast<double>(covered) / static_cast<double>(report.total_samples);
    return report;
}

bool interior_of_nerve(const CechNerve& nerve, Point2 p) {
    for (const Disk& d : nerve.disks())
        if (point_in_disk_interior(p, d)) return true;
    return false;
}

} // namespace cech
