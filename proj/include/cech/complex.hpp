#pragma once

#include "cech/geometry.hpp"
#include "cech/region.hpp"

#include <cstddef>
#include <memory>
#include <set>
#include <span>
#include <vector>

namespace cech {

/// Sorted, duplicate-free vertex indices.
using Simplex = std::vector<int>;

/// Abstract simplicial complex on vertices 0..vertex_count-1, closed under faces.
class SimplicialComplex {
public:
    SimplicialComplex(int vertex_count, int dimension_cap);

    /// Adds a simplex together with all of its faces.
    void insert(Simplex simplex);

    bool contains(const Simplex& simplex) const;

    int vertex_count() const { return vertex_count_; }
    int dimension_cap() const { return dimension_cap_; }
    /// Highest dimension holding a simplex.
    int dimension() const;

    /// Simplices of one dimension in lexicographic order.
    std::vector<Simplex> simplices(int dim) const;
    std::size_t count(int dim) const;
    std::size_t size() const;

    /// Every simplex, by dimension then lexicographically.
    std::vector<Simplex> all() const;

    /// Maximal simplices, by dimension then lexicographically.
    std::vector<Simplex> facets() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    int vertex_count_;
    int dimension_cap_;
    std::vector<std::set<Simplex>> by_dim_;
};

/// Balls of one radius around a subset of a shared center configuration that
/// have a common point.
class CechNerve {
public:
    CechNerve(std::vector<int> members, double radius,
              std::shared_ptr<const std::vector<Point2>> centers);

    const std::vector<int>& members() const { return members_; }
    double radius() const { return radius_; }
    const std::vector<Point2>& configuration() const { return *centers_; }
    const std::shared_ptr<const std::vector<Point2>>& shared_configuration() const {
        return centers_;
    }

    std::size_t size() const { return members_.size(); }
    std::vector<Point2> member_centers() const;
    std::vector<Disk> disks() const;
    bool has_member(int index) const;

private:
    std::vector<int> members_;
    double radius_;
    std::shared_ptr<const std::vector<Point2>> centers_;
};

/// Nerves covering a region.
struct CechComplexCover {
    std::vector<CechNerve> nerves;
    Region region;
};

/// Čech complex of the closed r-balls around `centers`, up to dimension `max_dim`.
SimplicialComplex build_cech_complex(std::span<const Point2> centers, double r, int max_dim = 2);

/// Facets of the complex as nerves. Facets with fewer than `min_size` balls are
/// skipped; with the default every ball index appears in some returned nerve.
std::vector<CechNerve> maximal_nerves(const SimplicialComplex& complex,
                                      std::span<const Point2> centers, double r,
                                      std::size_t min_size = 1);

/// Convenience: the facet nerves of the Čech complex, bundled with the region.
CechComplexCover build_cover(const Region& region, std::span<const Point2> centers, double r,
                             int max_dim = 2);

struct CoveringReport {
    bool covered = false;
    std::vector<Point2> uncovered_samples;
    double fraction = 0.0;
    std::size_t total_samples = 0;
};

/// Samples the region and checks every sample lies in a closed r-ball.
///
/// `sample_density` is samples per unit length. Point sets use their points;
/// masks use true cell centers taken with a cell stride of
/// max(1, floor(1 / (density * cell size))); other kinds use a lattice of
/// spacing 1/density over their extent, kept where it falls inside the region.
CoveringReport covering_check(const Region& region, std::span<const Point2> centers, double r,
                              double sample_density);

/// True iff p lies in the open interior of some member ball.
bool interior_of_nerve(const CechNerve& nerve, Point2 p);

} // namespace cech
