#include "cech/proximity.hpp"

#include "cech/error.hpp"

#include <cmath>

namespace cech {

void ProximalRelator::validate() const {
    if (!(gap_tolerance >= 0.0) || !std::isfinite(gap_tolerance))
        throw Error("gap tolerance must be finite and nonnegative");
    if (!(feature_tolerance >= 0.0) || !std::isfinite(feature_tolerance))
        throw Error("feature tolerance must be finite and nonnegative");
}

namespace {

void check_ambient(const Region& a, const Region& b) {
    if (a.ambient() && b.ambient() && !(*a.ambient() == *b.ambient()))
        throw Error("regions live in different ambient boxes");
}

} // namespace

bool near(const Region& a, const Region& b, const ProximalRelator& relator) {
    relator.validate();
    check_ambient(a, b);
    if (a.is_empty() || b.is_empty()) return false;
    return region_distance(a, b) <= relator.gap_tolerance + kTieTolerance;
}

bool strongly_near(const Region& a, const Region& b, const ProximalRelator& relator) {
    relator.validate();
    check_ambient(a, b);
    if (a.is_empty() || b.is_empty()) return false;
    if (relator.strong_mode == StrongMode::boundary_contact) return regions_intersect(a, b);

    if (a.is_whole() || b.is_whole()) return true;
    if (a.is_singleton() && b.is_singleton())
        return a.points().front().position == b.points().front().position;
    if (a.is_singleton()) return b.interior_contains(a.points().front().position);
    if (b.is_singleton()) return a.interior_contains(b.points().front().position);
    return interiors_overlap(a, b);
}

bool nerves_strongly_near(const CechNerve& a, const CechNerve& b) {
    if (a.radius() != b.radius()) throw Error("nerves have different radii");
    const double reach = 2.0 * a.radius();
    for (Point2 p : a.member_centers())
        for (Point2 q : b.member_centers())
            if (squared_distance(p, q) <= reach * reach) return true;
    return false;
}

} // namespace cech
