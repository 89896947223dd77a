#pragma once

#include "cech/complex.hpp"
#include "cech/region.hpp"

namespace cech {

/// How the strong proximity treats sets that touch without sharing interior.
enum class StrongMode {
    /// Int A ∩ Int B ≠ ∅, plus the whole-space and singleton conventions.
    /// Tangent disks are not strongly near.
    interior_overlap,
    /// Boundary contact forces strong nearness as well, so A ⩕δ B iff A ∩ B ≠ ∅.
    boundary_contact,
};

/// The bundle {δ, ⩕δ, δ_Φ, ⩕δ_Φ} is parameterised by these settings.
struct ProximalRelator {
    /// Closures closer than this count as touching (δ).
    double gap_tolerance = 0.0;
    /// Feature vectors closer than this count as equal (δ_Φ, ⩕δ_Φ).
    double feature_tolerance = 0.0;
    StrongMode strong_mode = StrongMode::interior_overlap;

    void validate() const;
};

/// A δ B iff the gap between the closed regions is at most gap_tolerance
/// (plus the tie tolerance). Throws when the regions live in different ambient boxes.
bool near(const Region& a, const Region& b, const ProximalRelator& relator = {});

bool strongly_near(const Region& a, const Region& b, const ProximalRelator& relator = {});

/// Some member ball of one nerve meets some member ball of the other.
bool nerves_strongly_near(const CechNerve& a, const CechNerve& b);

} // namespace cech
