#pragma once

#include "cech/descriptive.hpp"
#include "cech/proximity.hpp"
#include "cech/region.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cech {

enum class AxiomSystem { lodato, strong, descriptive_lodato, descriptive_strong };

/// "lodato", "strong", "descriptive-lodato", "descriptive-strong".
AxiomSystem parse_axiom_system(std::string_view name);
const char* axiom_system_name(AxiomSystem system);
/// Axiom ids checked for a system, in report order.
std::vector<std::string> axiom_ids(AxiomSystem system);

struct Counterexample {
    std::vector<Region> regions;
    std::optional<Point2> point;
    std::string note;
};

struct AxiomResult {
    std::string id;
    bool passed = true;
    /// Instances whose premise held (the conclusion was actually tested).
    std::size_t exercised = 0;
    std::size_t trials = 0;
    std::optional<Counterexample> counterexample;
};

struct AxiomReport {
    AxiomSystem system;
    std::vector<AxiomResult> results;

    bool all_passed() const;
    const AxiomResult& at(std::string_view id) const;
};

/// Tests every axiom of the system on `trials` sampled instances drawn from the
/// universe, its pairwise unions, the empty set and the whole space.
///
/// The whole space X is the first whole region of the universe, or else the
/// common ambient box. Descriptive systems evaluate `phi` on region samples.
AxiomReport verify_axioms(AxiomSystem system, const std::vector<Region>& universe, int trials,
                          std::uint64_t seed, const ProximalRelator& relator = {},
                          const FeatureMap& phi = FeatureMap::payload(3));

struct UniverseOptions {
    BoundingBox box{{0.0, 0.0}, {1.0, 1.0}};
    int size = 20;
    /// Shared lattice: singletons, point sets, masks and samples sit on its cell centers.
    int grid = 16;
    int palette = 4;
};

/// Random mix of singletons, point sets, disk unions (some exactly tangent),
/// masks on the shared lattice and the whole box. Every sample carries a
/// three-component integer color that depends only on its lattice cell, so
/// coincident points always share a description.
std::vector<Region> make_random_universe(std::uint64_t seed, const UniverseOptions& options = {});

/// Color payload the universe generator assigns to a position.
FeatureVector universe_color(Point2 p, std::uint64_t seed, const UniverseOptions& options);

} // namespace cech
