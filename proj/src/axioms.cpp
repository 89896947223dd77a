#include "cech/axioms.hpp"

#include "cech/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>

namespace cech {

AxiomSystem parse_axiom_system(std::string_view name) {
    if (name == "lodato") return AxiomSystem::lodato;
    if (name == "strong") return AxiomSystem::strong;
    if (name == "descriptive-lodato") return AxiomSystem::descriptive_lodato;
    if (name == "descriptive-strong") return AxiomSystem::descriptive_strong;
    throw Error("unknown relation: " + std::string(name));
}

const char* axiom_system_name(AxiomSystem system) {
    switch (system) {
    case AxiomSystem::lodato: return "lodato";
    case AxiomSystem::strong: return "strong";
    case AxiomSystem::descriptive_lodato: return "descriptive-lodato";
    case AxiomSystem::descriptive_strong: return "descriptive-strong";
    }
    return "unknown";
}

std::vector<std::string> axiom_ids(AxiomSystem system) {
    switch (system) {
    case AxiomSystem::lodato: return {"P1", "P2", "P3", "P4", "P5"};
    case AxiomSystem::strong:
        return {"snN0", "snN1", "snN2", "snN3", "snN4", "snN5", "snN6", "snN7"};
    case AxiomSystem::descriptive_lodato: return {"dP0", "dP1", "dP2", "dP3", "dP4"};
    case AxiomSystem::descriptive_strong:
        return {"dsnN0", "dsnN1", "dsnN2", "dsnN3", "dsnN4", "dsnN5", "dsnN6", "dsnN7"};
    }
    return {};
}

bool AxiomReport::all_passed() const {
    return std::all_of(results.begin(), results.end(), [](const AxiomResult& r) { return r.passed; });
}

const AxiomResult& AxiomReport::at(std::string_view id) const {
    for (const auto& r : results)
        if (r.id == id) return r;
    throw Error("no such axiom in report: " + std::string(id));
}

namespace {

using Rng = std::mt19937_64;

class Harness {
public:
    Harness(const std::vector<Region>& universe, std::uint64_t seed, const ProximalRelator& relator,
            const FeatureMap& phi)
        : universe_(universe), rng_(seed), relator_(relator), phi_(phi), whole_(make_whole(universe)) {
        for (const auto& r : universe_)
            for (const auto& s : r.samples()) pool_.push_back(s);
        if (pool_.empty()) throw Error("universe carries no sample points");
    }

    // ---- relations under test ----
    bool near(const Region& a, const Region& b) const { return cech::near(a, b, relator_); }
    bool sn(const Region& a, const Region& b) const { return strongly_near(a, b, relator_); }
    bool dnear(const Region& a, const Region& b) const {
        return descriptively_near(a, b, phi_, relator_.feature_tolerance);
    }
    bool snd(const Region& a, const Region& b) const {
        return strongly_descriptively_near(a, b, phi_, relator_.feature_tolerance);
    }
    bool dcap_nonempty(const Region& a, const Region& b) const {
        return !descriptive_intersection(a, b, phi_, relator_.feature_tolerance).is_empty();
    }
    bool same_description(const SamplePoint& x, const SamplePoint& y) const {
        return features_match(phi_(x), phi_(y), relator_.feature_tolerance);
    }
    /// Φ(x) ∈ Φ(Int A).
    bool describes_interior(const SamplePoint& x, const Region& a) const {
        if (a.is_singleton() || a.is_empty()) return false;
        const auto fx = phi_(x);
        for (const auto& s : a.samples())
            if (a.interior_contains(s.position) && features_match(fx, phi_(s), relator_.feature_tolerance))
                return true;
        return false;
    }
    /// Int A ⩀ Int B ≠ ∅, evaluated from the interior sample lists.
    bool interior_dcap_nonempty(const Region& a, const Region& b) const {
        if (a.is_empty() || b.is_empty() || a.is_singleton() || b.is_singleton()) return false;
        for (const auto& s : a.samples()) {
            if (!a.interior_contains(s.position)) continue;
            if (describes_interior(s, b)) return true;
        }
        return false;
    }

    // ---- sampling ----
    const Region& whole() const { return whole_; }

    Region region() {
        const double u = unit();
        if (u < 0.05) return Region::empty_region();
        if (u < 0.20) return Region::unite(member(), member());
        return member();
    }

    Region nonempty_region() {
        for (;;) {
            Region r = region();
            if (!r.is_empty()) return r;
        }
    }

    const Region& member() { return universe_[index(universe_.size())]; }

    SamplePoint sample_point() { return pool_[index(pool_.size())]; }

    Point2 any_point(const Region& a) {
        const double u = unit();
        if (u < 0.4) {
            const auto s = a.samples();
            if (!s.empty()) return s[index(s.size())].position;
        }
        if (u < 0.7) {
            if (auto b = boundary_point(a)) return *b;
        }
        const auto& box = *whole_.ambient();
        return {box.min.x + unit() * box.width(), box.min.y + unit() * box.height()};
    }

    /// A point of A that is not interior to A.
    std::optional<Point2> boundary_point(const Region& a) {
        std::vector<Point2> cands;
        for (const auto& p : a.points()) cands.push_back(p.position);
        for (const auto& d : a.disks()) {
            cands.push_back({d.center.x + d.radius, d.center.y});
            cands.push_back({d.center.x - d.radius, d.center.y});
            cands.push_back({d.center.x, d.center.y + d.radius});
            cands.push_back({d.center.x, d.center.y - d.radius});
            const double t = unit() * 2.0 * std::numbers::pi;
            cands.push_back({d.center.x + d.radius * std::cos(t), d.center.y + d.radius * std::sin(t)});
        }
        for (const auto& rc : a.rects()) {
            cands.push_back(rc.min);
            cands.push_back(rc.max);
            cands.push_back({rc.min.x, (rc.min.y + rc.max.y) / 2.0});
            cands.push_back({(rc.min.x + rc.max.x) / 2.0, rc.max.y});
        }
        std::erase_if(cands, [&](Point2 p) { return !a.contains(p) || a.interior_contains(p); });
        if (cands.empty()) return std::nullopt;
        return cands[index(cands.size())];
    }

    double unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_); }
    std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

private:
    static Region make_whole(const std::vector<Region>& universe) {
        std::vector<SamplePoint> samples;
        for (const auto& r : universe)
            for (const auto& s : r.samples()) samples.push_back(s);
        for (const auto& r : universe)
            if (r.is_whole()) return Region::whole(*r.ambient(), samples);
        for (const auto& r : universe)
            if (r.ambient()) return Region::whole(*r.ambient(), samples);
        std::vector<Point2> corners;
        for (const auto& r : universe) {
            for (const auto& p : r.points()) corners.push_back(p.position);
            for (const auto& d : r.disks()) {
                corners.push_back({d.center.x - d.radius, d.center.y - d.radius});
                corners.push_back({d.center.x + d.radius, d.center.y + d.radius});
            }
            for (const auto& rc : r.rects()) {
                corners.push_back(rc.min);
                corners.push_back(rc.max);
            }
        }
        return Region::whole(BoundingBox::around(corners).expanded(1.0), samples);
    }

    const std::vector<Region>& universe_;
    Rng rng_;
    ProximalRelator relator_;
    FeatureMap phi_;
    Region whole_;
    std::vector<SamplePoint> pool_;
};

// One trial of one axiom: returns nullopt when the premise did not hold,
// true/false for the conclusion otherwise. Fills the counterexample on failure.
using Instance = std::function<std::optional<bool>(Harness&, Counterexample&)>;

std::optional<bool> check(bool premise, bool conclusion) {
    if (!premise) return std::nullopt;
    return conclusion;
}

Counterexample cx(std::vector<Region> regions, std::string note,
                  std::optional<Point2> point = std::nullopt) {
    return {std::move(regions), point, std::move(note)};
}

Region family_union(const std::vector<Region>& family) {
    Region u = Region::empty_region();
    for (const auto& b : family) u = Region::unite(u, b);
    return u;
}

std::vector<Region> random_family(Harness& h) {
    std::vector<Region> family;
    const std::size_t k = 1 + h.index(5);
    for (std::size_t i = 0; i < k; ++i) family.push_back(h.region());
    return family;
}

std::map<std::string, Instance> lodato_instances() {
    std::map<std::string, Instance> m;
    m["P1"] = [](Harness& h, Counterexample& c) -> std::optional<bool> {
        const Region a = h.region();
        const Region e = Region::empty_region();
        c = cx({e, a}, "empty set is near A");
        return !h.near(e, a) && !h.near(a, e);
    };
    m["P2"] = [](Harness& h, Counterexample& c) -> std::optional<bool> {
        const Region a = h.region(), b = h.region();
        c = cx({a, b}, "near is not symmetric");
        return h.near(a, b) == h.near(b, a);
    };
    m["P3"] = [](Harness& h, Counterexample& c) -> std::optional<bool> {
        const Region a = h.region(), b = h.region();
        c = cx({a, b}, "intersecting sets are not near");
        return check(regions_intersect(a, b), h.near(a, b));
    };
    m["P4"] = [](Harness& h, Counterexample& c) -> std::optional<bool> {
        const Region a = h.region(), b = h.region(), d = h.region();
        c = cx({a, b, d}, "near(A, B u C) differs from near(A,B) or near(A,C)");
        return h.near(a, Region::unite(b, d)) == (h.near(a, b) || h.near(a, d));
    };
    m["P5"] = [](Harness& h, Counterexample& c) -> std::optional<bool> {
        const Region a = h.region(), b = h.region();
        const Region target = h.unit() < 0.5 ? Region::unite(b, h.region()) : h.region();
        c = cx({a, b, target}, "A near B and every b near C, but A not near C");
        if (!h.near(a, b)) return std::nullopt;
        bool every_b_near = false;
        if (b.kind() == RegionKind::point_set) {
            every_b_near = std::all_of(b.points().begin(), b.points().end(), [&](const SamplePoint& p) {
                return h.near(Region::singleton(p, b.ambient()), target);
            });
        } else {
            // B is infinite: B ⊆ C is a sound witness that every b is near C.
            every_b_near = piecewise_subset(b, target);
        }
        return check(every_b_near, h.near(a, target));
    };
    return m;
}

std::map<std::string, Instance> strong_instances() {
    std::map<std::string, Instance> m;
    m["snN0"] = [](Harness& h, Counterexample& c) -> std::optional<bool> {
        const Region a = h.region();
        const Region e = Region::empty_region();
        if (h.sn(e, a) || h.sn(a, e)) {
            c = cx({e, a}, "empty set is strongly near A");
            return false;
        }
        if (a.is_empty()) return true;
        c = cx({h.whole(), a}, "X is not strongly near A");
        return h.sn(h.whole(), a) && h.sn(a, h.whole());
    };
    m["snN1"] = [](Harness& h, Counterexample& c) -> std::optional<bool> {
        const Region a = h.region(), b = h.region();
        c = cx({a, b}, "strong nearness is not symmetric");
        return h.sn(a, b) == h.sn(b, a);
    };
    m["snN2"] = [](Harness& h, Counterexample& c) -> std::optional<bool> {
        const Region a = h.region(), b = h.region();
        c = cx({a, b}, "strongly near sets do not intersect");
        return check(h.sn(a, b), regions_intersect(a, b));
    };
    m["snN3"] = [](Harness& h, Counterexample& c) -> std::optional<bool> {
        const auto family = random_family(h);
        const Region& pivot = family[h.index(family.size())];
        const Region a = h.unit() < 0.3 ? Region::unite(pivot, h.region()) : h.region();
        std::vector<Region> regions{a};
        regions.insert(regions.end(), family.begin(), family.end());
        c = cx(regions, "A strongly near B_i with nonempty interior, but not near the union");
        return check(pivot.has_interior() && h.sn(a, pivot), h.sn(a, family_union(family)));
    };
    m["snN4"] = [](Harness& h, Counterexample& c) -> std::optional<bool> {
        const Region a = h.region(), b = h.region();
        c = cx({a, b}, "interiors overlap but sets are not strongly near");
        return check(interiors_overlap(a, b), h.sn(a, b));
    };
    m["snN5"] = [](Harness& h, Counterexample& c) -> std::optional<bool> {
        const Region a = h.nonempty_region();
        const Point2 x = h.any_point(a);
        const Region sx = Region::singleton({x, {}}, a.ambient());
        c = cx({a}, "interior point is not strongly near A", x);
        return check(a.interior_contains(x), h.sn(sx, a));
    };
    m["snN6"] = [](Harness& h, Counterexample& c) -> std::optional<bool> {
        const Region a = h.nonempty_region();
        const Region b = h.unit() < 0.3 ? a : h.region();
        const auto x = h.boundary_point(a);
        if (!x) return std::nullopt;
        const Region sx = Region::singleton({*x, {}}, a.ambient());
        c = cx({a, b}, "boundary point x of A with A meeting B, but not (x sn A and A sn B)", *x);
        return check(regions_intersect(a, b), h.sn(sx, a) && h.sn(a, b));
    };
    m["snN7"] = [](Harness& h, Counterexample& c) -> std::optional<bool> {
        const SamplePoint x = h.sample_point();
        const SamplePoint y = h.unit() < 0.3 ? x : h.sample_point();
        const Region sx = Region::singleton(x), sy = Region::singleton(y);
        c = cx({sx, sy}, "singleton strong nearness differs from equality");
        return h.sn(sx, sy) == (x.position == y.position);
    };
    return m;
}

std::map<std::string, Instance> descriptive_lodato_instances() {
    std::map<std::string, Instance> m;
    m["dP0"] = [](Harness& h, Counterexample& c) -> std::optional<bool> {
        const Region a = h.region();
        const Region e = Region::empty_region();
        c = cx({e, a}, "empty set is descriptively near A");
        return !h.dnear(e, a) && !h.dnear(a, e);
    };
    m["dP1"] = [](Harness& h, Counterexample& c) -> std::optional<bool> {
        const Region a = h.region(), b = h.region();
        c = cx({a, b}, "descriptive nearness is not symmetric");
        return h.dnear(a, b) == h.dnear(b, a);
    };
    m["dP2"] = [](Harness& h, Counterexample& c) -> std::optional<bool> {
        const Region a = h.region(), b = h.region();
        c = cx({a, b}, "nonempty descriptive intersection without descriptive nearness");
        return check(h.dcap_nonempty(a, b), h.dnear(a, b));
    };
    m["dP3"] = [](Harness& h, Counterexample& c) -> std::optional<bool> {
        const Region a = h.region(), b = h.region(), d = h.region();
        c = cx({a, b, d}, "dnear(A, B u C) differs from dnear(A,B) or dnear(A,C)");
        return h.dnear(a, Region::unite(b, d)) == (h.dnear(a, b) || h.dnear(a, d));
    };
    m["dP4"] = [](Harness& h, Counterexample& c) -> std::optional<bool> {
        const Region a = h.region(), b = h.region();
        const Region target = h.unit() < 0.5 ? Region::unite(b, h.region()) : h.region();
        c = cx({a, b, target}, "A dnear B and every b dnear C, but A not dnear C");
        if (!h.dnear(a, b)) return std::nullopt;
        const auto bs = b.samples();
        const bool every = std::all_of(bs.begin(), bs.end(), [&](const SamplePoint& s) {
            return h.dnear(Region::singleton(s, b.ambient()), target);
        });
        return check(every, h.dnear(a, target));
    };
    return m;
}

std::map<std::string, Instance> descriptive_strong_instances() {
    std::map<std::string, Instance> m;
    m["dsnN0"] = [](Harness& h, Counterexample& c) -> std::optional<bool> {
        const Region a = h.region();
        const Region e = Region::empty_region();
        if (h.snd(e, a) || h.snd(a, e)) {
            c = cx({e, a}, "empty set is descriptively strongly near A");
            return false;
        }
        if (a.is_empty()) return true;
        c = cx({h.whole(), a}, "X is not descriptively strongly near A");
        return h.snd(h.whole(), a) && h.snd(a, h.whole());
    };
    m["dsnN1"] = [](Harness& h, Counterexample& c) -> std::optional<bool> {
        const Region a = h.region(), b = h.region();
        c = cx({a, b}, "descriptive strong nearness is not symmetric");
        return h.snd(a, b) == h.snd(b, a);
    };
    m["dsnN2"] = [](Harness& h, Counterexample& c) -> std::optional<bool> {
        const Region a = h.region(), b = h.region();
        c = cx({a, b}, "descriptively strongly near with empty descriptive intersection");
        return check(h.snd(a, b), h.dcap_nonempty(a, b));
    };
    m["dsnN3"] = [](Harness& h, Counterexample& c) -> std::optional<bool> {
        const auto family = random_family(h);
        const Region& pivot = family[h.index(family.size())];
        const Region a = h.unit() < 0.3 ? Region::unite(pivot, h.region()) : h.region();
        std::vector<Region> regions{a};
        regions.insert(regions.end(), family.begin(), family.end());
        c = cx(regions, "A snd B_i with nonempty interior, but not snd the union");
        return check(pivot.has_interior() && h.snd(a, pivot), h.snd(a, family_union(family)));
    };
    m["dsnN4"] = [](Harness& h, Counterexample& c) -> std::optional<bool> {
        const Region a = h.region(), b = h.region();
        c = cx({a, b}, "interiors share a description but sets are not snd");
        return check(h.interior_dcap_nonempty(a, b), h.snd(a, b));
    };
    m["dsnN5"] = [](Harness& h, Counterexample& c) -> std::optional<bool> {
        const Region a = h.nonempty_region();
        const SamplePoint x = h.sample_point();
        c = cx({a, Region::singleton(x)}, "x described in Int A, but {x} not snd A", x.position);
        return check(h.describes_interior(x, a), h.snd(Region::singleton(x, a.ambient()), a));
    };
    m["dsnN6"] = [](Harness& h, Counterexample& c) -> std::optional<bool> {
        const Region a = h.nonempty_region(), b = h.nonempty_region();
        const SamplePoint x = h.sample_point();
        c = cx({a, b, Region::singleton(x)}, "x described in Int A and Int B, but A not snd B",
               x.position);
        return check(h.describes_interior(x, a) && h.describes_interior(x, b), h.snd(a, b));
    };
    m["dsnN7"] = [](Harness& h, Counterexample& c) -> std::optional<bool> {
        const SamplePoint x = h.sample_point();
        const SamplePoint y = h.unit() < 0.3 ? x : h.sample_point();
        const Region sx = Region::singleton(x), sy = Region::singleton(y);
        c = cx({sx, sy}, "singleton snd differs from equal descriptions");
        return h.snd(sx, sy) == h.same_description(x, y);
    };
    return m;
}

} // namespace

AxiomReport verify_axioms(AxiomSystem system, const std::vector<Region>& universe, int trials,
                          std::uint64_t seed, const ProximalRelator& relator, const FeatureMap& phi) {
    if (universe.empty()) throw Error("axiom universe is empty");
    if (trials < 1) throw Error("trials must be at least 1");
    relator.validate();

    std::map<std::string, Instance> instances;
    switch (system) {
    case AxiomSystem::lodato: instances = lodato_instances(); break;
    case AxiomSystem::strong: instances = strong_instances(); break;
    case AxiomSystem::descriptive_lodato: instances = descriptive_lodato_instances(); break;
    case AxiomSystem::descriptive_strong: instances = descriptive_strong_instances(); break;
    }

    AxiomReport report{system, {}};
    std::uint64_t stream = 0;
    for (const std::string& id : axiom_ids(system)) {
        // Each axiom draws from its own stream so reports do not depend on axiom order.
        Harness h(universe, seed * 1000003u + stream++, relator, phi);
        AxiomResult result{id, true, 0, static_cast<std::size_t>(trials), std::nullopt};
        const Instance& run = instances.at(id);
        for (int t = 0; t < trials; ++t) {
            Counterexample c;
            const auto outcome = run(h, c);
            if (!outcome) continue;
            ++result.exercised;
            if (!*outcome) {
                result.passed = false;
                result.counterexample = std::move(c);
                break;
            }
        }
        report.results.push_back(std::move(result));
    }
    return report;
}

// ---- universe generation ----

FeatureVector universe_color(Point2 p, std::uint64_t seed, const UniverseOptions& options) {
    const auto& box = options.box;
    const int i = std::clamp(static_cast<int>(std::floor((p.x - box.min.x) / box.width() * options.grid)), 0, options.grid - 1);
    const int j = std::clamp(static_cast<int>(std::floor((p.y - box.min.y) / box.height() * options.grid)), 0, options.grid - 1);
    std::uint64_t hsh = seed ^ (0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(i * 7919 + j + 1));
    hsh ^= hsh >> 31;
    hsh *= 0xbf58476d1ce4e5b9ull;
    hsh ^= hsh >> 29;
    const auto label = static_cast<int>(hsh % static_cast<std::uint64_t>(std::max(1, options.palette)));
    return {static_cast<double>(label), static_cast<double>(label % 2), static_cast<double>(label / 2)};
}

std::vector<Region> make_random_universe(std::uint64_t seed, const UniverseOptions& options) {
    if (options.size < 1 || options.grid < 2) throw Error("universe needs a positive size and grid");
    Rng rng(seed);
    auto unit = [&] { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); };
    auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };

    const BoundingBox& box = options.box;
    const int g = options.grid;
    const double cw = box.width() / g;
    const double ch = box.height() / g;
    auto lattice = [&](int i, int j) { return Point2{box.min.x + (i + 0.5) * cw, box.min.y + (j + 0.5) * ch}; };
    auto colored = [&](Point2 p) { return SamplePoint{p, universe_color(p, seed, options)}; };
    auto lattice_samples_in = [&](const std::vector<Disk>& disks) {
        std::vector<SamplePoint> out;
        for (const Disk& d : disks) out.push_back(colored(d.center));
        for (int j = 0; j < g; ++j)
            for (int i = 0; i < g; ++i) {
                const Point2 p = lattice(i, j);
                if (std::any_of(disks.begin(), disks.end(), [&](const Disk& d) { return point_in_disk(p, d); }))
                    out.push_back(colored(p));
            }
        return out;
    };
    // Dyadic coordinates keep constructed tangencies exact.
    auto dyadic = [&](double lo, double hi) { return std::round((lo + unit() * (hi - lo)) * 256.0) / 256.0; };

    std::vector<Region> out;
    for (int k = 0; k + 1 < options.size; ++k) {
        const int kind = pick(5);
        if (kind == 0) {
            out.push_back(Region::singleton(colored(lattice(pick(g), pick(g))), box));
        } else if (kind == 1) {
            std::vector<SamplePoint> pts;
            const int n = 2 + pick(4);
            for (int q = 0; q < n; ++q) pts.push_back(colored(lattice(pick(g), pick(g))));
            out.push_back(Region::point_set(std::move(pts), box));
        } else if (kind == 2 || kind == 3) {
            std::vector<Disk> disks;
            const int n = 1 + pick(3);
            const double span = std::min(box.width(), box.height());
            for (int q = 0; q < n; ++q) {
                const double rad = dyadic(0.05 * span, 0.2 * span);
                if (q > 0 && unit() < 0.3) {
                    // Exactly tangent to the previous disk along the x axis.
                    const Disk& prev = disks.back();
                    const Point2 c{prev.center.x + prev.radius + rad, prev.center.y};
                    if (box.contains(c)) {
                        disks.emplace_back(c, rad);
                        continue;
                    }
                }
                disks.emplace_back(Point2{dyadic(box.min.x + rad, box.max.x - rad), dyadic(box.min.y + rad, box.max.y - rad)}, rad);
            }
            auto samples = lattice_samples_in(disks);
            out.push_back(Region::disk_union(std::move(disks), std::move(samples), box));
        } else {
            GridMask mask(g, g, box);
            const int blocks = 1 + pick(2);
            for (int b = 0; b < blocks; ++b) {
                const int i0 = pick(g), j0 = pick(g);
                const int w = 1 + pick(std::max(1, g / 3)), h = 1 + pick(std::max(1, g / 3));
                for (int j = j0; j < std::min(g, j0 + h); ++j)
                    for (int i = i0; i < std::min(g, i0 + w); ++i) mask.set(i, j, true);
            }
            std::vector<SamplePoint> samples;
            for (int j = 0; j < g; ++j)
                for (int i = 0; i < g; ++i)
                    if (mask.at(i, j)) samples.push_back(colored(mask.cell_center(i, j)));
            out.push_back(Region::grid_mask(std::move(mask), std::move(samples)));
        }
    }
    std::vector<SamplePoint> all;
    for (const auto& r : out)
        for (const auto& s : r.samples()) all.push_back(s);
    for (int j = 0; j < g; ++j)
        for (int i = 0; i < g; ++i) all.push_back(colored(lattice(i, j)));
    out.push_back(Region::whole(box, std::move(all)));
    return out;
}

} // namespace cech
