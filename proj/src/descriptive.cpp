#include "cech/descriptive.hpp"

#include "cech/error.hpp"

#include <algorithm>
#include <cmath>

namespace cech {

// ---- feature maps ----

FeatureMap::FeatureMap(std::string name, std::size_t arity, Function fn)
    : name_(std::move(name)), arity_(arity), fn_(std::move(fn)) {
    if (!fn_) throw Error("feature map needs an evaluation function");
}

FeatureMap FeatureMap::position() {
    return {"position", 2, [](const SamplePoint& p) { return FeatureVector{p.position.x, p.position.y}; }};
}

FeatureMap FeatureMap::grayscale() {
    return {"grayscale", 1, [](const SamplePoint& p) {
                if (p.features.empty()) throw Error("grayscale feature needs one payload column");
                return FeatureVector{p.features[0]};
            }};
}

FeatureMap FeatureMap::color() {
    return {"color", 3, [](const SamplePoint& p) {
                if (p.features.size() < 3) throw Error("color feature needs three payload columns");
                return FeatureVector(p.features.begin(), p.features.begin() + 3);
            }};
}

FeatureMap FeatureMap::constant(FeatureVector value) {
    const std::size_t n = value.size();
    return {"constant", n, [value = std::move(value)](const SamplePoint&) { return value; }};
}

FeatureMap FeatureMap::payload(std::size_t arity) {
    return {"payload", arity, [](const SamplePoint& p) { return p.features; }};
}

FeatureMap FeatureMap::by_name(std::string_view name, std::size_t payload_arity) {
    if (name == "position") return position();
    if (name == "grayscale") return grayscale();
    if (name == "color") return color();
    if (name == "constant") return constant();
    if (name == "payload") return payload(payload_arity);
    throw Error("unknown feature map: " + std::string(name));
}

FeatureVector FeatureMap::operator()(const SamplePoint& p) const {
    FeatureVector v = fn_(p);
    if (v.size() != arity_)
        throw Error("feature map " + name_ + " produced a vector of the wrong dimension");
    for (double c : v)
        if (!std::isfinite(c)) throw Error("feature components must be finite");
    return v;
}

double feature_distance(const FeatureVector& a, const FeatureVector& b) {
    if (a.size() != b.size()) throw Error("feature vectors differ in dimension");
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        s += d * d;
    }
    return std::sqrt(s);
}

bool features_match(const FeatureVector& a, const FeatureVector& b, double tol) {
    if (tol == 0.0) {
        if (a.size() != b.size()) throw Error("feature vectors differ in dimension");
        return a == b;
    }
    return feature_distance(a, b) <= tol;
}

double default_feature_tolerance(std::span<const SamplePoint> samples) {
    for (const auto& s : samples)
        for (double c : s.features)
            if (c != std::floor(c)) return 1e-9;
    return 0.0;
}

// ---- descriptive relations on regions ----

namespace {

struct Described {
    SamplePoint sample;
    FeatureVector feature;
};

std::vector<Described> describe(const Region& r, const FeatureMap& phi) {
    std::vector<Described> out;
    if (r.is_empty()) return out;
    const auto samples = r.samples();
    if (samples.empty()) throw Error("descriptive ops need finite point sets");
    out.reserve(samples.size());
    for (const auto& s : samples) out.push_back({s, phi(s)});
    return out;
}

std::vector<Described> interior_described(const Region& r, const FeatureMap& phi) {
    auto all = describe(r, phi);
    std::erase_if(all, [&](const Described& d) { return !r.interior_contains(d.sample.position); });
    return all;
}

bool any_match(const std::vector<Described>& xs, const std::vector<Described>& ys, double tol) {
    for (const auto& x : xs)
        for (const auto& y : ys)
            if (features_match(x.feature, y.feature, tol)) return true;
    return false;
}

bool matches_some(const FeatureVector& f, const std::vector<Described>& ys, double tol) {
    return std::any_of(ys.begin(), ys.end(),
                       [&](const Described& y) { return features_match(f, y.feature, tol); });
}

void check_tolerance(double tol) {
    if (!(tol >= 0.0) || !std::isfinite(tol)) throw Error("feature tolerance must be finite and nonnegative");
}

} // namespace

Region descriptive_intersection(const Region& a, const Region& b, const FeatureMap& phi,
                                double tol) {
    check_tolerance(tol);
    const auto da = describe(a, phi);
    const auto db = describe(b, phi);
    std::vector<SamplePoint> out;
    auto consider = [&](const Described& d) {
        if (!matches_some(d.feature, da, tol) || !matches_some(d.feature, db, tol)) return;
        if (std::find(out.begin(), out.end(), d.sample) == out.end()) out.push_back(d.sample);
    };
    for (const auto& d : da) consider(d);
    for (const auto& d : db) consider(d);
    return Region::point_set(std::move(out), a.ambient() ? a.ambient() : b.ambient());
}

bool descriptively_near(const Region& a, const Region& b, const FeatureMap& phi, double tol) {
    check_tolerance(tol);
    return any_match(describe(a, phi), describe(b, phi), tol);
}

bool strongly_descriptively_near(const Region& a, const Region& b, const FeatureMap& phi,
                                 double tol) {
    check_tolerance(tol);
    if (a.is_empty() || b.is_empty()) return false;
    if (a.is_whole() || b.is_whole()) return true;
    if (a.is_singleton() && b.is_singleton())
        return features_match(phi(a.points().front()), phi(b.points().front()), tol);
    if (a.is_singleton())
        return matches_some(phi(a.points().front()), interior_described(b, phi), tol);
    if (b.is_singleton())
        return matches_some(phi(b.points().front()), interior_described(a, phi), tol);
    return any_match(interior_described(a, phi), interior_described(b, phi), tol);
}

// ---- nerves ----

BallFeatures mean_ball_features(std::span<const Point2> centers, double r,
                                std::span<const SamplePoint> domain, const FeatureMap& phi) {
    BallFeatures out;
    out.reserve(centers.size());
    for (Point2 c : centers) {
        const Disk ball(c, r);
        FeatureVector sum(phi.arity(), 0.0);
        std::size_t n = 0;
        for (const auto& s : domain) {
            if (!point_in_disk(s.position, ball)) continue;
            const auto f = phi(s);
            for (std::size_t k = 0; k < f.size(); ++k) sum[k] += f[k];
            ++n;
        }
        if (n == 0) {
            out.push_back(phi(SamplePoint{c, {}}));
            continue;
        }
        for (double& v : sum) v /= static_cast<double>(n);
        out.push_back(std::move(sum));
    }
    return out;
}

bool nerves_descriptively_near(const CechNerve& a, const CechNerve& b,
                               const BallFeatures& features, double tol) {
    check_tolerance(tol);
    if (a.configuration().size() != features.size() || b.configuration().size() != features.size())
        throw Error("ball features do not match the center configuration");
    for (int i : a.members())
        for (int j : b.members())
            if (features_match(features[static_cast<std::size_t>(i)],
                               features[static_cast<std::size_t>(j)], tol))
                return true;
    return false;
}

Region nerve_region(const CechNerve& nerve, std::span<const SamplePoint> domain) {
    const auto balls = nerve.disks();
    std::vector<SamplePoint> inside;
    for (const auto& s : domain) {
        if (std::any_of(balls.begin(), balls.end(),
                        [&](const Disk& d) { return point_in_disk(s.position, d); }))
            inside.push_back(s);
    }
    return Region::point_set(std::move(inside));
}

// ---- descriptive balls and complexes ----

namespace {

std::vector<FeatureVector> evaluate_all(std::span<const SamplePoint> domain, const FeatureMap& phi) {
    std::vector<FeatureVector> out;
    out.reserve(domain.size());
    for (const auto& s : domain) out.push_back(phi(s));
    return out;
}

std::vector<std::size_t> ball_members(const FeatureVector& center,
                                      const std::vector<FeatureVector>& features, double radius) {
    std::vector<std::size_t> members;
    for (std::size_t q = 0; q < features.size(); ++q)
        if (feature_distance(center, features[q]) <= radius) members.push_back(q);
    return members;
}

using Bits = std::vector<std::uint64_t>;

Bits to_bits(const std::vector<std::size_t>& members, std::size_t n) {
    Bits b((n + 63) / 64, 0);
    for (std::size_t m : members) b[m / 64] |= std::uint64_t{1} << (m % 64);
    return b;
}

bool any_bits(const Bits& b) {
    return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

Bits and_bits(const Bits& a, const Bits& b) {
    Bits out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] & b[k];
    return out;
}

void check_feature_radius(double feature_radius) {
    if (!(feature_radius > 0.0) || !std::isfinite(feature_radius))
        throw Error("feature radius must be positive");
}

} // namespace

DescriptiveBall build_descriptive_ball(const SamplePoint& p, std::span<const SamplePoint> domain,
                                       const FeatureMap& phi, double feature_radius) {
    check_feature_radius(feature_radius);
    const auto it = std::find(domain.begin(), domain.end(), p);
    if (it == domain.end()) throw Error("ball center is not in the domain");
    const auto features = evaluate_all(domain, phi);
    const auto index = static_cast<std::size_t>(it - domain.begin());
    return {index, p, feature_radius, ball_members(features[index], features, feature_radius)};
}

DescriptiveNerve::DescriptiveNerve(std::vector<DescriptiveBall> balls) : balls_(std::move(balls)) {
    if (balls_.empty()) throw Error("nerve needs at least one ball");
    common_ = balls_.front().members;
    for (std::size_t k = 1; k < balls_.size(); ++k) {
        std::vector<std::size_t> next;
        std::set_intersection(common_.begin(), common_.end(), balls_[k].members.begin(),
                              balls_[k].members.end(), std::back_inserter(next));
        common_ = std::move(next);
    }
    if (common_.empty()) throw Error("descriptive balls have no common member");
}

SimplicialComplex build_descriptive_nerve_complex(std::span<const SamplePoint> domain,
                                                  const FeatureMap& phi, double feature_radius,
                                                  int max_dim) {
    check_feature_radius(feature_radius);
    if (max_dim < 0) throw Error("max_dim must be nonnegative");
    const std::size_t n = domain.size();
    SimplicialComplex complex(static_cast<int>(n), max_dim);
    if (n == 0 || max_dim == 0) return complex;

    const auto features = evaluate_all(domain, phi);
    std::vector<Bits> members;
    members.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        members.push_back(to_bits(ball_members(features[i], features, feature_radius), n));

    std::vector<std::vector<int>> upper(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (any_bits(and_bits(members[i], members[j]))) upper[i].push_back(static_cast<int>(j));

    // Depth-first clique growth carrying the running intersection of member sets.
    std::vector<int> simplex;
    auto grow = [&](auto&& self, const Bits& common) -> void {
        if (static_cast<int>(simplex.size()) - 1 >= max_dim) return;
        for (int v : upper[static_cast<std::size_t>(simplex.back())]) {
            Bits next = and_bits(common, members[static_cast<std::size_t>(v)]);
            if (!any_bits(next)) continue;
            simplex.push_back(v);
            complex.insert(simplex);
            self(self, next);
            simplex.pop_back();
        }
    };
    for (std::size_t i = 0; i < n; ++i) {
        simplex = {static_cast<int>(i)};
        grow(grow, members[i]);
    }
    return complex;
}

std::vector<DescriptiveNerve> descriptive_nerves(const SimplicialComplex& complex,
                                                 std::span<const SamplePoint> domain,
                                                 const FeatureMap& phi, double feature_radius) {
    if (static_cast<std::size_t>(complex.vertex_count()) != domain.size())
        throw Error("complex and domain differ in size");
    const auto features = evaluate_all(domain, phi);
    std::vector<DescriptiveNerve> out;
    for (const Simplex& facet : complex.facets()) {
        std::vector<DescriptiveBall> balls;
        for (int v : facet) {
            const auto i = static_cast<std::size_t>(v);
            balls.push_back({i, domain[i], feature_radius,
                             ball_members(features[i], features, feature_radius)});
        }
        out.emplace_back(std::move(balls));
    }
    return out;
}

} // namespace cech
