#pragma once

#include "cech/complex.hpp"
#include "cech/region.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cech {

/// Maps a sample point (position plus payload) to a real feature vector.
class FeatureMap {
public:
    using Function = std::function<FeatureVector(const SamplePoint&)>;

    FeatureMap(std::string name, std::size_t arity, Function fn);

    /// Φ(p) = (x, y).
    static FeatureMap position();
    /// First payload component.
    static FeatureMap grayscale();
    /// First three payload components.
    static FeatureMap color();
    /// The same vector for every point.
    static FeatureMap constant(FeatureVector value = {0.0});
    /// All payload components, which must number `arity`.
    static FeatureMap payload(std::size_t arity);

    /// Built-ins by name: position, grayscale, color, constant, payload.
    static FeatureMap by_name(std::string_view name, std::size_t payload_arity = 0);

    const std::string& name() const { return name_; }
    std::size_t arity() const { return arity_; }

    /// Throws if the result has the wrong dimension or a non-finite component.
    FeatureVector operator()(const SamplePoint& p) const;

private:
    std::string name_;
    std::size_t arity_;
    Function fn_;
};

double feature_distance(const FeatureVector& a, const FeatureVector& b);

/// ‖a − b‖ ≤ tol; tol = 0 means exact equality.
bool features_match(const FeatureVector& a, const FeatureVector& b, double tol);

/// 0 when every payload component of the samples is integer-valued, else 1e-9.
double default_feature_tolerance(std::span<const SamplePoint> samples);

/// Sample points of A ∪ B whose description occurs (within tol) both in Φ(A) and Φ(B).
/// The result is a point-set region; a sample present in both inputs appears once.
Region descriptive_intersection(const Region& a, const Region& b, const FeatureMap& phi,
                                double tol = 0.0);

bool descriptively_near(const Region& a, const Region& b, const FeatureMap& phi,
                        double tol = 0.0);

/// Descriptive intersection restricted to interior samples of both regions,
/// with the whole-space and singleton conventions.
bool strongly_descriptively_near(const Region& a, const Region& b, const FeatureMap& phi,
                                 double tol = 0.0);

/// One feature vector per ball of a configuration, indexed like the centers.
using BallFeatures = std::vector<FeatureVector>;

/// Mean of Φ over the domain samples inside each closed ball. A ball that holds
/// no sample takes Φ of a sample placed at its center with an empty payload.
BallFeatures mean_ball_features(std::span<const Point2> centers, double r,
                                std::span<const SamplePoint> domain, const FeatureMap& phi);

bool nerves_descriptively_near(const CechNerve& a, const CechNerve& b,
                               const BallFeatures& features, double tol = 0.0);

/// Domain samples lying in the union of the nerve's closed balls.
Region nerve_region(const CechNerve& nerve, std::span<const SamplePoint> domain);

struct DescriptiveBall {
    std::size_t center_index; // into the domain
    SamplePoint center;
    double feature_radius;
    std::vector<std::size_t> members; // ascending domain indices
};

DescriptiveBall build_descriptive_ball(const SamplePoint& p, std::span<const SamplePoint> domain,
                                       const FeatureMap& phi, double feature_radius);

/// Descriptive balls whose member sets share at least one domain point.
class DescriptiveNerve {
public:
    explicit DescriptiveNerve(std::vector<DescriptiveBall> balls);

    const std::vector<DescriptiveBall>& balls() const { return balls_; }
    const std::vector<std::size_t>& common_members() const { return common_; }

private:
    std::vector<DescriptiveBall> balls_;
    std::vector<std::size_t> common_;
};

/// Complex over domain indices: a simplex is a set of descriptive balls with a
/// common member. Witnesses may be any domain point.
SimplicialComplex build_descriptive_nerve_complex(std::span<const SamplePoint> domain,
                                                  const FeatureMap& phi, double feature_radius,
                                                  int max_dim = 2);

/// Facets of the descriptive complex as nerves (the collection cx_Φ K).
std::vector<DescriptiveNerve> descriptive_nerves(const SimplicialComplex& complex,
                                                 std::span<const SamplePoint> domain,
                                                 const FeatureMap& phi, double feature_radius);

} // namespace cech
