#pragma once

#include <stdexcept>
#include <string>

namespace cech {

/// Raised for invalid inputs or data (bad geometry, malformed files, empty regions).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configuration sits too close to a topological transition for the grid
/// oracle to resolve it at the requested resolution.
class UnstableConfiguration : public Error {
public:
    UnstableConfiguration()
        : Error("unstable configuration — increase resolution or perturb r") {}
};

} // namespace cech
