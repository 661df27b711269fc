#pragma once

#include <functional>

#include "plwb/lincomb.hpp"
#include "plwb/linalg.hpp"

namespace plwb {

struct NonGenericProjection : std::domain_error {
    NonGenericProjection() : std::domain_error("projection leaves a degenerate configuration") {}
};

/// Configuration of k+1 vectors of F^r in generic position (all maximal minors
/// nonzero), up to nothing — representatives are stored as given.
struct Configuration {
    std::vector<QVector> points;  // each of dimension r

    std::size_t dim() const { return points.empty() ? 0 : points[0].size(); }
    friend bool operator<(const Configuration& a, const Configuration& b) {
        return a.points < b.points;
    }
    friend bool operator==(const Configuration& a, const Configuration& b) {
        return a.points == b.points;
    }
};

/// Verifies genericity: every r-subset of the points has nonzero determinant.
bool is_generic(const Configuration& c);
Configuration make_configuration(std::vector<QVector> pts);  // throws DegenerateTuple-style

using ConfigChain = LinComb<Configuration>;

/// ∂ = Σ (-1)^i omit(i).
ConfigChain config_boundary(const Configuration& c);
ConfigChain config_boundary(const ConfigChain& c);

/// ∂' = Σ (-1)^i project-along(a_i), the projection dropping the pivot
/// coordinate of a_i (largest-magnitude pivot, documented and permuted in tests).
ConfigChain config_project(const Configuration& c, int pivot_rule = 0);
ConfigChain config_project(const ConfigChain& c, int pivot_rule = 0);

}  // namespace plwb
