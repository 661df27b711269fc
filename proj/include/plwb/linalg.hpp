#pragma once

#include <optional>
#include <vector>

#include "plwb/rat.hpp"

namespace plwb {

using QVector = std::vector<Rat>;
using QMatrix = std::vector<QVector>;  // row-major

/// Basis of the null space {v : M v = 0}. Denominators are cleared per row and
/// the forward elimination is fraction-free (Bareiss); back-substitution over Q.
std::vector<QVector> kernel_basis(const QMatrix& m);

/// Exact rank.
std::size_t rank(const QMatrix& m);

/// Coefficients c with v = Σ c_i S_i, or nullopt when v is outside the span.
std::optional<QVector> span_membership(const QVector& v, const std::vector<QVector>& s);

}  // namespace plwb
