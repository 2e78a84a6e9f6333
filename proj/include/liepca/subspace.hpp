#pragma once

#include <cmath>
#include <stdexcept>

#include "liepca/basis.hpp"
#include "liepca/matrix.hpp"

namespace liepca {

/// Chordal distance between equal-dimensional subspaces:
/// ||P_U - P_V||_F / sqrt(2) = sqrt(sum_k sin^2 theta_k) over principal
/// angles. Zero iff the spans coincide; at most sqrt(l) for l-dim inputs.
inline double subspace_distance(const OrthonormalBasis& u,
                                const OrthonormalBasis& v) {
  if (u.ambient_dim != v.ambient_dim)
    throw std::invalid_argument("subspace_distance: ambient dim mismatch");
  if (u.size() != v.size())
    throw std::invalid_argument("subspace_distance: subspace dim mismatch");
  const Mat diff = projector(u) - projector(v);
  return diff.frobenius_norm() / std::sqrt(2.0);
}

}  // namespace liepca
