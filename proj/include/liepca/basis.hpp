#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "liepca/matrix.hpp"

namespace liepca {

inline constexpr double kOrthoTol = 1e-10;

/// A list of pairwise-orthonormal unit vectors in R^ambient_dim. The vectors
/// may themselves be flattened d x d matrices (ambient_dim = d^2), in which
/// case orthonormality is with respect to the Frobenius inner product.
struct OrthonormalBasis {
  int ambient_dim = 0;
  std::vector<Vec> vectors;

  int size() const { return static_cast<int>(vectors.size()); }

  static OrthonormalBasis empty(int ambient_dim) {
    return OrthonormalBasis{ambient_dim, {}};
  }

  /// Validating constructor; rejects vectors of the wrong length and sets
  /// that fail the orthonormality invariant.
  static OrthonormalBasis from_vectors(int ambient_dim, std::vector<Vec> vs);
};

inline bool is_orthonormal(const std::vector<Vec>& vs, double tol = kOrthoTol) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i; j < vs.size(); ++j) {
      const double expect = (i == j) ? 1.0 : 0.0;
      if (std::abs(dot(vs[i], vs[j]) - expect) > tol) return false;
    }
  }
  return true;
}

inline OrthonormalBasis OrthonormalBasis::from_vectors(int ambient_dim,
                                                       std::vector<Vec> vs) {
  for (const Vec& v : vs) {
    if (static_cast<int>(v.size()) != ambient_dim)
      throw std::invalid_argument("OrthonormalBasis: wrong vector length");
    if (!all_finite(v))
      throw std::invalid_argument("OrthonormalBasis: non-finite entry");
  }
  if (!is_orthonormal(vs))
    throw std::invalid_argument("OrthonormalBasis: vectors not orthonormal");
  return OrthonormalBasis{ambient_dim, std::move(vs)};
}

/// P = sum_k u_k u_k^T. Idempotent, symmetric, trace = basis size.
inline Mat projector(const OrthonormalBasis& basis) {
  if (!is_orthonormal(basis.vectors))
    throw std::invalid_argument("projector: basis not orthonormal");
  Mat p(basis.ambient_dim, basis.ambient_dim);
  for (const Vec& u : basis.vectors) {
    if (static_cast<int>(u.size()) != basis.ambient_dim)
      throw std::invalid_argument("projector: wrong vector length");
    for (int i = 0; i < basis.ambient_dim; ++i)
      for (int j = 0; j < basis.ambient_dim; ++j) p(i, j) += u[i] * u[j];
  }
  return p;
}

/// Modified Gram-Schmidt with one re-orthogonalization pass. Vectors whose
/// residual drops below drop_tol (relative to the larger of 1 and the input
/// norm) are discarded as dependent.
inline OrthonormalBasis orthonormalize(int ambient_dim,
                                       const std::vector<Vec>& spanning,
                                       double drop_tol = 1e-10) {
  std::vector<Vec> out;
  for (Vec v : spanning) {
    if (static_cast<int>(v.size()) != ambient_dim)
      throw std::invalid_argument("orthonormalize: wrong vector length");
    const double scale = std::max(1.0, norm(v));
    for (int pass = 0; pass < 2; ++pass) {
      for (const Vec& u : out) {
        const double c = dot(u, v);
        for (int i = 0; i < ambient_dim; ++i) v[i] -= c * u[i];
      }
    }
    const double n = norm(v);
    if (n > drop_tol * scale) {
      for (double& x : v) x /= n;
      out.push_back(std::move(v));
    }
  }
  return OrthonormalBasis{ambient_dim, std::move(out)};
}

/// Orthonormal basis of the orthogonal complement of span(basis).
inline OrthonormalBasis complement(const OrthonormalBasis& basis) {
  const int d = basis.ambient_dim;
  std::vector<Vec> all = basis.vectors;
  for (int i = 0; i < d && static_cast<int>(all.size()) < d; ++i) {
    Vec e(d, 0.0);
    e[i] = 1.0;
    Vec v = e;
    for (int pass = 0; pass < 2; ++pass) {
      for (const Vec& u : all) {
        const double c = dot(u, v);
        for (int j = 0; j < d; ++j) v[j] -= c * u[j];
      }
    }
    const double n = norm(v);
    if (n > 1e-8) {
      for (double& x : v) x /= n;
      all.push_back(std::move(v));
    }
  }
  if (static_cast<int>(all.size()) != d)
    throw std::runtime_error("complement: failed to complete basis");
  std::vector<Vec> comp(all.begin() + basis.size(), all.end());
  return OrthonormalBasis{d, std::move(comp)};
}

}  // namespace liepca
