#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "liepca/basis.hpp"
#include "liepca/matrix.hpp"

namespace liepca {

struct EigenDecomposition {
  Vec eigenvalues;          // ascending
  OrthonormalBasis eigenvectors;  // eigenvectors[k] pairs with eigenvalues[k]
};

/// Full symmetric eigendecomposition by cyclic Jacobi rotations.
/// Input must be symmetric up to 1e-10 (relative to its largest entry); it is
/// symmetrized before iterating. Eigenvalues come back ascending.
inline EigenDecomposition sym_eig(const Mat& s_in) {
  if (!s_in.square()) throw std::invalid_argument("sym_eig: non-square matrix");
  if (!s_in.is_finite()) throw std::invalid_argument("sym_eig: non-finite entry");
  const int n = s_in.rows();
  {
    const double scale = std::max(1.0, s_in.max_abs());
    double asym = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        asym = std::max(asym, std::abs(s_in(i, j) - s_in(j, i)));
    if (asym > 1e-10 * scale)
      throw std::invalid_argument("sym_eig: matrix not symmetric");
  }
  Mat a = symmetric_part(s_in);
  Mat v = Mat::identity(n);

  const double stop = 1e-14 * std::max(1e-300, a.frobenius_norm());
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += 2.0 * a(i, j) * a(i, j);
    if (std::sqrt(off) <= stop) break;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= 1e-300) continue;
        const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - sn * akq;
          a(k, q) = sn * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - sn * aqk;
          a(q, k) = sn * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - sn * vkq;
          v(k, q) = sn * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i) < a(j, j); });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors.ambient_dim = n;
  out.eigenvectors.vectors.resize(n);
  for (int k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]);
    out.eigenvectors.vectors[k] = v.col(order[k]);
  }
  return out;
}

/// Count of eigenvalues above rel_tol * lambda_max for a symmetric PSD
/// matrix. Throws if a clearly negative eigenvalue shows up.
inline int numerical_rank(const Mat& s, double rel_tol = 1e-8) {
  const EigenDecomposition eig = sym_eig(s);
  const double lambda_max = eig.eigenvalues.back();
  if (lambda_max <= 0.0) {
    if (eig.eigenvalues.front() < -rel_tol * std::abs(lambda_max) &&
        eig.eigenvalues.front() < 0.0)
      throw std::invalid_argument("numerical_rank: matrix not PSD");
    return 0;
  }
  if (eig.eigenvalues.front() < -rel_tol * lambda_max)
    throw std::invalid_argument("numerical_rank: matrix not PSD");
  int rank = 0;
  for (double lam : eig.eigenvalues)
    if (lam > rel_tol * lambda_max) ++rank;
  return rank;
}

/// 2-norm condition number, computed from the spectrum of Z^T Z.
inline double cond_2(const Mat& z) {
  const EigenDecomposition eig = sym_eig(z.transpose() * z);
  const double lo = eig.eigenvalues.front();
  const double hi = eig.eigenvalues.back();
  if (lo <= 0.0) return std::numeric_limits<double>::infinity();
  return std::sqrt(hi / lo);
}

}  // namespace liepca
