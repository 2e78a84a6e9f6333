#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "liepca/basis.hpp"
#include "liepca/eigen.hpp"
#include "liepca/matrix.hpp"
#include "liepca/pointcloud.hpp"
#include "liepca/tangent.hpp"

namespace liepca {

/// The operator A -> sum_i proj_{T_i^perp} A proj_{span x_i} on R^{d x d},
/// materialized as a d^2 x d^2 matrix under column-major flattening, with its
/// full spectrum. Its near-kernel estimates the symmetry Lie algebra.
struct LiePcaOperator {
  int d = 0;
  Mat matrix;
  Vec spectrum;              // ascending
  OrthonormalBasis eigvecs;  // in R^{d^2}, paired with spectrum
};

struct LieAlgebraEstimate {
  int d = 0;
  int ell = 0;
  std::vector<Mat> basis;   // ell orthonormal d x d matrices (Frobenius)
  Vec bottom_eigenvalues;   // the ell smallest, ascending
  double gap = 0.0;         // lambda_{ell+1} - lambda_ell
  bool degenerate = false;  // gap too small for a stable span
};

/// One summand of the operator: A -> proj_{T^perp} A proj_{span x}. Under
/// column-major vec this is kron(P_x, P_{T^perp}); an orthogonal projector of
/// rank d - dim T.
inline Mat annihilator_term(const Vec& x, const OrthonormalBasis& t) {
  const int d = static_cast<int>(x.size());
  if (t.ambient_dim != d)
    throw std::invalid_argument("annihilator_term: dimension mismatch");
  double nx2 = 0.0;
  for (double v : x) nx2 += v * v;
  if (nx2 == 0.0)
    throw std::invalid_argument("annihilator_term: undefined at x = 0");

  Mat p_x(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) p_x(i, j) = x[i] * x[j] / nx2;

  Mat p_n = Mat::identity(d);
  p_n -= projector(t);
  return kron(p_x, p_n);
}

/// Sum the annihilator terms over the sample and decompose. The operator is
/// PSD by construction; the spectrum is computed eagerly.
inline LiePcaOperator build_sigma(const PointCloud& cloud,
                                  const std::vector<TangentFrame>& frames) {
  const int d = cloud.ambient_dim;
  if (cloud.size() != static_cast<int>(frames.size()))
    throw std::invalid_argument("build_sigma: |frames| != |cloud|");
  LiePcaOperator op;
  op.d = d;
  op.matrix = Mat(d * d, d * d);
  for (int i = 0; i < cloud.size(); ++i) {
    double nx2 = 0.0;
    for (double v : cloud.points[i]) nx2 += v * v;
    if (nx2 == 0.0)
      throw std::invalid_argument("build_sigma: sample point " +
                                  std::to_string(i) + " is the origin");
    op.matrix += annihilator_term(cloud.points[i], frames[i].basis);
  }
  EigenDecomposition eig = sym_eig(op.matrix);
  op.spectrum = std::move(eig.eigenvalues);
  op.eigvecs = std::move(eig.eigenvectors);
  return op;
}

/// Bottom-ell eigenvectors reshaped to d x d matrices. Degeneracy (gap below
/// 1e-6 * lambda_max) is a warning flag, never an error: any ell bottom
/// eigenvectors are an acceptable output, the span is just unstable.
inline LieAlgebraEstimate estimate_lie_algebra(const LiePcaOperator& op,
                                               int ell) {
  const int dim = op.d * op.d;
  if (ell < 1 || ell > dim)
    throw std::invalid_argument("estimate_lie_algebra: ell out of range");
  LieAlgebraEstimate est;
  est.d = op.d;
  est.ell = ell;
  est.bottom_eigenvalues.assign(op.spectrum.begin(), op.spectrum.begin() + ell);
  est.basis.reserve(ell);
  for (int j = 0; j < ell; ++j)
    est.basis.push_back(unvec_column_major(op.eigvecs.vectors[j], op.d, op.d));
  est.gap = ell < dim ? op.spectrum[ell] - op.spectrum[ell - 1] : 0.0;
  const double lam_max = op.spectrum.back();
  est.degenerate = lam_max <= 0.0 || est.gap < 1e-6 * lam_max;
  return est;
}

/// The estimate's span as a flat orthonormal basis in R^{d^2}, comparable to
/// exact_sym_basis via subspace_distance.
inline OrthonormalBasis algebra_span(const LieAlgebraEstimate& est) {
  std::vector<Vec> flat;
  flat.reserve(est.basis.size());
  for (const Mat& m : est.basis) flat.push_back(vec_column_major(m));
  return OrthonormalBasis{est.d * est.d, std::move(flat)};
}

}  // namespace liepca
