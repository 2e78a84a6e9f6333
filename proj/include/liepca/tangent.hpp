#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "liepca/basis.hpp"
#include "liepca/eigen.hpp"
#include "liepca/matrix.hpp"
#include "liepca/pointcloud.hpp"

namespace liepca {

struct TangentFrame {
  Vec base_point;
  OrthonormalBasis basis;
  bool degenerate = false;  // local covariance had rank < r
};

/// Indices of the k nearest points to point i (excluding i), nearest first,
/// ties broken toward the smaller index. Brute force.
inline std::vector<int> knn(const PointCloud& cloud, int i, int k) {
  const int n = cloud.size();
  if (i < 0 || i >= n) throw std::invalid_argument("knn: index out of range");
  if (k < 1 || k > n - 1) throw std::invalid_argument("knn: k out of range");
  std::vector<std::pair<double, int>> by_dist;
  by_dist.reserve(n - 1);
  for (int j = 0; j < n; ++j) {
    if (j == i) continue;
    by_dist.emplace_back(dist(cloud.points[i], cloud.points[j]), j);
  }
  std::sort(by_dist.begin(), by_dist.end());
  std::vector<int> idx(k);
  for (int j = 0; j < k; ++j) idx[j] = by_dist[j].second;
  return idx;
}

/// Tangent estimation by local PCA: for each point, PCA on the point plus its
/// k nearest neighbors; the top-r principal directions span the frame. Frames
/// whose local covariance has rank < r are completed arbitrarily inside the
/// zero eigenspace and flagged degenerate.
inline std::vector<TangentFrame> local_pca(const PointCloud& cloud, int k,
                                           int r) {
  const int n = cloud.size();
  const int d = cloud.ambient_dim;
  if (r < 1 || r > d) throw std::invalid_argument("local_pca: bad r");
  if (k < r) throw std::invalid_argument("local_pca: need k >= r");
  if (n < k + 1) throw std::invalid_argument("local_pca: need n >= k + 1");

  std::vector<TangentFrame> frames;
  frames.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> nbrs = knn(cloud, i, k);
    nbrs.push_back(i);

    Vec mean(d, 0.0);
    for (int j : nbrs)
      for (int c = 0; c < d; ++c) mean[c] += cloud.points[j][c];
    for (double& v : mean) v /= static_cast<double>(nbrs.size());

    Mat cov(d, d);
    for (int j : nbrs) {
      Vec diff(d);
      for (int c = 0; c < d; ++c) diff[c] = cloud.points[j][c] - mean[c];
      cov += outer(diff, diff);
    }

    const EigenDecomposition eig = sym_eig(cov);
    const double lam_max = eig.eigenvalues.back();
    const double retained = eig.eigenvalues[d - r];  // smallest kept value
    const bool degenerate = lam_max <= 0.0 || retained <= 1e-12 * lam_max;

    std::vector<Vec> top;
    top.reserve(r);
    for (int j = 0; j < r; ++j)
      top.push_back(eig.eigenvectors.vectors[d - 1 - j]);

    frames.push_back(TangentFrame{cloud.points[i],
                                  OrthonormalBasis{d, std::move(top)},
                                  degenerate});
  }
  return frames;
}

}  // namespace liepca
