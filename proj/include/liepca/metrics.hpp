#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "liepca/density.hpp"
#include "liepca/matrix.hpp"

namespace liepca {

/// D(s, t) = ||y_s - z_t||_2.
inline Mat cost_matrix(const SampleSet& y, const SampleSet& z) {
  if (y.ambient_dim != z.ambient_dim)
    throw std::invalid_argument("cost_matrix: dimension mismatch");
  Mat d(y.size(), z.size());
  for (int s = 0; s < y.size(); ++s)
    for (int t = 0; t < z.size(); ++t) d(s, t) = dist(y.points[s], z.points[t]);
  return d;
}

/// Exact minimum-cost perfect assignment on a square cost matrix, by the
/// shortest-augmenting-path Hungarian method with potentials, O(N^3). Returns
/// the total cost; the matched column of each row lands in *perm if given.
inline double assignment_cost(const Mat& d, std::vector<int>* perm = nullptr) {
  if (!d.square()) throw std::invalid_argument("assignment_cost: non-square");
  const int n = d.rows();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      int j1 = -1;
      double delta = inf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = d(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  // canonical (sorted) summation so the value does not depend on which of the
  // two sets came first
  std::vector<double> matched(n);
  if (perm) perm->assign(n, -1);
  for (int j = 1; j <= n; ++j) {
    matched[j - 1] = d(p[j] - 1, j - 1);
    if (perm) (*perm)[p[j] - 1] = j - 1;
  }
  std::sort(matched.begin(), matched.end());
  double cost = 0.0;
  for (double c : matched) cost += c;
  return cost;
}

/// Normalized earth mover's distance between equal-size point sets with
/// uniform weights. The optimum of the doubly stochastic transport program is
/// attained at a permutation, so an exact assignment solve gives the value.
inline double nemd(const SampleSet& y, const SampleSet& z) {
  if (y.size() != z.size()) throw std::invalid_argument("nemd: size mismatch");
  if (y.size() < 1) throw std::invalid_argument("nemd: empty set");
  const Mat d = cost_matrix(y, z);
  return assignment_cost(d) / y.size();
}

/// Two-sided Hausdorff distance, brute force.
inline double hausdorff(const SampleSet& y, const SampleSet& z) {
  if (y.size() < 1 || z.size() < 1)
    throw std::invalid_argument("hausdorff: empty set");
  if (y.ambient_dim != z.ambient_dim)
    throw std::invalid_argument("hausdorff: dimension mismatch");
  double worst = 0.0;
  for (int s = 0; s < y.size(); ++s) {
    double best = std::numeric_limits<double>::infinity();
    for (int t = 0; t < z.size(); ++t)
      best = std::min(best, dist(y.points[s], z.points[t]));
    worst = std::max(worst, best);
  }
  for (int t = 0; t < z.size(); ++t) {
    double best = std::numeric_limits<double>::infinity();
    for (int s = 0; s < y.size(); ++s)
      best = std::min(best, dist(y.points[s], z.points[t]));
    worst = std::max(worst, best);
  }
  return worst;
}

inline SampleSet as_sample_set(const PointCloud& cloud) {
  SampleSet s;
  s.ambient_dim = cloud.ambient_dim;
  s.points = cloud.points;
  s.source.assign(cloud.points.size(), -1);
  s.retries.assign(cloud.points.size(), 0);
  s.fallback.assign(cloud.points.size(), false);
  return s;
}

}  // namespace liepca
