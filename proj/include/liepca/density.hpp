#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "liepca/expm.hpp"
#include "liepca/lie_operator.hpp"
#include "liepca/manifold.hpp"
#include "liepca/matrix.hpp"
#include "liepca/pointcloud.hpp"
#include "liepca/rng.hpp"
#include "liepca/tangent.hpp"

namespace liepca {

enum class Method { BL1, BL2, KDE, LPCA, LIEPCA };

inline const char* method_name(Method m) {
  switch (m) {
    case Method::BL1: return "BL1";
    case Method::BL2: return "BL2";
    case Method::KDE: return "KDE";
    case Method::LPCA: return "LPCA";
    case Method::LIEPCA: return "LIEPCA";
  }
  return "?";
}

inline bool parse_method(const std::string& s, Method& out) {
  for (Method m : {Method::BL1, Method::BL2, Method::KDE, Method::LPCA,
                   Method::LIEPCA}) {
    if (s == method_name(m)) {
      out = m;
      return true;
    }
  }
  return false;
}

struct EstimatorConfig {
  Method method = Method::BL1;
  int n = 0;        // input sample size (echoed in outputs)
  int N = 0;        // draws to produce
  int k = 0;        // neighborhood size (LPCA/LIEPCA rejection, tangents)
  int r = 0;        // intrinsic dimension
  int ell = 0;      // Lie algebra dimension
  double sigma_a = 0.0;          // LIEPCA algebra scale; <= 0 picks default
  double rejection_factor = 2.0;  // c in rho = c * median k-NN radius
  int max_retries = 100;
  std::uint64_t seed = 0;
  double noise_sigma = 0.0;  // BL2 draws from the noisy distribution
};

/// Simulated draws with per-point provenance. source is the index of the
/// input point the draw was derived from (-1 for fresh BL2 draws); fallback
/// marks draws accepted only because the retry budget ran out.
struct SampleSet {
  int ambient_dim = 0;
  std::vector<Vec> points;
  std::vector<int> source;
  std::vector<int> retries;
  std::vector<bool> fallback;

  int size() const { return static_cast<int>(points.size()); }
};

/// Silverman's rule of thumb: h = sigma_hat * (4 / ((d+2) n))^(1/(d+4)) with
/// sigma_hat the per-coordinate sample standard deviations averaged.
inline double silverman_bandwidth(const PointCloud& cloud) {
  const int n = cloud.size();
  const int d = cloud.ambient_dim;
  if (n < 2) throw std::invalid_argument("silverman_bandwidth: need n >= 2");
  double sigma_hat = 0.0;
  for (int c = 0; c < d; ++c) {
    double mean = 0.0;
    for (const Vec& p : cloud.points) mean += p[c];
    mean /= n;
    double ss = 0.0;
    for (const Vec& p : cloud.points) ss += (p[c] - mean) * (p[c] - mean);
    sigma_hat += std::sqrt(ss / (n - 1));
  }
  sigma_hat /= d;
  return sigma_hat * std::pow(4.0 / ((d + 2.0) * n), 1.0 / (d + 4.0));
}

/// rho = rejection_factor * median over i of the distance from x_i to its
/// k-th nearest neighbor.
inline double rejection_radius(const PointCloud& cloud, int k,
                               double factor = 2.0) {
  const int n = cloud.size();
  if (k < 1 || k > n - 1)
    throw std::invalid_argument("rejection_radius: k out of range");
  Vec radii(n);
  for (int i = 0; i < n; ++i) {
    const std::vector<int> nb = knn(cloud, i, k);
    radii[i] = dist(cloud.points[i], cloud.points[nb.back()]);
  }
  std::sort(radii.begin(), radii.end());
  const double median = n % 2 == 1 ? radii[n / 2]
                                   : 0.5 * (radii[n / 2 - 1] + radii[n / 2]);
  return factor * median;
}

namespace detail {

inline double min_dist_to_cloud(const Vec& y, const PointCloud& cloud) {
  double best = std::numeric_limits<double>::infinity();
  for (const Vec& x : cloud.points) best = std::min(best, dist(y, x));
  return best;
}

}  // namespace detail

/// BL1: each draw is a uniform pick from the input points.
inline SampleSet bl1(const PointCloud& cloud, const EstimatorConfig& cfg) {
  const int n = cloud.size();
  if (n < 1) throw std::invalid_argument("bl1: empty cloud");
  if (cfg.N < 1) throw std::invalid_argument("bl1: N must be >= 1");
  SampleSet out;
  out.ambient_dim = cloud.ambient_dim;
  for (int s = 0; s < cfg.N; ++s) {
    Rng rng = Rng::substream(cfg.seed, static_cast<std::uint64_t>(s));
    const int t = rng.uniform_int(n);
    out.points.push_back(cloud.points[t]);
    out.source.push_back(t);
    out.retries.push_back(0);
    out.fallback.push_back(false);
  }
  return out;
}

/// BL2: fresh draws from the true distribution (the unachievable baseline).
inline SampleSet bl2(const AnalyticManifold& m, const EstimatorConfig& cfg) {
  if (cfg.N < 1) throw std::invalid_argument("bl2: N must be >= 1");
  const PointCloud fresh = sample(m, cfg.N, cfg.seed, cfg.noise_sigma);
  SampleSet out;
  out.ambient_dim = fresh.ambient_dim;
  out.points = fresh.points;
  out.source.assign(cfg.N, -1);
  out.retries.assign(cfg.N, 0);
  out.fallback.assign(cfg.N, false);
  return out;
}

/// KDE: y = x_t + g with g isotropic Gaussian at the Silverman bandwidth.
inline SampleSet kde(const PointCloud& cloud, const EstimatorConfig& cfg) {
  const int n = cloud.size();
  const int d = cloud.ambient_dim;
  if (cfg.N < 1) throw std::invalid_argument("kde: N must be >= 1");
  const double h = silverman_bandwidth(cloud);
  SampleSet out;
  out.ambient_dim = d;
  for (int s = 0; s < cfg.N; ++s) {
    Rng rng = Rng::substream(cfg.seed, static_cast<std::uint64_t>(s));
    const int t = rng.uniform_int(n);
    Vec y = cloud.points[t];
    const Vec g = rng.gaussian_vector(d);
    for (int c = 0; c < d; ++c) y[c] += h * g[c];
    out.points.push_back(std::move(y));
    out.source.push_back(t);
    out.retries.push_back(0);
    out.fallback.push_back(false);
  }
  return out;
}

/// LPCA: y = x_t + g with g Gaussian inside the estimated tangent frame at
/// x_t (std h per direction); draws farther than rho from every input point
/// are replaced, up to max_retries.
inline SampleSet lpca_sampler(const PointCloud& cloud,
                              const std::vector<TangentFrame>& frames,
                              const EstimatorConfig& cfg) {
  const int n = cloud.size();
  const int d = cloud.ambient_dim;
  if (static_cast<int>(frames.size()) != n)
    throw std::invalid_argument("lpca_sampler: |frames| != |cloud|");
  if (cfg.N < 1) throw std::invalid_argument("lpca_sampler: N must be >= 1");
  const double h = silverman_bandwidth(cloud);
  const double rho = rejection_radius(cloud, cfg.k, cfg.rejection_factor);

  SampleSet out;
  out.ambient_dim = d;
  for (int s = 0; s < cfg.N; ++s) {
    Rng rng = Rng::substream(cfg.seed, static_cast<std::uint64_t>(s));
    Vec y;
    int t = 0, attempt = 0;
    bool accepted = false;
    for (attempt = 0; attempt <= cfg.max_retries; ++attempt) {
      t = rng.uniform_int(n);
      y = cloud.points[t];
      const int r_dim = frames[t].basis.size();
      for (int j = 0; j < r_dim; ++j) {
        const double g = rng.normal();
        for (int c = 0; c < d; ++c)
          y[c] += h * g * frames[t].basis.vectors[j][c];
      }
      if (detail::min_dist_to_cloud(y, cloud) <= rho) {
        accepted = true;
        break;
      }
    }
    out.points.push_back(std::move(y));
    out.source.push_back(t);
    out.retries.push_back(std::min(attempt, cfg.max_retries));
    out.fallback.push_back(!accepted);
  }
  return out;
}

inline double default_algebra_scale(int ell, int n) {
  return std::pow(4.0 / ((ell + 2.0) * n), 1.0 / (ell + 4.0));
}

/// Lie PCA sampling: y = exp(A) x_t with A a spherical Gaussian in the
/// estimated algebra, scaled by sigma_a; same rejection rule as LPCA.
inline SampleSet liepca_sampler(const PointCloud& cloud,
                                const LieAlgebraEstimate& est,
                                const EstimatorConfig& cfg) {
  const int n = cloud.size();
  const int d = cloud.ambient_dim;
  if (est.d != d) throw std::invalid_argument("liepca_sampler: dim mismatch");
  if (cfg.N < 1) throw std::invalid_argument("liepca_sampler: N must be >= 1");
  const double sigma_a =
      cfg.sigma_a > 0.0 ? cfg.sigma_a : default_algebra_scale(est.ell, n);
  const double rho = rejection_radius(cloud, cfg.k, cfg.rejection_factor);

  SampleSet out;
  out.ambient_dim = d;
  for (int s = 0; s < cfg.N; ++s) {
    Rng rng = Rng::substream(cfg.seed, static_cast<std::uint64_t>(s));
    Vec y;
    int t = 0, attempt = 0;
    bool accepted = false;
    for (attempt = 0; attempt <= cfg.max_retries; ++attempt) {
      t = rng.uniform_int(n);
      Mat a(d, d);
      for (const Mat& v : est.basis) {
        const double g = rng.normal();
        a += (sigma_a * g) * v;
      }
      y = mat_exp(a) * cloud.points[t];
      if (detail::min_dist_to_cloud(y, cloud) <= rho) {
        accepted = true;
        break;
      }
    }
    out.points.push_back(std::move(y));
    out.source.push_back(t);
    out.retries.push_back(std::min(attempt, cfg.max_retries));
    out.fallback.push_back(!accepted);
  }
  return out;
}

}  // namespace liepca
