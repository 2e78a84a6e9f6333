#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "liepca/density.hpp"
#include "liepca/lie_operator.hpp"
#include "liepca/manifold.hpp"
#include "liepca/metrics.hpp"
#include "liepca/pointcloud.hpp"
#include "liepca/svg.hpp"
#include "liepca/tangent.hpp"

namespace liepca {

struct Scenario {
  std::string name;
  AnalyticManifold manifold;
  int n = 30, N = 300, k = 2, r = 1, ell = 1;
  double noise_sigma = 0.0;
};

/// The stock experiment grid: three curves in R^2 (n=30, N=300, k=2, r=1,
/// ell=1), a noisy ellipse (n=60, k=10), and a torus in R^3 (n=60, k=20, r=2,
/// ell=1). The noisy ellipse uses noise std 0.05 x (manifold diameter).
inline std::vector<Scenario> default_scenarios() {
  std::vector<Scenario> s;
  s.push_back({"line", AnalyticManifold::line2d(), 30, 300, 2, 1, 1, 0.0});
  s.push_back({"ellipse", AnalyticManifold::ellipse(2.0, 1.0), 30, 300, 2, 1, 1, 0.0});
  s.push_back({"hyperbola", AnalyticManifold::hyperbola(1.5), 30, 300, 2, 1, 1, 0.0});
  s.push_back({"ellipse_noise", AnalyticManifold::ellipse(2.0, 1.0), 60, 300, 10, 1, 1, 0.2});
  s.push_back({"torus", AnalyticManifold::torus(2.0, 0.5), 60, 300, 20, 2, 1, 0.0});
  return s;
}

inline std::vector<Method> default_methods() {
  return {Method::BL1, Method::KDE, Method::LPCA, Method::LIEPCA, Method::BL2};
}

struct CellResult {
  std::string manifold;
  std::string method;
  double nemd_median = 0.0, nemd_iqr = 0.0;
  double hausdorff_median = 0.0, hausdorff_iqr = 0.0;
  int trials = 0;
  bool failed = false;
};

struct GridOutcome {
  std::vector<CellResult> rows;
  bool any_failed = false;
};

/// First-trial outputs kept around for plotting.
struct TrialArtifacts {
  int ambient_dim = 0;
  PointCloud cloud;
  SampleSet kde_set, lpca_set, liepca_set;
  PointCloud fresh;
  bool valid = false;
};

namespace detail {

inline double quantile(std::vector<double> v, double p) {
  std::sort(v.begin(), v.end());
  const double pos = p * (v.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  if (lo + 1 >= v.size()) return v.back();
  const double frac = pos - lo;
  return v[lo] + frac * (v[lo + 1] - v[lo]);
}

inline double median(const std::vector<double>& v) { return quantile(v, 0.5); }
inline double iqr(const std::vector<double>& v) {
  return quantile(v, 0.75) - quantile(v, 0.25);
}

}  // namespace detail

/// Run every (scenario, method) cell over `trials` seeds. Within a trial all
/// methods share the same input cloud and are scored against the same fresh
/// draw. A cell that throws in any trial is reported as NaN and flagged.
inline GridOutcome run_grid(const std::vector<Scenario>& scenarios,
                            const std::vector<Method>& methods, int trials,
                            std::uint64_t seed_base,
                            std::map<std::string, TrialArtifacts>* artifacts = nullptr) {
  GridOutcome outcome;
  for (std::size_t si = 0; si < scenarios.size(); ++si) {
    const Scenario& sc = scenarios[si];
    std::map<Method, std::vector<double>> nemd_vals, haus_vals;
    std::map<Method, bool> failed;
    for (Method m : methods) failed[m] = false;

    for (int trial = 0; trial < trials; ++trial) {
      PointCloud cloud, fresh;
      bool prep_ok = true;
      try {
        cloud = sample(sc.manifold, sc.n, derive_seed(seed_base, si, trial, 0),
                       sc.noise_sigma);
        fresh = sample(sc.manifold, sc.N, derive_seed(seed_base, si, trial, 1),
                       sc.noise_sigma);
      } catch (const std::exception&) {
        prep_ok = false;
      }
      if (!prep_ok) {
        for (Method m : methods) failed[m] = true;
        continue;
      }
      const SampleSet fresh_set = as_sample_set(fresh);

      std::vector<TangentFrame> frames;
      LieAlgebraEstimate estimate;
      bool pipeline_ok = true;
      try {
        frames = local_pca(cloud, sc.k, sc.r);
        estimate = estimate_lie_algebra(build_sigma(cloud, frames), sc.ell);
      } catch (const std::exception&) {
        pipeline_ok = false;
      }

      for (std::size_t mi = 0; mi < methods.size(); ++mi) {
        const Method m = methods[mi];
        if (failed[m]) continue;
        EstimatorConfig cfg;
        cfg.method = m;
        cfg.n = sc.n;
        cfg.N = sc.N;
        cfg.k = sc.k;
        cfg.r = sc.r;
        cfg.ell = sc.ell;
        cfg.noise_sigma = sc.noise_sigma;
        cfg.seed = derive_seed(seed_base, si, trial, 2 + mi);
        try {
          SampleSet set;
          switch (m) {
            case Method::BL1: set = bl1(cloud, cfg); break;
            case Method::BL2: set = bl2(sc.manifold, cfg); break;
            case Method::KDE: set = kde(cloud, cfg); break;
            case Method::LPCA:
              if (!pipeline_ok) throw std::runtime_error("tangent frames failed");
              set = lpca_sampler(cloud, frames, cfg);
              break;
            case Method::LIEPCA:
              if (!pipeline_ok) throw std::runtime_error("algebra estimate failed");
              set = liepca_sampler(cloud, estimate, cfg);
              break;
          }
          nemd_vals[m].push_back(nemd(set, fresh_set));
          haus_vals[m].push_back(hausdorff(set, fresh_set));
          if (artifacts && trial == 0) {
            TrialArtifacts& art = (*artifacts)[sc.name];
            art.ambient_dim = sc.manifold.d;
            art.cloud = cloud;
            art.fresh = fresh;
            art.valid = true;
            if (m == Method::KDE) art.kde_set = set;
            if (m == Method::LPCA) art.lpca_set = set;
            if (m == Method::LIEPCA) art.liepca_set = set;
          }
        } catch (const std::exception&) {
          failed[m] = true;
        }
      }
    }

    for (Method m : methods) {
      CellResult cell;
      cell.manifold = sc.name;
      cell.method = method_name(m);
      cell.trials = trials;
      if (failed[m] || nemd_vals[m].empty()) {
        cell.failed = true;
        cell.nemd_median = cell.nemd_iqr = std::nan("");
        cell.hausdorff_median = cell.hausdorff_iqr = std::nan("");
        outcome.any_failed = true;
      } else {
        cell.nemd_median = detail::median(nemd_vals[m]);
        cell.nemd_iqr = detail::iqr(nemd_vals[m]);
        cell.hausdorff_median = detail::median(haus_vals[m]);
        cell.hausdorff_iqr = detail::iqr(haus_vals[m]);
      }
      outcome.rows.push_back(std::move(cell));
    }
  }
  return outcome;
}

inline void write_results_csv(std::ostream& os, const GridOutcome& outcome) {
  os << "manifold,method,nemd_median,nemd_iqr,hausdorff_median,hausdorff_iqr,trials\n";
  for (const CellResult& c : outcome.rows) {
    os << c.manifold << ',' << c.method << ',';
    detail::format_double(os, c.nemd_median);
    os << ',';
    detail::format_double(os, c.nemd_iqr);
    os << ',';
    detail::format_double(os, c.hausdorff_median);
    os << ',';
    detail::format_double(os, c.hausdorff_iqr);
    os << ',' << c.trials << '\n';
  }
}

/// Five-panel figure per scenario: given data, KDE, LPCA, Lie PCA, fresh
/// draws. 3-d scenarios get one panel row per coordinate-plane projection.
inline std::vector<std::vector<SvgPanel>> scatter_panels(const TrialArtifacts& art) {
  const auto project = [](const std::vector<Vec>& pts, int cx, int cy) {
    std::vector<std::pair<double, double>> out;
    out.reserve(pts.size());
    for (const Vec& p : pts) out.emplace_back(p[cx], p[cy]);
    return out;
  };
  const std::vector<std::pair<std::string, const std::vector<Vec>*>> sets = {
      {"given data", &art.cloud.points},
      {"KDE", &art.kde_set.points},
      {"LPCA", &art.lpca_set.points},
      {"Lie PCA", &art.liepca_set.points},
      {"fresh draws", &art.fresh.points}};
  std::vector<std::vector<SvgPanel>> rows;
  const int nproj = art.ambient_dim >= 3 ? 2 : 1;
  for (int pr = 0; pr < nproj; ++pr) {
    std::vector<SvgPanel> row;
    const int cy = pr == 0 ? 1 : 2;
    for (const auto& [title, pts] : sets) {
      SvgPanel panel;
      panel.title = nproj == 1 ? title
                               : title + std::string(pr == 0 ? " (xy)" : " (xz)");
      panel.points = project(*pts, 0, cy);
      row.push_back(std::move(panel));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline double panels_half_extent(const std::vector<std::vector<SvgPanel>>& rows) {
  double e = 1.0;
  for (const auto& row : rows)
    for (const SvgPanel& p : row)
      for (const auto& [x, y] : p.points)
        e = std::max({e, std::abs(x), std::abs(y)});
  return 1.05 * e;
}

}  // namespace liepca
