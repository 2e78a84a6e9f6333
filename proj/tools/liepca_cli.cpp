// Command-line front end: estimate a symmetry Lie algebra from a point cloud,
// simulate density-estimation draws, score sample sets against each other,
// verify sample-complexity thresholds, and run the full experiment grid.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "liepca/liepca.hpp"

namespace {

// Exit-code contract: 0 ok, 2 input error, 3 invalid geometry,
// 4 unsupported, 5 partial failure.
constexpr int kOk = 0;
constexpr int kInputError = 2;
constexpr int kInvalidGeometry = 3;
constexpr int kUnsupported = 4;
constexpr int kPartialFailure = 5;

bool has_origin_point(const liepca::PointCloud& cloud, int* index) {
  for (int i = 0; i < cloud.size(); ++i) {
    bool zero = true;
    for (double v : cloud.points[i])
      if (v != 0.0) zero = false;
    if (zero) {
      *index = i;
      return true;
    }
  }
  return false;
}

int cmd_estimate(const std::string& input, int k, int r, int ell,
                 const std::string& out) {
  liepca::PointCloud cloud;
  try {
    cloud = liepca::read_csv_file(input);
  } catch (const std::exception& e) {
    std::cerr << "estimate: " << input << ": " << e.what() << "\n";
    return kInputError;
  }
  int origin = -1;
  if (has_origin_point(cloud, &origin)) {
    std::cerr << "estimate: point " << origin
              << " is the origin; the operator is undefined there\n";
    return kInvalidGeometry;
  }
  try {
    const auto frames = liepca::local_pca(cloud, k, r);
    const auto op = liepca::build_sigma(cloud, frames);
    const auto est = liepca::estimate_lie_algebra(op, ell);
    liepca::json j = liepca::estimate_to_json(est);
    j["spectrum"] = op.spectrum;
    liepca::write_json_file(out, j);
  } catch (const std::exception& e) {
    std::cerr << "estimate: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}

int cmd_density(const std::string& input, const std::string& method_str,
                liepca::EstimatorConfig cfg, const std::string& manifold_path,
                const std::string& out) {
  liepca::Method method;
  if (!liepca::parse_method(method_str, method)) {
    std::cerr << "density: unknown method '" << method_str << "'\n";
    return kInputError;
  }
  cfg.method = method;
  if (cfg.N < 1) {
    std::cerr << "density: N must be >= 1\n";
    return kInputError;
  }

  liepca::PointCloud cloud;
  try {
    cloud = liepca::read_csv_file(input);
  } catch (const std::exception& e) {
    std::cerr << "density: " << input << ": " << e.what() << "\n";
    return kInputError;
  }
  cfg.n = cloud.size();

  liepca::SampleSet set;
  try {
    switch (method) {
      case liepca::Method::BL1:
        set = liepca::bl1(cloud, cfg);
        break;
      case liepca::Method::BL2: {
        if (manifold_path.empty()) {
          std::cerr << "density: BL2 needs --manifold\n";
          return kInputError;
        }
        const auto m = liepca::manifold_from_json(
            liepca::read_json_file(manifold_path));
        set = liepca::bl2(m, cfg);
        break;
      }
      case liepca::Method::KDE:
        set = liepca::kde(cloud, cfg);
        break;
      case liepca::Method::LPCA: {
        const auto frames = liepca::local_pca(cloud, cfg.k, cfg.r);
        set = liepca::lpca_sampler(cloud, frames, cfg);
        break;
      }
      case liepca::Method::LIEPCA: {
        int origin = -1;
        if (has_origin_point(cloud, &origin)) {
          std::cerr << "density: point " << origin
                    << " is the origin; the operator is undefined there\n";
          return kInvalidGeometry;
        }
        const auto frames = liepca::local_pca(cloud, cfg.k, cfg.r);
        const auto est = liepca::estimate_lie_algebra(
            liepca::build_sigma(cloud, frames), cfg.ell);
        set = liepca::liepca_sampler(cloud, est, cfg);
        break;
      }
    }
    liepca::PointCloud out_cloud;
    out_cloud.ambient_dim = set.ambient_dim;
    out_cloud.points = set.points;
    liepca::write_csv_file(out, out_cloud);
    liepca::write_json_file(out + ".json",
                            liepca::sample_set_meta_json(set, cfg));
  } catch (const std::exception& e) {
    std::cerr << "density: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}

int cmd_evaluate(const std::string& y_path, const std::string& z_path,
                 const std::string& out) {
  liepca::PointCloud y, z;
  try {
    y = liepca::read_csv_file(y_path);
    z = liepca::read_csv_file(z_path);
  } catch (const std::exception& e) {
    std::cerr << "evaluate: " << e.what() << "\n";
    return kInputError;
  }
  if (y.size() != z.size() || y.ambient_dim != z.ambient_dim) {
    std::cerr << "evaluate: sets must have equal size and dimension\n";
    return kInputError;
  }
  const auto ys = liepca::as_sample_set(y);
  const auto zs = liepca::as_sample_set(z);
  const liepca::json j{{"nemd", liepca::nemd(ys, zs)},
                       {"hausdorff", liepca::hausdorff(ys, zs)}};
  if (out.empty())
    std::cout << j.dump(2) << "\n";
  else
    liepca::write_json_file(out, j);
  return kOk;
}

int cmd_complexity(const std::string& manifold_path, int trials,
                   std::uint64_t seed, const std::string& out) {
  liepca::AnalyticManifold m;
  try {
    m = liepca::manifold_from_json(liepca::read_json_file(manifold_path));
  } catch (const std::exception& e) {
    std::cerr << "complexity: " << e.what() << "\n";
    return kInputError;
  }
  if (m.kind == liepca::ManifoldKind::Torus3D) {
    std::cerr << "complexity: threshold unknown for this manifold\n";
    return kUnsupported;
  }
  liepca::ComplexityReport report;
  try {
    if (m.kind == liepca::ManifoldKind::Cone && m.d == 2)
      report = liepca::verify_cone_d2_failure(trials, seed);
    else
      report = liepca::verify_threshold(m, trials, seed);
  } catch (const std::exception& e) {
    std::cerr << "complexity: " << e.what() << "\n";
    return kInvalidGeometry;
  }
  if (!out.empty()) liepca::write_json_file(out, liepca::report_to_json(report));

  std::cout << "manifold " << liepca::kind_name(m.kind) << " d=" << m.d
            << "  n_star=" << report.n_star << "  sym_dim=" << report.sym_dim
            << "\n";
  for (const auto& rec : report.records) {
    std::cout << (rec.pass ? "pass" : "FAIL") << "  trial=" << rec.trial
              << " n=" << rec.n << " kernel_dim=" << rec.kernel_dim
              << " expected=" << rec.expected_kernel_dim
              << (rec.expect_exact ? "" : " (strictly-above check)")
              << (rec.inconclusive ? " [inconclusive]" : "") << "\n";
  }
  std::cout << "conclusion: " << (report.passed ? "pass" : "fail") << "\n";
  return report.passed ? kOk : kPartialFailure;
}

liepca::Scenario scenario_from_json(const liepca::json& j) {
  liepca::Scenario sc;
  sc.name = j.at("name").get<std::string>();
  sc.manifold = liepca::manifold_from_json(j.at("manifold"));
  sc.n = j.value("n", 30);
  sc.N = j.value("N", 300);
  sc.k = j.value("k", 2);
  sc.r = j.value("r", 1);
  sc.ell = j.value("ell", 1);
  sc.noise_sigma = j.value("noise_sigma", 0.0);
  return sc;
}

int cmd_table1(const std::string& spec_path, int trials, std::uint64_t seed,
               const std::string& out_csv, const std::string& svg_dir) {
  std::vector<liepca::Scenario> scenarios;
  std::vector<liepca::Method> methods = liepca::default_methods();
  try {
    if (spec_path.empty()) {
      scenarios = liepca::default_scenarios();
    } else {
      const liepca::json spec = liepca::read_json_file(spec_path);
      for (const auto& js : spec.at("scenarios"))
        scenarios.push_back(scenario_from_json(js));
      if (spec.contains("methods")) {
        methods.clear();
        for (const auto& ms : spec.at("methods")) {
          liepca::Method m;
          if (!liepca::parse_method(ms.get<std::string>(), m)) {
            std::cerr << "table1: unknown method '" << ms << "'\n";
            return kInputError;
          }
          methods.push_back(m);
        }
      }
      if (spec.contains("trials")) trials = spec.at("trials").get<int>();
      if (spec.contains("seed_base")) seed = spec.at("seed_base").get<std::uint64_t>();
    }
  } catch (const std::exception& e) {
    std::cerr << "table1: " << e.what() << "\n";
    return kInputError;
  }

  std::map<std::string, liepca::TrialArtifacts> artifacts;
  const liepca::GridOutcome outcome = liepca::run_grid(
      scenarios, methods, trials, seed, svg_dir.empty() ? nullptr : &artifacts);

  try {
    std::ofstream os(out_csv);
    if (!os) throw std::runtime_error("cannot open '" + out_csv + "'");
    liepca::write_results_csv(os, outcome);
  } catch (const std::exception& e) {
    std::cerr << "table1: " << e.what() << "\n";
    return kInputError;
  }

  if (!svg_dir.empty()) {
    std::filesystem::create_directories(svg_dir);
    for (const auto& [name, art] : artifacts) {
      if (!art.valid) continue;
      const auto rows = liepca::scatter_panels(art);
      liepca::write_scatter_svg_file(svg_dir + "/" + name + ".svg", rows,
                                     liepca::panels_half_extent(rows));
    }
  }

  liepca::write_results_csv(std::cout, outcome);
  return outcome.any_failed ? kPartialFailure : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie algebra symmetry estimation and density simulation"};
  app.require_subcommand(1);

  std::string input, out, svg_dir, method, manifold_path, spec_path, y_path, z_path;
  int k = 2, r = 1, ell = 1, trials = 10;
  std::uint64_t seed = 0;
  liepca::EstimatorConfig cfg;

  auto* estimate = app.add_subcommand("estimate",
                                      "Estimate the symmetry Lie algebra from a CSV point cloud");
  estimate->add_option("--input", input, "point cloud CSV")->required();
  estimate->add_option("--k", k, "neighbors for local PCA")->required();
  estimate->add_option("--r", r, "intrinsic dimension")->required();
  estimate->add_option("--ell", ell, "Lie algebra dimension")->required();
  estimate->add_option("--out", out, "output JSON path")->required();

  auto* density = app.add_subcommand("density",
                                     "Simulate N draws from an estimated density");
  density->add_option("--input", input, "point cloud CSV")->required();
  density->add_option("--method", method, "BL1|BL2|KDE|LPCA|LIEPCA")->required();
  density->add_option("--N", cfg.N, "number of draws")->required();
  density->add_option("--k", cfg.k, "neighbors (LPCA/LIEPCA/KDE pipeline)");
  density->add_option("--r", cfg.r, "intrinsic dimension");
  density->add_option("--ell", cfg.ell, "Lie algebra dimension");
  density->add_option("--sigma-a", cfg.sigma_a, "algebra scale (LIEPCA)");
  density->add_option("--rejection-factor", cfg.rejection_factor,
                      "rejection radius factor");
  density->add_option("--max-retries", cfg.max_retries, "rejection retry cap");
  density->add_option("--seed", cfg.seed, "RNG seed");
  density->add_option("--noise-sigma", cfg.noise_sigma, "BL2 noise std");
  density->add_option("--manifold", manifold_path, "manifold JSON (BL2 only)");
  density->add_option("--out", out, "output CSV path")->required();

  auto* evaluate = app.add_subcommand("evaluate",
                                      "Score two equal-size sample sets (nEMD + Hausdorff)");
  evaluate->add_option("y_csv", y_path, "first sample CSV")->required();
  evaluate->add_option("z_csv", z_path, "second sample CSV")->required();
  evaluate->add_option("--out", out, "output JSON path (default stdout)");

  auto* complexity = app.add_subcommand("complexity",
                                        "Verify the sample-count threshold for a manifold");
  complexity->add_option("--manifold", manifold_path, "manifold JSON")->required();
  complexity->add_option("--trials", trials, "number of trials");
  complexity->add_option("--seed", seed, "base seed");
  complexity->add_option("--out", out, "report JSON path");

  auto* table1 = app.add_subcommand("table1",
                                    "Run the full experiment grid and write a results table");
  table1->add_option("--spec", spec_path, "experiment spec JSON (default grid if omitted)");
  table1->add_option("--trials", trials, "trials per cell");
  table1->add_option("--seed", seed, "base seed");
  table1->add_option("--out", out, "results CSV path")->required();
  table1->add_option("--svg-dir", svg_dir, "directory for scatter SVGs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  if (estimate->parsed()) return cmd_estimate(input, k, r, ell, out);
  if (density->parsed()) return cmd_density(input, method, cfg, manifold_path, out);
  if (evaluate->parsed()) return cmd_evaluate(y_path, z_path, out);
  if (complexity->parsed()) return cmd_complexity(manifold_path, trials, seed, out);
  if (table1->parsed()) return cmd_table1(spec_path, trials, seed, out, svg_dir);
  return kInputError;
}
