#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "liepca/complexity.hpp"
#include "liepca/density.hpp"
#include "liepca/lie_operator.hpp"
#include "liepca/manifold.hpp"
#include "liepca/matrix.hpp"
#include "liepca/tangent.hpp"

namespace liepca {

using json = nlohmann::json;

inline json mat_to_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Mat mat_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("matrix JSON: expected non-empty array");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j.at(0).size());
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j.at(i).size()) != cols)
      throw std::invalid_argument("matrix JSON: ragged rows");
    for (int c = 0; c < cols; ++c) m(i, c) = j.at(i).at(c).get<double>();
  }
  return m;
}

inline json vectors_to_json(const std::vector<Vec>& vs) {
  json out = json::array();
  for (const Vec& v : vs) out.push_back(v);
  return out;
}

inline std::vector<Vec> vectors_from_json(const json& j) {
  std::vector<Vec> out;
  for (const auto& row : j) out.push_back(row.get<Vec>());
  return out;
}

inline json manifold_to_json(const AnalyticManifold& m) {
  json params = json::object();
  switch (m.kind) {
    case ManifoldKind::Subspace:
      params["ambient_dim"] = m.d;
      params["basis"] = vectors_to_json(m.basis);
      break;
    case ManifoldKind::AffineSubspace:
      params["ambient_dim"] = m.d;
      params["basis"] = vectors_to_json(m.basis);
      params["translation"] = m.translation;
      break;
    case ManifoldKind::Quadric:
    case ManifoldKind::Cone:
      params["Q"] = mat_to_json(m.q_form);
      break;
    case ManifoldKind::Ellipse2D:
      params["a"] = m.semi_a;
      params["b"] = m.semi_b;
      break;
    case ManifoldKind::Hyperbola2D:
      params["range"] = m.param_range;
      break;
    case ManifoldKind::Line2D:
      break;
    case ManifoldKind::Torus3D:
      params["R"] = m.major_radius;
      params["rho"] = m.minor_radius;
      break;
  }
  json out{{"kind", kind_name(m.kind)}, {"params", params}};
  if (!m.gl.empty()) out["gl_transform"] = mat_to_json(m.gl);
  return out;
}

inline AnalyticManifold manifold_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const json params = j.value("params", json::object());
  AnalyticManifold m;
  if (kind == "Subspace") {
    m = AnalyticManifold::subspace(params.at("ambient_dim").get<int>(),
                                   vectors_from_json(params.at("basis")));
  } else if (kind == "AffineSubspace") {
    m = AnalyticManifold::affine_subspace(
        params.at("ambient_dim").get<int>(),
        vectors_from_json(params.at("basis")),
        params.at("translation").get<Vec>());
  } else if (kind == "Quadric") {
    m = AnalyticManifold::quadric(mat_from_json(params.at("Q")));
  } else if (kind == "Cone") {
    m = AnalyticManifold::cone(mat_from_json(params.at("Q")));
  } else if (kind == "Ellipse2D") {
    m = AnalyticManifold::ellipse(params.value("a", 1.0), params.value("b", 1.0));
  } else if (kind == "Hyperbola2D") {
    m = AnalyticManifold::hyperbola(params.value("range", 1.5));
  } else if (kind == "Line2D") {
    m = AnalyticManifold::line2d();
  } else if (kind == "Torus3D") {
    m = AnalyticManifold::torus(params.value("R", 2.0), params.value("rho", 0.5));
  } else {
    throw std::invalid_argument("manifold JSON: unknown kind '" + kind + "'");
  }
  if (j.contains("gl_transform"))
    m = apply_gl(m, mat_from_json(j.at("gl_transform")));
  return m;
}

inline json frame_to_json(const TangentFrame& f) {
  return json{{"base_point", f.base_point},
              {"basis", vectors_to_json(f.basis.vectors)},
              {"degenerate", f.degenerate}};
}

inline json frames_to_json(const std::vector<TangentFrame>& frames) {
  json out = json::array();
  for (const TangentFrame& f : frames) out.push_back(frame_to_json(f));
  return out;
}

/// Basis matrices serialized row-major, one flat array per basis element.
inline json estimate_to_json(const LieAlgebraEstimate& est) {
  json basis = json::array();
  for (const Mat& m : est.basis) {
    json flat = json::array();
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) flat.push_back(m(i, j));
    basis.push_back(std::move(flat));
  }
  return json{{"d", est.d},
              {"ell", est.ell},
              {"eigenvalues", est.bottom_eigenvalues},
              {"basis", basis},
              {"gap", est.gap},
              {"degenerate", est.degenerate}};
}

inline json report_to_json(const ComplexityReport& rep) {
  json records = json::array();
  for (const TrialRecord& r : rep.records) {
    records.push_back(json{{"trial", r.trial},
                           {"seed", r.seed},
                           {"n", r.n},
                           {"kernel_dim", r.kernel_dim},
                           {"expected_kernel_dim", r.expected_kernel_dim},
                           {"expect_exact", r.expect_exact},
                           {"inconclusive", r.inconclusive},
                           {"pass", r.pass}});
  }
  return json{{"manifold", manifold_to_json(rep.manifold)},
              {"n_star", rep.n_star},
              {"sym_dim", rep.sym_dim},
              {"trials", rep.trials},
              {"records", records},
              {"conclusion", rep.passed ? "pass" : "fail"}};
}

inline json sample_set_meta_json(const SampleSet& set,
                                 const EstimatorConfig& cfg) {
  int fallback_count = 0;
  for (bool f : set.fallback) fallback_count += f ? 1 : 0;
  return json{{"method", method_name(cfg.method)},
              {"n", cfg.n},
              {"N", cfg.N},
              {"k", cfg.k},
              {"r", cfg.r},
              {"ell", cfg.ell},
              {"sigma_a", cfg.sigma_a},
              {"rejection_factor", cfg.rejection_factor},
              {"max_retries", cfg.max_retries},
              {"seed", cfg.seed},
              {"noise_sigma", cfg.noise_sigma},
              {"fallback_count", fallback_count},
              {"source", set.source},
              {"retries", set.retries}};
}

inline void write_json_file(const std::string& path, const json& j) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
  os << j.dump(2) << '\n';
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return json::parse(in);
}

}  // namespace liepca
