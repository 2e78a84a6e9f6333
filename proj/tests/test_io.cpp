#include <catch_amalgamated.hpp>

#include <sstream>

#include "liepca/manifold.hpp"
#include "liepca/pointcloud.hpp"
#include "liepca/rng.hpp"
#include "liepca/serialize.hpp"
#include "liepca/subspace.hpp"
#include "liepca/tangent.hpp"

using namespace liepca;

TEST_CASE("CSV round trip is lossless") {
  Rng rng(401);
  PointCloud c;
  c.ambient_dim = 3;
  for (int i = 0; i < 40; ++i) {
    Vec p = rng.gaussian_vector(3);
    p[0] *= 1e-7;
    p[2] *= 1e9;
    c.points.push_back(std::move(p));
  }
  std::stringstream ss;
  write_csv(ss, c);
  const PointCloud back = read_csv(ss);
  REQUIRE(back.ambient_dim == 3);
  REQUIRE(back.size() == c.size());
  for (int i = 0; i < c.size(); ++i)
    for (int j = 0; j < 3; ++j) CHECK(back.points[i][j] == c.points[i][j]);
}

TEST_CASE("CSV reader reports the offending line") {
  std::stringstream ss("1.0,2.0\n1.0,oops\n");
  try {
    read_csv(ss);
    FAIL("expected CsvError");
  } catch (const CsvError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("CSV reader rejects ragged rows") {
  std::stringstream ss("1.0,2.0\n3.0\n");
  try {
    read_csv(ss);
    FAIL("expected CsvError");
  } catch (const CsvError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("CSV reader rejects empty input") {
  std::stringstream ss("");
  CHECK_THROWS_AS(read_csv(ss), CsvError);
}

TEST_CASE("manifold JSON round trip preserves behavior") {
  Rng rng(402);
  std::vector<AnalyticManifold> zoo = {
      AnalyticManifold::subspace(3, 1),
      AnalyticManifold::affine_subspace(3, 2),
      AnalyticManifold::unit_sphere(3),
      AnalyticManifold::hyperboloid(3, 2),
      AnalyticManifold::cone_pq(2, 1),
      AnalyticManifold::ellipse(2.0, 1.0),
      AnalyticManifold::hyperbola(1.2),
      AnalyticManifold::line2d(),
      AnalyticManifold::torus(2.0, 0.5),
  };
  zoo.push_back(apply_gl(AnalyticManifold::unit_circle(),
                         Mat{{1.2, 0.4}, {-0.1, 0.9}}));
  for (const auto& m : zoo) {
    const json j = manifold_to_json(m);
    const AnalyticManifold back = manifold_from_json(j);
    CHECK(back.kind == m.kind);
    const PointCloud a = sample(m, 7, 99, 0.0);
    const PointCloud b = sample(back, 7, 99, 0.0);
    for (int i = 0; i < 7; ++i)
      for (int c = 0; c < m.d; ++c)
        CHECK(a.points[i][c] == Catch::Approx(b.points[i][c]).margin(1e-14));
    if (m.kind != ManifoldKind::Torus3D) CHECK(n_star(back) == n_star(m));
  }
}

TEST_CASE("manifold JSON rejects unknown kinds") {
  CHECK_THROWS_AS(manifold_from_json(json{{"kind", "Klein"}}),
                  std::invalid_argument);
}

TEST_CASE("frame JSON carries base point and basis") {
  const auto m = AnalyticManifold::unit_circle();
  const auto c = sample(m, 10, 5, 0.0);
  const auto frames = local_pca(c, 2, 1);
  const json j = frames_to_json(frames);
  REQUIRE(j.size() == 10);
  CHECK(j[0].at("base_point").size() == 2);
  CHECK(j[0].at("basis").size() == 1);
  CHECK(j[0].at("basis")[0].size() == 2);
}

TEST_CASE("estimate JSON has the documented shape") {
  const auto m = AnalyticManifold::unit_circle();
  const auto c = sample(m, 12, 5, 0.0);
  const auto frames = local_pca(c, 2, 1);
  const auto est = estimate_lie_algebra(build_sigma(c, frames), 1);
  const json j = estimate_to_json(est);
  CHECK(j.at("d") == 2);
  CHECK(j.at("ell") == 1);
  CHECK(j.at("eigenvalues").size() == 1);
  REQUIRE(j.at("basis").size() == 1);
  CHECK(j.at("basis")[0].size() == 4);  // row-major d^2 entries
  CHECK(j.contains("gap"));
  CHECK(j.contains("degenerate"));
  // row-major serialization: entry (0,1) is the second element
  const Mat& b = est.basis[0];
  CHECK(j.at("basis")[0][1].get<double>() == b(0, 1));
}

TEST_CASE("complexity report JSON carries a conclusion") {
  const auto rep = verify_threshold(AnalyticManifold::unit_circle(), 2, 5);
  const json j = report_to_json(rep);
  CHECK(j.at("conclusion") == "pass");
  CHECK(j.at("records").size() == 4);
  CHECK(j.at("n_star") == 3);
}
