#include <catch_amalgamated.hpp>

#include <cmath>

#include "liepca/expm.hpp"
#include "liepca/manifold.hpp"
#include "liepca/rng.hpp"
#include "liepca/subspace.hpp"

using namespace liepca;

namespace {

std::vector<std::pair<std::string, AnalyticManifold>> zoo() {
  return {
      {"subspace r1 d2", AnalyticManifold::subspace(2, 1)},
      {"subspace r2 d4", AnalyticManifold::subspace(4, 2)},
      {"affine r1 d3", AnalyticManifold::affine_subspace(3, 1)},
      {"circle", AnalyticManifold::unit_circle()},
      {"sphere d3", AnalyticManifold::unit_sphere(3)},
      {"hyperboloid d3", AnalyticManifold::hyperboloid(3, 2)},
      {"cone d3", AnalyticManifold::cone_pq(2, 1)},
      {"ellipse", AnalyticManifold::ellipse(2.0, 1.0)},
      {"hyperbola", AnalyticManifold::hyperbola()},
      {"line2d", AnalyticManifold::line2d()},
      {"torus", AnalyticManifold::torus(2.0, 0.5)},
  };
}

Mat random_orthogonal(int d, Rng& rng) {
  std::vector<Vec> vs;
  for (int i = 0; i < d; ++i) vs.push_back(rng.gaussian_vector(d));
  const OrthonormalBasis b = orthonormalize(d, vs);
  REQUIRE(b.size() == d);
  Mat z(d, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) z(i, j) = b.vectors[j][i];
  return z;
}

Mat random_invertible(int d, Rng& rng, double cond_cap = 10.0) {
  const Mat q1 = random_orthogonal(d, rng);
  const Mat q2 = random_orthogonal(d, rng);
  Mat s(d, d);
  for (int i = 0; i < d; ++i)
    s(i, i) = rng.uniform(1.0, std::min(cond_cap, 4.0));
  return q1 * s * q2;
}

}  // namespace

TEST_CASE("unit circle samples lie on the circle") {
  const auto cloud = sample(AnalyticManifold::ellipse(1.0, 1.0), 4, 9, 0.0);
  REQUIRE(cloud.size() == 4);
  for (const Vec& p : cloud.points)
    CHECK(std::abs(norm(p) - 1.0) < 1e-12);
}

TEST_CASE("subspace samples stay in the span") {
  const auto cloud = sample(AnalyticManifold::subspace(2, 1), 3, 1, 0.0);
  for (const Vec& p : cloud.points) CHECK(p[1] == 0.0);
}

TEST_CASE("torus samples satisfy the implicit equation") {
  const auto m = AnalyticManifold::torus(2.0, 0.5);
  const auto cloud = sample(m, 100, 5, 0.0);
  for (const Vec& p : cloud.points) {
    const double ring = std::sqrt(p[0] * p[0] + p[1] * p[1]) - 2.0;
    CHECK(std::abs(ring * ring + p[2] * p[2] - 0.25) < 1e-10);
  }
}

TEST_CASE("sampling is deterministic in the seed") {
  const auto m = AnalyticManifold::hyperbola();
  const auto a = sample(m, 20, 77, 0.1);
  const auto b = sample(m, 20, 77, 0.1);
  REQUIRE(a.size() == b.size());
  for (int i = 0; i < a.size(); ++i)
    for (int c = 0; c < 2; ++c) CHECK(a.points[i][c] == b.points[i][c]);
}

TEST_CASE("all zoo samplers land on their manifolds") {
  for (const auto& [name, m] : zoo()) {
    INFO(name);
    const auto cloud = sample(m, 25, 3, 0.0);
    for (const Vec& p : cloud.points)
      CHECK(implicit_residual(m, p) < 1e-9);
  }
}

TEST_CASE("sample validates its arguments") {
  CHECK_THROWS_AS(sample(AnalyticManifold::line2d(), 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(sample(AnalyticManifold::line2d(), 5, 1, -0.1),
                  std::invalid_argument);
}

TEST_CASE("empty manifolds are rejected") {
  Mat neg = Mat::identity(2);
  neg *= -1.0;
  CHECK_THROWS_AS(AnalyticManifold::quadric(neg), std::invalid_argument);
  CHECK_THROWS_AS(AnalyticManifold::cone(Mat::identity(3)), std::invalid_argument);
}

TEST_CASE("exact_tangent on the circle at e1") {
  const auto m = AnalyticManifold::unit_circle();
  const OrthonormalBasis t = exact_tangent(m, {1.0, 0.0});
  REQUIRE(t.size() == 1);
  CHECK(std::abs(t.vectors[0][1]) == Catch::Approx(1.0));
  CHECK(std::abs(t.vectors[0][0]) < 1e-12);
}

TEST_CASE("exact_tangent on a subspace is the span") {
  const auto m = AnalyticManifold::subspace(2, 1);
  const OrthonormalBasis t = exact_tangent(m, {0.37, 0.0});
  REQUIRE(t.size() == 1);
  CHECK(std::abs(t.vectors[0][0]) == Catch::Approx(1.0));
}

TEST_CASE("exact_tangent on the cone is orthogonal to Qx") {
  const auto m = AnalyticManifold::cone_pq(2, 1);
  const Vec x{1.0, 0.0, 1.0};
  const OrthonormalBasis t = exact_tangent(m, x);
  REQUIRE(t.size() == 2);
  const Vec qx{1.0, 0.0, -1.0};
  for (const Vec& v : t.vectors)
    CHECK(std::abs(dot(v, qx)) < 1e-10);
}

TEST_CASE("exact_tangent rejects off-manifold points") {
  const auto m = AnalyticManifold::unit_circle();
  CHECK_THROWS_AS(exact_tangent(m, {2.0, 0.0}), std::invalid_argument);
}

TEST_CASE("exact_tangent rejects the cone apex") {
  const auto m = AnalyticManifold::cone_pq(1, 1);
  CHECK_THROWS_AS(exact_tangent(m, {0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("circle symmetry algebra is spanned by the rotation generator") {
  const OrthonormalBasis b = exact_sym_basis(AnalyticManifold::unit_circle());
  REQUIRE(b.size() == 1);
  const double s = 1.0 / std::sqrt(2.0);
  // J / sqrt(2) column-major flattened, up to sign
  const Vec expect{0.0, s, -s, 0.0};
  const double align = std::abs(dot(b.vectors[0], expect));
  CHECK(align == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("sphere symmetry algebra is the antisymmetric matrices") {
  const OrthonormalBasis b = exact_sym_basis(AnalyticManifold::unit_sphere(3));
  REQUIRE(b.size() == 3);
  for (const Vec& v : b.vectors) {
    const Mat a = unvec_column_major(v, 3, 3);
    CHECK((a + a.transpose()).max_abs() < 1e-12);
  }
}

TEST_CASE("cone d2 symmetry algebra has dimension 2") {
  const OrthonormalBasis b = exact_sym_basis(AnalyticManifold::cone_pq(1, 1));
  CHECK(b.size() == 2);
  CHECK(sym_dim(AnalyticManifold::cone_pq(1, 1)) == 2);
}

TEST_CASE("symmetry dimensions match the closed-form counts") {
  for (const auto& [name, m] : zoo()) {
    if (m.kind == ManifoldKind::Torus3D) continue;
    INFO(name);
    CHECK(exact_sym_basis(m).size() == sym_dim(m));
  }
}

TEST_CASE("n_star values for the zoo") {
  CHECK(n_star(AnalyticManifold::subspace(2, 1)) == 1);
  CHECK(n_star(AnalyticManifold::affine_subspace(2, 1)) == 2);
  CHECK(n_star(AnalyticManifold::unit_circle()) == 3);
  CHECK(n_star(AnalyticManifold::unit_sphere(3)) == 6);
  CHECK(n_star(AnalyticManifold::cone_pq(2, 1)) == 5);
  CHECK(n_star(AnalyticManifold::cone_pq(1, 1)) == 2);
  CHECK_THROWS_AS(n_star(AnalyticManifold::torus(2.0, 0.5)),
                  std::invalid_argument);
}

TEST_CASE("apply_gl with the identity changes nothing") {
  const auto m = AnalyticManifold::unit_circle();
  const auto mz = apply_gl(m, Mat::identity(2));
  const auto a = sample(m, 10, 4, 0.0);
  const auto b = sample(mz, 10, 4, 0.0);
  for (int i = 0; i < 10; ++i)
    for (int c = 0; c < 2; ++c)
      CHECK(a.points[i][c] == Catch::Approx(b.points[i][c]).margin(1e-15));
}

TEST_CASE("apply_gl maps the circle to an ellipse") {
  const auto stretched =
      apply_gl(AnalyticManifold::unit_circle(), Mat{{2.0, 0.0}, {0.0, 1.0}});
  const auto cloud = sample(stretched, 30, 6, 0.0);
  for (const Vec& p : cloud.points)
    CHECK(p[0] * p[0] / 4.0 + p[1] * p[1] == Catch::Approx(1.0).margin(1e-10));
  // same symmetry algebra as the ellipse kind
  const OrthonormalBasis a = exact_sym_basis(stretched);
  const OrthonormalBasis b = exact_sym_basis(AnalyticManifold::ellipse(2.0, 1.0));
  REQUIRE(a.size() == 1);
  CHECK(subspace_distance(a, b) < 1e-10);
}

TEST_CASE("apply_gl rejects singular transforms") {
  CHECK_THROWS_AS(apply_gl(AnalyticManifold::unit_circle(), Mat(2, 2)),
                  std::invalid_argument);
}

TEST_CASE("n_star is GL-invariant") {
  Rng rng(71);
  for (const auto& [name, m] : zoo()) {
    if (m.kind == ManifoldKind::Torus3D) continue;
    INFO(name);
    const int expect = n_star(m);
    for (int rep = 0; rep < 20; ++rep) {
      const Mat z = random_invertible(m.d, rng);
      CHECK(n_star(apply_gl(m, z)) == expect);
    }
  }
}

TEST_CASE("tangency: symmetry generators move points tangentially") {
  Rng rng(72);
  for (const auto& [name, m] : zoo()) {
    INFO(name);
    const OrthonormalBasis syms = exact_sym_basis(m);
    const auto cloud = sample(m, 50, 8, 0.0);
    for (const Vec& x : cloud.points) {
      const OrthonormalBasis t = exact_tangent(m, x);
      const Mat p_t = projector(t);
      for (const Vec& flat : syms.vectors) {
        const Mat a = unvec_column_major(flat, m.d, m.d);
        const Vec ax = a * x;
        Vec normal_part(m.d);
        const Vec tang = p_t * ax;
        for (int c = 0; c < m.d; ++c) normal_part[c] = ax[c] - tang[c];
        CHECK(norm(normal_part) < 1e-8);
      }
    }
  }
}

TEST_CASE("flows generated by the symmetry algebra stay on the manifold") {
  Rng rng(73);
  const std::vector<AnalyticManifold> flow_zoo = {
      AnalyticManifold::subspace(3, 1),
      AnalyticManifold::unit_circle(),
      AnalyticManifold::unit_sphere(3),
      AnalyticManifold::hyperboloid(3, 2),
      AnalyticManifold::cone_pq(2, 1),
      apply_gl(AnalyticManifold::unit_circle(), Mat{{1.5, 0.3}, {0.0, 0.8}}),
  };
  for (const auto& m : flow_zoo) {
    const OrthonormalBasis syms = exact_sym_basis(m);
    const auto cloud = sample(m, 10, 15, 0.0);
    for (int rep = 0; rep < 5; ++rep) {
      Mat a(m.d, m.d);
      for (const Vec& flat : syms.vectors)
        a += rng.normal() * unvec_column_major(flat, m.d, m.d);
      const double nrm = a.frobenius_norm();
      if (nrm > 0.0) a *= rng.uniform(-0.1, 0.1) / nrm;
      const Mat flow = mat_exp(a);
      for (const Vec& x : cloud.points)
        CHECK(implicit_residual(m, flow * x) < 1e-6);
    }
  }
}

TEST_CASE("strictly affine validation") {
  // translation inside the span is not strictly affine
  CHECK_THROWS_AS(
      AnalyticManifold::affine_subspace(2, {{1.0, 0.0}}, {0.5, 0.0}),
      std::invalid_argument);
  // but any off-span translation is fine
  const auto m = AnalyticManifold::affine_subspace(2, {{1.0, 0.0}}, {0.3, 0.7});
  const auto cloud = sample(m, 5, 2, 0.0);
  for (const Vec& p : cloud.points) CHECK(p[1] == Catch::Approx(0.7));
}
