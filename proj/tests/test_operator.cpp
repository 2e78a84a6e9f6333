#include <catch_amalgamated.hpp>

#include <cmath>

#include "liepca/eigen.hpp"
#include "liepca/lie_operator.hpp"
#include "liepca/manifold.hpp"
#include "liepca/rng.hpp"
#include "liepca/subspace.hpp"
#include "test_support.hpp"

using namespace liepca;

namespace {

std::vector<TangentFrame> exact_frames(const AnalyticManifold& m,
                                       const PointCloud& cloud) {
  std::vector<TangentFrame> frames;
  for (const Vec& x : cloud.points)
    frames.push_back({x, exact_tangent(m, x), false});
  return frames;
}

Mat apply_operator(const Mat& op, const Mat& a) {
  return unvec_column_major(op * vec_column_major(a), a.rows(), a.cols());
}

}  // namespace

TEST_CASE("annihilator_term for an axis-aligned configuration") {
  const Vec x{1.0, 0.0};
  const OrthonormalBasis t{2, {{0.0, 1.0}}};
  const Mat k = annihilator_term(x, t);

  const Mat on_identity = apply_operator(k, Mat::identity(2));
  CHECK(on_identity(0, 0) == Catch::Approx(1.0));
  CHECK(std::abs(on_identity(0, 1)) < 1e-15);
  CHECK(std::abs(on_identity(1, 0)) < 1e-15);
  CHECK(std::abs(on_identity(1, 1)) < 1e-15);

  // J e1 = e2 lies in T, so J is annihilated
  const Mat j{{0.0, -1.0}, {1.0, 0.0}};
  CHECK(apply_operator(k, j).max_abs() < 1e-15);
}

TEST_CASE("annihilator_term is a projector of rank d - dim T") {
  Rng rng(201);
  for (int rep = 0; rep < 5; ++rep) {
    const Vec x = rng.gaussian_vector(3);
    std::vector<Vec> tv = {rng.gaussian_vector(3)};
    const OrthonormalBasis t = orthonormalize(3, tv);
    const Mat k = annihilator_term(x, t);
    CHECK((k * k - k).max_abs() < 1e-12);
    CHECK((k - k.transpose()).max_abs() < 1e-12);
    CHECK(k.trace() == Catch::Approx(2.0).margin(1e-10));  // (d - dimT) * 1
  }
}

TEST_CASE("annihilator_term matches a brute-force projection oracle") {
  Rng rng(202);
  for (int rep = 0; rep < 10; ++rep) {
    const Vec x = rng.gaussian_vector(3);
    const OrthonormalBasis t = orthonormalize(3, {rng.gaussian_vector(3)});
    const Mat a = [&] {
      Mat m(3, 3);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = rng.normal();
      return m;
    }();

    // explicit orthonormal basis of {z x^T : z in T^perp}
    const OrthonormalBasis zs = complement(t);
    Vec xhat = x;
    const double nx = norm(x);
    for (double& v : xhat) v /= nx;
    std::vector<Vec> span;
    for (const Vec& z : zs.vectors)
      span.push_back(vec_column_major(outer(z, xhat)));
    const OrthonormalBasis sb = orthonormalize(9, span);
    REQUIRE(sb.size() == 2);

    const Vec flat_a = vec_column_major(a);
    Vec proj(9, 0.0);
    for (const Vec& b : sb.vectors) {
      const double c = dot(b, flat_a);
      for (int i = 0; i < 9; ++i) proj[i] += c * b[i];
    }
    const Mat oracle = unvec_column_major(proj, 3, 3);
    const Mat got = apply_operator(annihilator_term(x, t), a);
    CHECK((got - oracle).max_abs() < 1e-10);
  }
}

TEST_CASE("annihilator_term rejects the origin") {
  const OrthonormalBasis t{2, {{0.0, 1.0}}};
  CHECK_THROWS_AS(annihilator_term(Vec{0.0, 0.0}, t), std::invalid_argument);
}

TEST_CASE("build_sigma from a single point") {
  PointCloud c;
  c.ambient_dim = 2;
  c.points = {{1.0, 0.0}};
  const std::vector<TangentFrame> frames = {
      {c.points[0], OrthonormalBasis{2, {{0.0, 1.0}}}, false}};
  const LiePcaOperator op = build_sigma(c, frames);
  CHECK(numerical_rank(op.matrix) == 1);
  CHECK(op.spectrum.back() == Catch::Approx(1.0));
  CHECK(op.spectrum.front() == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("build_sigma kernel dimension on the circle") {
  const auto m = AnalyticManifold::unit_circle();
  {
    const auto c = sample(m, 3, 5, 0.0);
    const LiePcaOperator op = build_sigma(c, exact_frames(m, c));
    CHECK(4 - numerical_rank(op.matrix) == 1);
  }
  {
    const auto c = sample(m, 2, 5, 0.0);
    const LiePcaOperator op = build_sigma(c, exact_frames(m, c));
    CHECK(4 - numerical_rank(op.matrix) >= 2);
  }
}

TEST_CASE("build_sigma names the offending origin point") {
  PointCloud c;
  c.ambient_dim = 2;
  c.points = {{1.0, 0.0}, {0.0, 0.0}};
  const std::vector<TangentFrame> frames = {
      {c.points[0], OrthonormalBasis{2, {{0.0, 1.0}}}, false},
      {c.points[1], OrthonormalBasis{2, {{0.0, 1.0}}}, false}};
  try {
    build_sigma(c, frames);
    FAIL("expected an exception");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("1") != std::string::npos);
  }
}

TEST_CASE("estimate_lie_algebra recovers the circle generator exactly") {
  const auto m = AnalyticManifold::unit_circle();
  const auto c = sample(m, 3, 43, 0.0);
  const LiePcaOperator op = build_sigma(c, exact_frames(m, c));
  const LieAlgebraEstimate est = estimate_lie_algebra(op, 1);
  CHECK(subspace_distance(algebra_span(est), exact_sym_basis(m)) <= 1e-8);
  CHECK_FALSE(est.degenerate);
  CHECK(est.gap > 0.01);
}

TEST_CASE("estimate_lie_algebra recovers the sphere algebra") {
  const auto m = AnalyticManifold::unit_sphere(3);
  const auto c = sample(m, 6, 7, 0.0);
  const LiePcaOperator op = build_sigma(c, exact_frames(m, c));
  const LieAlgebraEstimate est = estimate_lie_algebra(op, 3);
  CHECK(subspace_distance(algebra_span(est), exact_sym_basis(m)) <= 1e-7);
}

TEST_CASE("estimate_lie_algebra flags a fully degenerate spectrum") {
  LiePcaOperator op;
  op.d = 2;
  op.matrix = Mat::identity(4);
  EigenDecomposition eig = sym_eig(op.matrix);
  op.spectrum = eig.eigenvalues;
  op.eigvecs = eig.eigenvectors;
  const LieAlgebraEstimate est = estimate_lie_algebra(op, 1);
  CHECK(est.gap == Catch::Approx(0.0).margin(1e-15));
  CHECK(est.degenerate);
}

TEST_CASE("estimate_lie_algebra rejects out-of-range ell") {
  const auto m = AnalyticManifold::unit_circle();
  const auto c = sample(m, 3, 42, 0.0);
  const LiePcaOperator op = build_sigma(c, exact_frames(m, c));
  CHECK_THROWS_AS(estimate_lie_algebra(op, 0), std::invalid_argument);
  CHECK_THROWS_AS(estimate_lie_algebra(op, 5), std::invalid_argument);
}

TEST_CASE("exact symmetry generators lie in the kernel of Sigma") {
  const std::vector<AnalyticManifold> zoo = {
      AnalyticManifold::subspace(3, 1),
      AnalyticManifold::affine_subspace(3, 1),
      AnalyticManifold::unit_circle(),
      AnalyticManifold::unit_sphere(3),
      AnalyticManifold::hyperboloid(3, 2),
      AnalyticManifold::cone_pq(2, 1),
      AnalyticManifold::ellipse(2.0, 1.0),
      AnalyticManifold::hyperbola(),
      AnalyticManifold::line2d(),
  };
  for (const auto& m : zoo) {
    const auto c = sample(m, 12, 9, 0.0);
    const LiePcaOperator op = build_sigma(c, exact_frames(m, c));
    const double lam_max = op.spectrum.back();
    const OrthonormalBasis syms = exact_sym_basis(m);
    for (const Vec& flat : syms.vectors) {
      const Vec image = op.matrix * flat;
      CHECK(norm(image) <= 1e-8 * std::max(1.0, lam_max));
    }
  }
}

TEST_CASE("rank of Sigma is monotone in the sample and bounded by n(d-r)") {
  const auto m = AnalyticManifold::unit_sphere(3);
  const auto c = sample(m, 8, 13, 0.0);
  int prev_rank = 0;
  for (int n = 1; n <= 8; ++n) {
    PointCloud head;
    head.ambient_dim = 3;
    head.points.assign(c.points.begin(), c.points.begin() + n);
    const LiePcaOperator op = build_sigma(head, exact_frames(m, head));
    const int rank = numerical_rank(op.matrix);
    CHECK(rank >= prev_rank);
    CHECK(rank <= n * (3 - 2));
    prev_rank = rank;
  }
}

TEST_CASE("Sigma spectrum is orthogonally equivariant") {
  Rng rng(203);
  const auto m = AnalyticManifold::unit_sphere(3);
  const auto c = sample(m, 8, 21, 0.0);
  const auto frames = exact_frames(m, c);
  const LiePcaOperator op = build_sigma(c, frames);

  const Mat z = test_support::random_orthogonal(3, rng);
  PointCloud zc;
  zc.ambient_dim = 3;
  std::vector<TangentFrame> zframes;
  for (int i = 0; i < c.size(); ++i) {
    zc.points.push_back(z * c.points[i]);
    std::vector<Vec> tv;
    for (const Vec& v : frames[i].basis.vectors) tv.push_back(z * v);
    zframes.push_back({zc.points[i], orthonormalize(3, tv), false});
  }
  const LiePcaOperator zop = build_sigma(zc, zframes);

  for (int k = 0; k < 9; ++k)
    CHECK(op.spectrum[k] == Catch::Approx(zop.spectrum[k]).margin(1e-8));

  // bottom eigenspace transforms by conjugation
  const LieAlgebraEstimate est = estimate_lie_algebra(op, 3);
  const LieAlgebraEstimate zest = estimate_lie_algebra(zop, 3);
  std::vector<Vec> conj;
  for (const Mat& a : est.basis)
    conj.push_back(vec_column_major(z * a * z.transpose()));
  const OrthonormalBasis conj_basis = orthonormalize(9, conj);
  CHECK(subspace_distance(algebra_span(zest), conj_basis) < 1e-7);
}
