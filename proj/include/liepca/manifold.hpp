#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "liepca/basis.hpp"
#include "liepca/eigen.hpp"
#include "liepca/matrix.hpp"
#include "liepca/pointcloud.hpp"
#include "liepca/rng.hpp"

namespace liepca {

enum class ManifoldKind {
  Subspace,
  AffineSubspace,
  Quadric,   // {x : x^T Q x = 1}, Q symmetric full rank
  Cone,      // {x != 0 : x^T Q x = 0}, Q symmetric full rank, indefinite
  Ellipse2D,
  Hyperbola2D,
  Line2D,
  Torus3D,
};

inline const char* kind_name(ManifoldKind k) {
  switch (k) {
    case ManifoldKind::Subspace: return "Subspace";
    case ManifoldKind::AffineSubspace: return "AffineSubspace";
    case ManifoldKind::Quadric: return "Quadric";
    case ManifoldKind::Cone: return "Cone";
    case ManifoldKind::Ellipse2D: return "Ellipse2D";
    case ManifoldKind::Hyperbola2D: return "Hyperbola2D";
    case ManifoldKind::Line2D: return "Line2D";
    case ManifoldKind::Torus3D: return "Torus3D";
  }
  return "?";
}

/// Descriptor of a manifold with closed-form sampler, tangent/normal spaces,
/// and symmetry Lie algebra. Each kind reduces to a canonical model carried
/// into general position by an optional GL(d) transform.
struct AnalyticManifold {
  ManifoldKind kind = ManifoldKind::Subspace;
  int d = 0;  // ambient dimension
  int r = 0;  // intrinsic dimension

  // Kind-specific parameters; unused fields stay at their defaults.
  std::vector<Vec> basis;     // Subspace / AffineSubspace
  Vec translation;            // AffineSubspace
  Mat q_form;                 // Quadric / Cone
  double semi_a = 1.0, semi_b = 1.0;  // Ellipse2D
  double param_range = 1.5;   // Hyperbola2D sampling half-range
  double major_radius = 2.0, minor_radius = 0.5;  // Torus3D

  Mat gl;  // optional GL(d) transform applied to the whole model; empty = id

  static AnalyticManifold subspace(int d, std::vector<Vec> basis);
  static AnalyticManifold subspace(int d, int r);
  static AnalyticManifold affine_subspace(int d, std::vector<Vec> basis,
                                          Vec translation);
  static AnalyticManifold affine_subspace(int d, int r);
  static AnalyticManifold quadric(Mat q);
  static AnalyticManifold unit_sphere(int d);
  static AnalyticManifold hyperboloid(int d, int p);
  static AnalyticManifold cone(Mat q);
  static AnalyticManifold cone_pq(int p, int q);
  static AnalyticManifold ellipse(double a, double b);
  static AnalyticManifold unit_circle() { return ellipse(1.0, 1.0); }
  static AnalyticManifold hyperbola(double range = 1.5);
  static AnalyticManifold line2d();
  static AnalyticManifold torus(double major = 2.0, double minor = 0.5);
};

namespace detail {

// Canonical base kinds: Subspace span{e_1..e_r}; AffineSubspace
// span{e_1..e_r} + e_{r+1}; Quadric/Cone with Q = diag(1_p, -1_q); Torus3D
// centered at the origin in the xy-plane. transform carries the canonical
// model onto the described manifold.
struct CanonicalModel {
  ManifoldKind base = ManifoldKind::Subspace;
  int d = 0, r = 0, p = 0, q = 0;
  double major = 0.0, minor = 0.0;
  Mat transform;
  Mat inv_transform;
};

inline Mat columns_matrix(int d, const std::vector<Vec>& cols) {
  Mat m(d, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols(); ++j) {
    for (int i = 0; i < d; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

/// Orthogonal matrix whose leading columns are the given orthonormal set.
inline Mat orthogonal_completion(int d, const std::vector<Vec>& lead) {
  OrthonormalBasis head{d, lead};
  OrthonormalBasis tail = complement(head);
  std::vector<Vec> cols = lead;
  cols.insert(cols.end(), tail.vectors.begin(), tail.vectors.end());
  return columns_matrix(d, cols);
}

inline CanonicalModel canonicalize(const AnalyticManifold& m) {
  CanonicalModel cm;
  cm.d = m.d;
  cm.r = m.r;
  Mat intrinsic = Mat::identity(m.d);

  switch (m.kind) {
    case ManifoldKind::Subspace: {
      cm.base = ManifoldKind::Subspace;
      const OrthonormalBasis b = orthonormalize(m.d, m.basis);
      if (b.size() != m.r)
        throw std::invalid_argument("Subspace: basis is rank deficient");
      intrinsic = orthogonal_completion(m.d, b.vectors);
      break;
    }
    case ManifoldKind::AffineSubspace: {
      cm.base = ManifoldKind::AffineSubspace;
      const OrthonormalBasis b = orthonormalize(m.d, m.basis);
      if (b.size() != m.r)
        throw std::invalid_argument("AffineSubspace: basis is rank deficient");
      Vec t = m.translation;
      for (const Vec& u : b.vectors) {
        const double c = dot(u, t);
        for (int i = 0; i < m.d; ++i) t[i] -= c * u[i];
      }
      const double tn = norm(t);
      if (tn < 1e-10)
        throw std::invalid_argument(
            "AffineSubspace: translation lies in the span (not strictly affine)");
      std::vector<Vec> lead = b.vectors;
      Vec dir = t;
      for (double& x : dir) x /= tn;
      lead.push_back(dir);
      intrinsic = orthogonal_completion(m.d, lead);
      for (int i = 0; i < m.d; ++i) intrinsic(i, m.r) *= tn;
      break;
    }
    case ManifoldKind::Quadric:
    case ManifoldKind::Cone: {
      cm.base = m.kind;
      const Mat q = m.q_form;
      if (!q.square() || q.rows() != m.d)
        throw std::invalid_argument("Quadric/Cone: Q has wrong shape");
      const EigenDecomposition eig = sym_eig(q);
      double min_abs = 1e300;
      for (double lam : eig.eigenvalues) min_abs = std::min(min_abs, std::abs(lam));
      if (min_abs < 1e-10)
        throw std::invalid_argument("Quadric/Cone: Q is singular");
      // positive eigenvalues first
      std::vector<int> order;
      for (int i = m.d - 1; i >= 0; --i)
        if (eig.eigenvalues[i] > 0) order.push_back(i);
      cm.p = static_cast<int>(order.size());
      for (int i = m.d - 1; i >= 0; --i)
        if (eig.eigenvalues[i] < 0) order.push_back(i);
      cm.q = m.d - cm.p;
      if (m.kind == ManifoldKind::Quadric && cm.p == 0)
        throw std::invalid_argument("Quadric: Q negative definite, manifold empty");
      if (m.kind == ManifoldKind::Cone && (cm.p == 0 || cm.q == 0))
        throw std::invalid_argument("Cone: Q definite, manifold empty");
      for (int j = 0; j < m.d; ++j) {
        const Vec& u = eig.eigenvectors.vectors[order[j]];
        const double s = 1.0 / std::sqrt(std::abs(eig.eigenvalues[order[j]]));
        for (int i = 0; i < m.d; ++i) intrinsic(i, j) = s * u[i];
      }
      break;
    }
    case ManifoldKind::Ellipse2D: {
      cm.base = ManifoldKind::Quadric;
      cm.p = 2;
      cm.q = 0;
      intrinsic(0, 0) = m.semi_a;
      intrinsic(1, 1) = m.semi_b;
      break;
    }
    case ManifoldKind::Hyperbola2D: {
      cm.base = ManifoldKind::Quadric;
      cm.p = 1;
      cm.q = 1;
      break;
    }
    case ManifoldKind::Line2D: {
      cm.base = ManifoldKind::AffineSubspace;
      break;
    }
    case ManifoldKind::Torus3D: {
      cm.base = ManifoldKind::Torus3D;
      cm.major = m.major_radius;
      cm.minor = m.minor_radius;
      break;
    }
  }

  if (!m.gl.empty()) {
    if (!m.gl.square() || m.gl.rows() != m.d)
      throw std::invalid_argument("gl_transform: wrong shape");
    if (std::abs(determinant(m.gl)) <= 1e-10)
      throw std::invalid_argument("gl_transform: singular");
    cm.transform = m.gl * intrinsic;
  } else {
    cm.transform = intrinsic;
  }
  cm.inv_transform = inverse(cm.transform);
  return cm;
}

inline Vec draw_canonical(const AnalyticManifold& m,
                          const detail::CanonicalModel& cm, Rng& rng) {
  const int d = cm.d;
  Vec x(d, 0.0);
  switch (m.kind) {
    case ManifoldKind::Subspace:
      for (int j = 0; j < cm.r; ++j) x[j] = rng.normal();
      break;
    case ManifoldKind::AffineSubspace:
      for (int j = 0; j < cm.r; ++j) x[j] = rng.normal();
      x[cm.r] = 1.0;
      break;
    case ManifoldKind::Line2D:
      x[0] = rng.uniform(-1.0, 1.0);
      x[1] = 1.0;
      break;
    case ManifoldKind::Ellipse2D: {
      const double theta = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
      x[0] = std::cos(theta);
      x[1] = std::sin(theta);
      break;
    }
    case ManifoldKind::Hyperbola2D: {
      const double t = rng.uniform(-m.param_range, m.param_range);
      const double sign = rng.uniform_int(2) == 0 ? 1.0 : -1.0;
      x[0] = sign * std::cosh(t);
      x[1] = std::sinh(t);
      break;
    }
    case ManifoldKind::Quadric: {
      if (cm.q == 0) {
        double n = 0.0;
        Vec g;
        do {
          g = rng.gaussian_vector(d);
          n = norm(g);
        } while (n < 1e-12);
        for (int i = 0; i < d; ++i) x[i] = g[i] / n;
      } else {
        Vec gp;
        double np = 0.0;
        do {
          gp = rng.gaussian_vector(cm.p);
          np = norm(gp);
        } while (np < 1e-12);
        const Vec gq = rng.gaussian_vector(cm.q);
        const double scale = std::sqrt(1.0 + dot(gq, gq)) / np;
        for (int i = 0; i < cm.p; ++i) x[i] = scale * gp[i];
        for (int i = 0; i < cm.q; ++i) x[cm.p + i] = gq[i];
      }
      break;
    }
    case ManifoldKind::Cone: {
      Vec gp, gq;
      double np = 0.0, nq = 0.0;
      do {
        gp = rng.gaussian_vector(cm.p);
        np = norm(gp);
      } while (np < 1e-12);
      do {
        gq = rng.gaussian_vector(cm.q);
        nq = norm(gq);
      } while (nq < 1e-12);
      const double s = rng.uniform(0.5, 1.5);
      for (int i = 0; i < cm.p; ++i) x[i] = s * gp[i] / np;
      for (int i = 0; i < cm.q; ++i) x[cm.p + i] = s * gq[i] / nq;
      break;
    }
    case ManifoldKind::Torus3D: {
      const double two_pi = 2.0 * 3.14159265358979323846;
      const double theta = rng.uniform(0.0, two_pi);
      const double phi = rng.uniform(0.0, two_pi);
      const double ring = cm.major + cm.minor * std::cos(phi);
      x[0] = ring * std::cos(theta);
      x[1] = ring * std::sin(theta);
      x[2] = cm.minor * std::sin(phi);
      break;
    }
  }
  return x;
}

}  // namespace detail

/// n i.i.d. draws from the manifold's canonical distribution plus isotropic
/// Gaussian noise of std noise_sigma. One RNG substream per point, so the
/// i-th draw does not depend on n.
inline PointCloud sample(const AnalyticManifold& m, int n, std::uint64_t seed,
                         double noise_sigma = 0.0) {
  if (n < 1) throw std::invalid_argument("sample: n must be >= 1");
  if (noise_sigma < 0.0)
    throw std::invalid_argument("sample: noise_sigma must be >= 0");
  const detail::CanonicalModel cm = detail::canonicalize(m);
  PointCloud cloud;
  cloud.ambient_dim = m.d;
  cloud.points.reserve(n);
  for (int i = 0; i < n; ++i) {
    Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(i));
    Vec x = cm.transform * detail::draw_canonical(m, cm, rng);
    if (noise_sigma > 0.0) {
      const Vec g = rng.gaussian_vector(m.d);
      for (int c = 0; c < m.d; ++c) x[c] += noise_sigma * g[c];
    }
    cloud.points.push_back(std::move(x));
  }
  return cloud;
}

/// Residual of the canonical implicit equation at Z^{-1} x; zero on the
/// manifold.
inline double implicit_residual(const AnalyticManifold& m, const Vec& x) {
  const detail::CanonicalModel cm = detail::canonicalize(m);
  const Vec xc = cm.inv_transform * x;
  switch (cm.base) {
    case ManifoldKind::Subspace: {
      double s = 0.0;
      for (int j = cm.r; j < cm.d; ++j) s += xc[j] * xc[j];
      return std::sqrt(s);
    }
    case ManifoldKind::AffineSubspace: {
      double s = (xc[cm.r] - 1.0) * (xc[cm.r] - 1.0);
      for (int j = cm.r + 1; j < cm.d; ++j) s += xc[j] * xc[j];
      return std::sqrt(s);
    }
    case ManifoldKind::Quadric:
    case ManifoldKind::Cone: {
      double form = 0.0;
      for (int j = 0; j < cm.p; ++j) form += xc[j] * xc[j];
      for (int j = cm.p; j < cm.d; ++j) form -= xc[j] * xc[j];
      return std::abs(form - (cm.base == ManifoldKind::Quadric ? 1.0 : 0.0));
    }
    case ManifoldKind::Torus3D: {
      const double ring = std::sqrt(xc[0] * xc[0] + xc[1] * xc[1]) - cm.major;
      return std::abs(ring * ring + xc[2] * xc[2] - cm.minor * cm.minor);
    }
    default:
      throw std::logic_error("implicit_residual: unexpected base kind");
  }
}

/// Orthonormal basis of the tangent space at an on-manifold point.
inline OrthonormalBasis exact_tangent(const AnalyticManifold& m, const Vec& x) {
  if (static_cast<int>(x.size()) != m.d)
    throw std::invalid_argument("exact_tangent: wrong point dimension");
  if (implicit_residual(m, x) > 1e-8)
    throw std::invalid_argument("exact_tangent: point not on manifold");
  const detail::CanonicalModel cm = detail::canonicalize(m);
  const Vec xc = cm.inv_transform * x;

  std::vector<Vec> tangent_c;
  switch (cm.base) {
    case ManifoldKind::Subspace:
    case ManifoldKind::AffineSubspace:
      for (int j = 0; j < cm.r; ++j) {
        Vec e(cm.d, 0.0);
        e[j] = 1.0;
        tangent_c.push_back(std::move(e));
      }
      break;
    case ManifoldKind::Quadric:
    case ManifoldKind::Cone: {
      if (cm.base == ManifoldKind::Cone && norm(xc) < 1e-12)
        throw std::invalid_argument("exact_tangent: cone is singular at 0");
      Vec nrm(cm.d);  // N_x = span{Qx} in canonical coordinates
      for (int j = 0; j < cm.d; ++j)
        nrm[j] = (j < cm.p ? xc[j] : -xc[j]);
      const double nn = norm(nrm);
      for (double& v : nrm) v /= nn;
      const OrthonormalBasis t =
          complement(OrthonormalBasis{cm.d, {nrm}});
      tangent_c = t.vectors;
      break;
    }
    case ManifoldKind::Torus3D: {
      const double theta = std::atan2(xc[1], xc[0]);
      const double ring = std::sqrt(xc[0] * xc[0] + xc[1] * xc[1]);
      const double phi = std::atan2(xc[2], ring - cm.major);
      Vec dtheta = {-std::sin(theta), std::cos(theta), 0.0};
      Vec dphi = {-std::sin(phi) * std::cos(theta),
                  -std::sin(phi) * std::sin(theta), std::cos(phi)};
      tangent_c = {dtheta, dphi};
      break;
    }
    default:
      throw std::logic_error("exact_tangent: unexpected base kind");
  }

  std::vector<Vec> mapped;
  mapped.reserve(tangent_c.size());
  for (const Vec& v : tangent_c) mapped.push_back(cm.transform * v);
  OrthonormalBasis out = orthonormalize(m.d, mapped);
  if (out.size() != cm.r)
    throw std::runtime_error("exact_tangent: degenerate tangent mapping");
  return out;
}

/// Closed-form dimension of the symmetry Lie algebra.
inline int sym_dim(const AnalyticManifold& m) {
  const int d = m.d, r = m.r;
  switch (m.kind) {
    case ManifoldKind::Subspace:
      return r * r + r * (d - r) + (d - r) * (d - r);
    case ManifoldKind::AffineSubspace:
    case ManifoldKind::Line2D:
      return r * d + (d - r) * (d - r - 1);
    case ManifoldKind::Quadric:
    case ManifoldKind::Ellipse2D:
    case ManifoldKind::Hyperbola2D:
      return d * (d - 1) / 2;
    case ManifoldKind::Cone:
      return d * (d - 1) / 2 + 1;
    case ManifoldKind::Torus3D:
      throw std::invalid_argument(
          "sym_dim: not characterized for Torus3D (only the z-rotation "
          "generator is known)");
  }
  throw std::logic_error("sym_dim: unknown kind");
}

namespace detail {

inline Mat unit_entry(int d, int i, int j) {
  Mat e(d, d);
  e(i, j) = 1.0;
  return e;
}

inline std::vector<Mat> canonical_sym_generators(const AnalyticManifold& m,
                                                 const CanonicalModel& cm) {
  const int d = cm.d, r = cm.r, p = cm.p;
  std::vector<Mat> gens;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  switch (cm.base) {
    case ManifoldKind::Subspace:
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          if (i < r || j >= r) gens.push_back(unit_entry(d, i, j));
      break;
    case ManifoldKind::AffineSubspace:
      // block-triangular with the translation direction (column r) fixed
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          if (i < r || (j >= r && j != r)) gens.push_back(unit_entry(d, i, j));
      break;
    case ManifoldKind::Quadric:
    case ManifoldKind::Cone: {
      for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
          Mat g = unit_entry(d, i, j);
          const bool same_block = (i < p) == (j < p);
          if (same_block)
            g -= unit_entry(d, j, i);  // antisymmetric within a block
          else
            g += unit_entry(d, j, i);  // symmetric across blocks
          g *= inv_sqrt2;
          gens.push_back(std::move(g));
        }
      if (cm.base == ManifoldKind::Cone) {
        Mat id = Mat::identity(d);
        id *= 1.0 / std::sqrt(static_cast<double>(d));
        gens.push_back(std::move(id));
      }
      break;
    }
    case ManifoldKind::Torus3D: {
      Mat j = unit_entry(3, 0, 1);
      j -= unit_entry(3, 1, 0);
      j *= inv_sqrt2;
      gens.push_back(std::move(j));
      break;
    }
    default:
      throw std::logic_error("canonical_sym_generators: unexpected base");
  }
  (void)m;
  return gens;
}

}  // namespace detail

/// Orthonormal (Frobenius) basis of the symmetry Lie algebra, as flattened
/// d x d matrices in R^{d^2} (column-major). For Torus3D only the z-rotation
/// generator is exposed.
inline OrthonormalBasis exact_sym_basis(const AnalyticManifold& m) {
  const detail::CanonicalModel cm = detail::canonicalize(m);
  const std::vector<Mat> gens = detail::canonical_sym_generators(m, cm);
  std::vector<Vec> flat;
  flat.reserve(gens.size());
  for (const Mat& g : gens) {
    const Mat conj = cm.transform * g * cm.inv_transform;
    flat.push_back(vec_column_major(conj));
  }
  OrthonormalBasis out = orthonormalize(m.d * m.d, flat);
  if (out.size() != static_cast<int>(gens.size()))
    throw std::runtime_error("exact_sym_basis: conjugated generators collapsed");
  return out;
}

/// Sample-count threshold (codim sym) / (codim M); integral for every zoo
/// member with a characterized symmetry algebra.
inline int n_star(const AnalyticManifold& m) {
  if (m.r >= m.d) throw std::invalid_argument("n_star: manifold has codim 0");
  const int codim_sym = m.d * m.d - sym_dim(m);
  const int codim_m = m.d - m.r;
  if (codim_sym % codim_m != 0)
    throw std::runtime_error("n_star: non-integral ratio");
  return codim_sym / codim_m;
}

/// The manifold Z*M; sampler, tangents and symmetry algebra transform
/// accordingly.
inline AnalyticManifold apply_gl(const AnalyticManifold& m, const Mat& z) {
  if (!z.square() || z.rows() != m.d)
    throw std::invalid_argument("apply_gl: Z has wrong shape");
  if (std::abs(determinant(z)) <= 1e-10)
    throw std::invalid_argument("apply_gl: Z is singular");
  AnalyticManifold out = m;
  out.gl = m.gl.empty() ? z : z * m.gl;
  return out;
}

inline AnalyticManifold AnalyticManifold::subspace(int d, std::vector<Vec> b) {
  const int r = static_cast<int>(b.size());
  if (d < 1 || r < 1 || r >= d)
    throw std::invalid_argument("subspace: need 1 <= r < d");
  AnalyticManifold m;
  m.kind = ManifoldKind::Subspace;
  m.d = d;
  m.r = r;
  m.basis = std::move(b);
  detail::canonicalize(m);  // validate
  return m;
}

inline AnalyticManifold AnalyticManifold::subspace(int d, int r) {
  std::vector<Vec> b;
  for (int i = 0; i < r; ++i) {
    Vec e(d, 0.0);
    if (i < d) e[i] = 1.0;
    b.push_back(std::move(e));
  }
  return subspace(d, std::move(b));
}

inline AnalyticManifold AnalyticManifold::affine_subspace(int d,
                                                          std::vector<Vec> b,
                                                          Vec t) {
  const int r = static_cast<int>(b.size());
  if (d < 2 || r < 1 || r >= d)
    throw std::invalid_argument("affine_subspace: need 1 <= r < d");
  if (static_cast<int>(t.size()) != d)
    throw std::invalid_argument("affine_subspace: bad translation");
  AnalyticManifold m;
  m.kind = ManifoldKind::AffineSubspace;
  m.d = d;
  m.r = r;
  m.basis = std::move(b);
  m.translation = std::move(t);
  detail::canonicalize(m);  // validate (also rejects non-strictly-affine)
  return m;
}

inline AnalyticManifold AnalyticManifold::affine_subspace(int d, int r) {
  std::vector<Vec> b;
  for (int i = 0; i < r; ++i) {
    Vec e(d, 0.0);
    e[i] = 1.0;
    b.push_back(std::move(e));
  }
  Vec t(d, 0.0);
  t[r] = 1.0;
  return affine_subspace(d, std::move(b), std::move(t));
}

inline AnalyticManifold AnalyticManifold::quadric(Mat q) {
  AnalyticManifold m;
  m.kind = ManifoldKind::Quadric;
  m.d = q.rows();
  m.r = m.d - 1;
  m.q_form = std::move(q);
  detail::canonicalize(m);  // validate
  return m;
}

inline AnalyticManifold AnalyticManifold::unit_sphere(int d) {
  return quadric(Mat::identity(d));
}

inline AnalyticManifold AnalyticManifold::hyperboloid(int d, int p) {
  if (p < 1 || p >= d) throw std::invalid_argument("hyperboloid: need 1 <= p < d");
  Mat q(d, d);
  for (int i = 0; i < d; ++i) q(i, i) = i < p ? 1.0 : -1.0;
  return quadric(std::move(q));
}

inline AnalyticManifold AnalyticManifold::cone(Mat q) {
  AnalyticManifold m;
  m.kind = ManifoldKind::Cone;
  m.d = q.rows();
  m.r = m.d - 1;
  m.q_form = std::move(q);
  detail::canonicalize(m);  // validate signature
  return m;
}

inline AnalyticManifold AnalyticManifold::cone_pq(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("cone: need p, q >= 1");
  const int d = p + q;
  Mat qm(d, d);
  for (int i = 0; i < d; ++i) qm(i, i) = i < p ? 1.0 : -1.0;
  return cone(std::move(qm));
}

inline AnalyticManifold AnalyticManifold::ellipse(double a, double b) {
  if (a <= 0.0 || b <= 0.0)
    throw std::invalid_argument("ellipse: semi-axes must be positive");
  AnalyticManifold m;
  m.kind = ManifoldKind::Ellipse2D;
  m.d = 2;
  m.r = 1;
  m.semi_a = a;
  m.semi_b = b;
  return m;
}

inline AnalyticManifold AnalyticManifold::hyperbola(double range) {
  if (range <= 0.0) throw std::invalid_argument("hyperbola: range must be > 0");
  AnalyticManifold m;
  m.kind = ManifoldKind::Hyperbola2D;
  m.d = 2;
  m.r = 1;
  m.param_range = range;
  return m;
}

inline AnalyticManifold AnalyticManifold::line2d() {
  AnalyticManifold m;
  m.kind = ManifoldKind::Line2D;
  m.d = 2;
  m.r = 1;
  return m;
}

inline AnalyticManifold AnalyticManifold::torus(double major, double minor) {
  if (!(0.0 < minor && minor < major))
    throw std::invalid_argument("torus: need 0 < minor < major");
  AnalyticManifold m;
  m.kind = ManifoldKind::Torus3D;
  m.d = 3;
  m.r = 2;
  m.major_radius = major;
  m.minor_radius = minor;
  return m;
}

}  // namespace liepca
