#include "adslie/orbit.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "adslie/rng.hpp"

namespace adslie {

namespace {

// Diagonal of the realified ambient form: two timelike directions first in
// the real model, (Re z0, Im z0) in the complex one.
Eigen::VectorXd form_diagonal(const AdsPoint& p) {
  Eigen::VectorXd d = Eigen::VectorXd::Ones(p.realified_dim());
  d[0] = -1.0;
  d[1] = -1.0;
  return d;
}

}  // namespace

Eigen::MatrixXd tangent_space(const Subalgebra& h, const AdsPoint& p) {
  if (tag_model(h.tag()) != p.model || h.n() != p.n)
    throw TagError("tangent_space: algebra/point model mismatch");
  Eigen::MatrixXd t(p.realified_dim(), h.dim());
  for (int j = 0; j < h.dim(); ++j)
    t.col(j) = realify(p.model, act_tangent(h.basis()[j], p));
  return t;
}

int orbit_dim(const Subalgebra& h, const AdsPoint& p, double tol) {
  return numerical_rank_checked(tangent_space(h, p), tol);
}

CohomogeneityResult cohomogeneity(const Subalgebra& h, int samples, std::uint64_t seed,
                                  std::span<const std::vector<CoordEq>> loci,
                                  int per_locus) {
  if (samples < 1) throw ArgumentError("cohomogeneity: need samples >= 1");
  const Model model = tag_model(h.tag());
  CohomogeneityResult out;
  auto visit = [&](const AdsPoint& p) {
    try {
      const int d = orbit_dim(h, p);
      out.max_dim = std::max(out.max_dim, d);
      if (std::find(out.dims_observed.begin(), out.dims_observed.end(), d) ==
          out.dims_observed.end())
        out.dims_observed.push_back(d);
    } catch (const DegeneracyError&) {
      ++out.degenerate_samples;
    }
  };
  for (int i = 0; i < samples; ++i)
    visit(sample_ads_point(h.n(), model, Rng::derive(seed, 1, i)));
  for (size_t c = 0; c < loci.size(); ++c)
    for (int i = 0; i < per_locus; ++i)
      visit(sample_ads_point(h.n(), model, Rng::derive(seed, 2 + c, i), loci[c]));
  std::sort(out.dims_observed.begin(), out.dims_observed.end());
  const int ambient = model == Model::Real ? h.n() + 1 : 2 * h.n() + 1;
  out.cohomogeneity = ambient - out.max_dim;
  return out;
}

bool fiber_contained(const Subalgebra& h, const AdsPoint& p, double tol) {
  if (p.model != Model::Complex)
    throw UnsupportedError("fiber_contained: complex model only");
  const Eigen::VectorXcd ip = std::complex<double>(0.0, 1.0) * p.z;
  return in_span(tangent_space(h, p), realify(p.model, ip), tol);
}

bool invariant_subspace(const Subalgebra& h, std::span<const Eigen::VectorXcd> w_basis,
                        double tol) {
  if (w_basis.empty()) return true;
  const Model model = tag_model(h.tag());
  Eigen::MatrixXd w(realify(model, w_basis[0]).size(), static_cast<int>(w_basis.size()));
  for (size_t j = 0; j < w_basis.size(); ++j)
    w.col(static_cast<int>(j)) = realify(model, w_basis[j]);
  for (const AlgebraElement& x : h.basis())
    for (size_t j = 0; j < w_basis.size(); ++j) {
      const Eigen::VectorXcd xw = x.mat * w_basis[j];
      const double scale =
          x.mat.cwiseAbs().maxCoeff() * w_basis[j].norm() * std::sqrt(1.0 * w.rows());
      if (!in_span(w, realify(model, xw), tol, scale)) return false;
    }
  return true;
}

AdsPoint geodesic_exp(const AdsPoint& p, const Eigen::VectorXcd& xi, double r) {
  if (xi.size() != p.ambient_dim()) throw DimensionError("geodesic_exp: length mismatch");
  const double pp = model_product(p.model, p.z, xi);
  const double xx = model_product(p.model, xi, xi);
  if (std::abs(pp) > 1e-8 || std::abs(xx - 1.0) > 1e-8)
    throw ArgumentError("geodesic_exp: xi must be a unit spacelike normal at p");
  AdsPoint out = p;
  out.z = std::cosh(r) * p.z + std::sinh(r) * xi;
  return out;
}

std::vector<AdsPoint> tube_sample(const Subalgebra& h, const AdsPoint& singular_p,
                                  double r, int count, std::uint64_t seed) {
  const int quadric_dim = singular_p.quadric_dim();
  const int base_dim = orbit_dim(h, singular_p);
  if (base_dim >= quadric_dim - 1)
    throw ArgumentError("tube_sample: base orbit is not singular");

  // normal directions: orthogonal to the orbit and to p in the ambient form
  const Eigen::MatrixXd t = tangent_space(h, singular_p);
  const Eigen::VectorXd pr = singular_p.realified();
  const Eigen::VectorXd metric = form_diagonal(singular_p);
  Eigen::MatrixXd constraints(singular_p.realified_dim(), t.cols() + 1);
  for (int j = 0; j < t.cols(); ++j)
    constraints.col(j) = metric.asDiagonal() * t.col(j);
  constraints.col(t.cols()) = metric.asDiagonal() * pr;

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(constraints.transpose(), Eigen::ComputeFullV);
  const int rank = numerical_rank(constraints);
  const int null_dim = singular_p.realified_dim() - rank;
  if (null_dim != quadric_dim - base_dim)
    throw DegeneracyError("tube_sample: normal space has unexpected dimension");
  Eigen::MatrixXd normal = svd.matrixV().rightCols(null_dim);

  // induced form must be positive definite to push out along unit normals
  Eigen::MatrixXd gram = normal.transpose() * metric.asDiagonal() * normal;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
  if (es.eigenvalues().minCoeff() <= 1e-10)
    throw UnsupportedError("tube_sample: induced form on the normal space is indefinite");
  // G-orthonormalize: columns b with b^T G b = I
  Eigen::MatrixXd chol = es.operatorInverseSqrt();
  normal = normal * chol;

  Rng rng(seed);
  std::vector<AdsPoint> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    Eigen::VectorXd c = rng.gaussian_vector(null_dim);
    if (c.norm() < 1e-12) c[0] = 1.0;
    c.normalize();
    const Eigen::VectorXd xi_real = normal * c;
    const Eigen::VectorXcd xi = unrealify(singular_p.model, singular_p.n, xi_real);
    out.push_back(geodesic_exp(singular_p, xi, r));
  }
  return out;
}

}  // namespace adslie
