#include "adslie/indefinite.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>

#include "adslie/rng.hpp"

namespace adslie {

double scalar_product(const Eigen::VectorXd& x, const Eigen::VectorXd& y, Signature sig) {
  if (x.size() != y.size() || x.size() != sig.dim())
    throw DimensionError("scalar_product: vector lengths do not match the signature");
  double s = 0.0;
  for (int i = 0; i < sig.neg; ++i) s -= x[i] * y[i];
  for (int i = sig.neg; i < sig.dim(); ++i) s += x[i] * y[i];
  return s;
}

double hermitian_real_part(const Eigen::VectorXcd& z, const Eigen::VectorXcd& w) {
  if (z.size() != w.size()) throw DimensionError("hermitian_real_part: length mismatch");
  if (z.size() < 1) throw DimensionError("hermitian_real_part: empty vectors");
  std::complex<double> s = -z[0] * std::conj(w[0]);
  for (int k = 1; k < z.size(); ++k) s += z[k] * std::conj(w[k]);
  return s.real();
}

Eigen::VectorXd complex_to_real(const Eigen::VectorXcd& z) {
  Eigen::VectorXd x(2 * z.size());
  for (int k = 0; k < z.size(); ++k) {
    x[2 * k] = z[k].real();
    x[2 * k + 1] = z[k].imag();
  }
  return x;
}

Eigen::VectorXcd real_to_complex(const Eigen::VectorXd& x) {
  if (x.size() % 2 != 0) throw DimensionError("real_to_complex: odd length");
  Eigen::VectorXcd z(x.size() / 2);
  for (int k = 0; k < z.size(); ++k) z[k] = std::complex<double>(x[2 * k], x[2 * k + 1]);
  return z;
}

AdsPoint AdsPoint::real_point(int n, const Eigen::VectorXd& coords) {
  if (coords.size() != n + 2) throw DimensionError("real_point: expected n+2 coordinates");
  AdsPoint p;
  p.model = Model::Real;
  p.n = n;
  p.z = coords.cast<std::complex<double>>();
  return p;
}

AdsPoint AdsPoint::complex_point(int n, const Eigen::VectorXcd& coords) {
  if (coords.size() != n + 1) throw DimensionError("complex_point: expected n+1 coordinates");
  AdsPoint p;
  p.model = Model::Complex;
  p.n = n;
  p.z = coords;
  return p;
}

double model_product(Model model, const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  if (model == Model::Complex) return hermitian_real_part(a, b);
  if (a.size() != b.size()) throw DimensionError("model_product: length mismatch");
  double s = 0.0;
  for (int i = 0; i < a.size(); ++i) {
    const double t = a[i].real() * b[i].real();
    s += (i < 2) ? -t : t;
  }
  return s;
}

Eigen::VectorXd realify(Model model, const Eigen::VectorXcd& v) {
  return model == Model::Real ? Eigen::VectorXd(v.real()) : complex_to_real(v);
}

Eigen::VectorXcd unrealify(Model model, int n, const Eigen::VectorXd& v) {
  if (model == Model::Real) {
    if (v.size() != n + 2) throw DimensionError("unrealify: bad length");
    return v.cast<std::complex<double>>();
  }
  if (v.size() != 2 * (n + 1)) throw DimensionError("unrealify: bad length");
  return real_to_complex(v);
}

double AdsPoint::self_product() const { return model_product(model, z, z); }

double AdsPoint::quadric_residual() const { return std::abs(self_product() + 1.0); }

Eigen::VectorXd AdsPoint::realified() const { return realify(model, z); }

namespace {

// Union-find over tied coordinates so chained constraints like
// x1=x3, x3=x5 collapse to one representative.
int find_root(std::vector<int>& parent, int i) {
  while (parent[i] != i) {
    parent[i] = parent[parent[i]];
    i = parent[i];
  }
  return i;
}

}  // namespace

AdsPoint sample_ads_point(int n, Model model, std::uint64_t seed,
                          std::span<const CoordEq> constraints) {
  if (model == Model::Real && n < 3)
    throw ArgumentError("sample_ads_point: real model needs n >= 3");
  if (model == Model::Complex && n < 2)
    throw ArgumentError("sample_ads_point: complex model needs n >= 2");
  if (model == Model::Complex && !constraints.empty())
    throw ConstraintError("sample_ads_point: constraints supported in the real model only");

  Rng rng(seed);

  if (model == Model::Complex) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      Eigen::VectorXcd z = rng.gaussian_cvector(n + 1);
      const double head = std::abs(z[0]);
      if (head < 1e-8) continue;
      double tail = 0.0;
      for (int k = 1; k <= n; ++k) tail += std::norm(z[k]);
      z[0] *= std::sqrt((1.0 + tail)) / head;  // keep the phase, fix the modulus
      AdsPoint p = AdsPoint::complex_point(n, z);
      if (p.quadric_residual() < 1e-12) return p;
    }
    throw NumericError("sample_ads_point: could not land on the quadric");
  }

  const int dim = n + 2;
  std::vector<int> parent(dim);
  for (int i = 0; i < dim; ++i) parent[i] = i;
  for (const CoordEq& eq : constraints) {
    if (eq.i < 0 || eq.j < 0 || eq.i >= dim || eq.j >= dim)
      throw ConstraintError("sample_ads_point: constraint index out of range");
    parent[find_root(parent, eq.i)] = find_root(parent, eq.j);
  }

  // A timelike coordinate not tied to anything stays free for the quadric solve.
  int free_t = -1;
  for (int t = 0; t < 2 && free_t < 0; ++t) {
    bool tied = false;
    for (int i = 0; i < dim; ++i)
      if (i != t && find_root(parent, i) == find_root(parent, t)) tied = true;
    if (!tied) free_t = t;
  }
  if (free_t < 0)
    throw ConstraintError("sample_ads_point: both timelike coordinates are constrained");

  for (int attempt = 0; attempt < 256; ++attempt) {
    Eigen::VectorXd x = rng.gaussian_vector(dim);
    for (int i = 0; i < dim; ++i) x[i] = x[find_root(parent, i)];
    double rest = 0.0;
    for (int i = 0; i < dim; ++i) {
      if (i == free_t) continue;
      rest += (i < 2) ? -x[i] * x[i] : x[i] * x[i];
    }
    const double tsq = 1.0 + rest;  // -x_t^2 + rest = -1
    if (tsq <= 1e-10) continue;     // discriminant failure, resample
    x[free_t] = (x[free_t] < 0 ? -1.0 : 1.0) * std::sqrt(tsq);
    AdsPoint p = AdsPoint::real_point(n, x);
    if (p.quadric_residual() < 1e-12) return p;
  }
  throw ConstraintError("sample_ads_point: constraint set appears unsatisfiable");
}

int numerical_rank(const Eigen::MatrixXd& columns, double tol) {
  if (columns.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(columns);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv[0] <= 0.0) return 0;
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > tol * sv[0]) ++r;
  return r;
}

int numerical_rank(const std::vector<Eigen::VectorXd>& vectors, double tol) {
  if (vectors.empty()) throw ArgumentError("numerical_rank: empty family");
  return numerical_rank(columns_of(vectors), tol);
}

int numerical_rank_checked(const Eigen::MatrixXd& columns, double tol, double gap) {
  if (columns.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(columns);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv[0] <= 0.0) return 0;
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > tol * sv[0]) ++r;
  if (r > 0 && r < sv.size() && sv[r] > 0.0 && sv[r - 1] / sv[r] < gap)
    throw DegeneracyError("numerical_rank_checked: singular value gap below guard ratio");
  return r;
}

Eigen::VectorXcd project_onto(const Eigen::VectorXcd& v,
                              std::span<const Eigen::VectorXcd> basis) {
  if (basis.empty()) return Eigen::VectorXcd::Zero(v.size());
  const int m = static_cast<int>(basis.size());
  Eigen::MatrixXd G(m, m);
  Eigen::VectorXd rhs(m);
  auto re = [](const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
    return a.dot(b).real();  // Eigen's dot conjugates the first argument
  };
  for (int i = 0; i < m; ++i) {
    if (basis[i].size() != v.size()) throw DimensionError("project_onto: length mismatch");
    for (int j = 0; j <= i; ++j) G(i, j) = G(j, i) = re(basis[i], basis[j]);
    rhs[i] = re(basis[i], v);
  }
  Eigen::LDLT<Eigen::MatrixXd> ldlt(G);
  if (ldlt.info() != Eigen::Success || !ldlt.isPositive())
    throw UnsupportedError("project_onto: degenerate basis Gram matrix");
  Eigen::VectorXd c = ldlt.solve(rhs);
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(v.size());
  for (int i = 0; i < m; ++i) out += c[i] * basis[i];
  return out;
}

Eigen::VectorXd project_onto(const Eigen::VectorXd& v,
                             std::span<const Eigen::VectorXd> basis, Signature sig) {
  if (basis.empty()) return Eigen::VectorXd::Zero(v.size());
  const int m = static_cast<int>(basis.size());
  Eigen::MatrixXd G(m, m);
  Eigen::VectorXd rhs(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= i; ++j) G(i, j) = G(j, i) = scalar_product(basis[i], basis[j], sig);
    rhs[i] = scalar_product(basis[i], v, sig);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G);
  const double scale = es.eigenvalues().cwiseAbs().maxCoeff();
  if (scale <= 0.0 || es.eigenvalues().minCoeff() < 1e-10 * scale)
    throw UnsupportedError("project_onto: induced form is not positive definite on the basis");
  Eigen::VectorXd c = G.ldlt().solve(rhs);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(v.size());
  for (int i = 0; i < m; ++i) out += c[i] * basis[i];
  return out;
}

double span_residual(const Eigen::MatrixXd& columns, const Eigen::VectorXd& v,
                     double scale) {
  const double norm = std::max(v.norm(), scale);
  if (norm == 0.0) return 0.0;
  if (columns.size() == 0) return v.norm() / norm;
  Eigen::VectorXd c = columns.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(v);
  return (columns * c - v).norm() / norm;
}

bool in_span(const Eigen::MatrixXd& columns, const Eigen::VectorXd& v, double tol,
             double scale) {
  return span_residual(columns, v, scale) <= tol;
}

Eigen::MatrixXd columns_of(const std::vector<Eigen::VectorXd>& vectors) {
  if (vectors.empty()) return Eigen::MatrixXd();
  Eigen::MatrixXd m(vectors[0].size(), static_cast<int>(vectors.size()));
  for (int j = 0; j < m.cols(); ++j) {
    if (vectors[j].size() != m.rows()) throw DimensionError("columns_of: ragged family");
    m.col(j) = vectors[j];
  }
  return m;
}

}  // namespace adslie
