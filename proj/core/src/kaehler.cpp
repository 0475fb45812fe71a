#include "adslie/kaehler.hpp"

#include <Eigen/SVD>
#include <cmath>

#include "adslie/rng.hpp"

namespace adslie {

namespace {

constexpr std::complex<double> kI(0.0, 1.0);
constexpr double kHalfPi = 1.5707963267948966192313216916398;

double re_inner(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  return a.dot(b).real();  // dot conjugates the first factor
}

}  // namespace

RealSubspace::RealSubspace(int ambient_dim, std::vector<Eigen::VectorXcd> basis)
    : m_(ambient_dim), basis_(std::move(basis)) {
  for (const auto& v : basis_)
    if (v.size() != m_) throw DimensionError("RealSubspace: basis vector of wrong length");
  // Gram-Schmidt over R
  for (const auto& v : basis_) {
    Eigen::VectorXcd u = v;
    for (const auto& b : ortho_) u -= re_inner(b, u) * b;
    const double norm = std::sqrt(re_inner(u, u));
    if (norm < 1e-10)
      throw ArgumentError("RealSubspace: basis is not R-linearly independent");
    ortho_.push_back(u / norm);
  }
}

Eigen::VectorXcd RealSubspace::project(const Eigen::VectorXcd& v) const {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(m_);
  for (const auto& b : ortho_) out += re_inner(b, v) * b;
  return out;
}

bool RealSubspace::contains(const Eigen::VectorXcd& v, double tol) const {
  const double norm = std::sqrt(re_inner(v, v));
  if (norm == 0.0) return true;
  return std::sqrt(re_inner(v - project(v), v - project(v))) <= tol * norm;
}

double kaehler_angle(const Eigen::VectorXcd& v, const RealSubspace& V) {
  const double norm = std::sqrt(re_inner(v, v));
  if (norm < 1e-12) throw ArgumentError("kaehler_angle: zero vector");
  if (!V.contains(v, 1e-8)) throw ArgumentError("kaehler_angle: vector is not in V");
  const Eigen::VectorXcd proj = V.project(kI * v);
  double c = std::sqrt(re_inner(proj, proj)) / norm;
  c = std::min(1.0, std::max(0.0, c));
  return std::acos(c);
}

std::optional<double> constant_kaehler_angle(const RealSubspace& V, double tol) {
  const int d = V.dim();
  if (d < 1) throw ArgumentError("constant_kaehler_angle: empty subspace");
  // Matrix of the skew form Re<iu, w> on the orthonormal basis; its singular
  // values are the cosines of the principal Kaehler angles.
  Eigen::MatrixXd S(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      S(a, b) = re_inner(kI * V.ortho_basis()[a], V.ortho_basis()[b]);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(S);
  const auto& sv = svd.singularValues();
  const double hi = sv[0];
  const double lo = sv[sv.size() - 1];
  if (hi - lo > tol) return std::nullopt;
  const double c = std::min(1.0, 0.5 * (hi + lo));
  const double phi = std::acos(c);

  // sampling cross-check on random unit combinations
  Rng rng(0x6b61656c65726eull);
  for (int trial = 0; trial < 50; ++trial) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(V.ambient_dim());
    for (const auto& b : V.ortho_basis()) v += rng.gaussian() * b;
    const double norm = std::sqrt(re_inner(v, v));
    if (norm < 1e-9) continue;
    if (std::abs(kaehler_angle(v / norm, V) - phi) > std::max(tol, 1e-7))
      return std::nullopt;
  }
  return phi;
}

WDecomposition build_w_decomposition(int k, int l, double phi, int n) {
  if (k < 0 || l < 0 || k + 2 * l != n - 1)
    throw ArgumentError("build_w_decomposition: need k + 2l = n - 1");
  if (l == 0) throw ArgumentError("build_w_decomposition: need l >= 1");
  if (!(phi > 0.0) || phi > kHalfPi + 1e-12)
    throw ArgumentError("build_w_decomposition: phi must lie in (0, pi/2]");
  const int m = n - 1;
  const double c = std::cos(0.5 * phi);
  const double s = std::sin(0.5 * phi);

  std::vector<Eigen::VectorXcd> w0_basis;
  for (int j = 0; j < k; ++j) {
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(m);
    e[j] = 1.0;
    w0_basis.push_back(e);
    w0_basis.push_back(kI * e);
  }

  std::vector<Eigen::VectorXcd> f, h, fp, hp;
  for (int j = 0; j < l; ++j) {
    Eigen::VectorXcd a = Eigen::VectorXcd::Zero(m);
    Eigen::VectorXcd b = Eigen::VectorXcd::Zero(m);
    a[k + j] = 1.0;
    b[k + l + j] = 1.0;
    f.push_back(c * a + s * kI * b);
    h.push_back(c * kI * a + s * b);
    fp.push_back(-s * a + c * kI * b);
    hp.push_back(-s * kI * a + c * b);
  }

  std::vector<Eigen::VectorXcd> wphi_basis = f;
  wphi_basis.insert(wphi_basis.end(), h.begin(), h.end());
  std::vector<Eigen::VectorXcd> wperp_basis = fp;
  wperp_basis.insert(wperp_basis.end(), hp.begin(), hp.end());

  WDecomposition out{
      k, l, phi,
      RealSubspace(m, std::move(w0_basis)),
      RealSubspace(m, std::move(wphi_basis)),
      RealSubspace(m, std::move(wperp_basis)),
      std::move(f), std::move(h), std::move(fp), std::move(hp)};
  return out;
}

}  // namespace adslie
