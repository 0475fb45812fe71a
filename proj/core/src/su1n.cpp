#include "adslie/su1n.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace adslie {

namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;
using std::complex;

constexpr complex<double> kI(0.0, 1.0);
constexpr double kHalfPi = 1.5707963267948966192313216916398;
constexpr double kSmallX = 1e-8;

// x-dependent coefficients of the solvable exponentials, evaluated through
// cancellation-free identities; the short series only guards against 0/0
double coeff_cosh_m1_over_x2(double x) {
  if (std::abs(x) < kSmallX) return 0.5 + x * x / 24.0;
  const double sh = std::sinh(0.5 * x);  // cosh(x) - 1 = 2 sinh^2(x/2)
  return 2.0 * sh * sh / (x * x);
}

double coeff_sinh_over_x(double x) {
  if (std::abs(x) < kSmallX) return 1.0 + x * x / 6.0;
  return std::sinh(x) / x;
}

double coeff_expm1_over_x(double x) {
  if (std::abs(x) < kSmallX) return 1.0 + x / 2.0 + x * x / 6.0;
  return std::expm1(x) / x;
}

double coeff_one_m_exp_neg_over_x(double x) { return coeff_expm1_over_x(-x); }

VectorXcd unit_vector(int dim, int index) {
  VectorXcd e = VectorXcd::Zero(dim);
  e[index] = 1.0;
  return e;
}

// g_alpha element of su(1,n) with parameter v in C^(n-1)
AlgebraElement g_alpha_element(int n, const VectorXcd& v, AlgebraTag tag = AlgebraTag::SU1n) {
  if (v.size() != n - 1) throw DimensionError("g_alpha_element: v must be in C^(n-1)");
  const int d = n + 1;
  MatrixXcd m = MatrixXcd::Zero(d, d);
  for (int j = 0; j < n - 1; ++j) {
    m(0, 2 + j) = std::conj(v[j]);
    m(2 + j, 0) = v[j];
    m(1, 2 + j) = std::conj(v[j]);
    m(2 + j, 1) = -v[j];
  }
  return AlgebraElement(tag, n, m);
}

AlgebraElement g_2alpha_element(int n, double mu, AlgebraTag tag = AlgebraTag::SU1n) {
  const int d = n + 1;
  MatrixXcd m = MatrixXcd::Zero(d, d);
  m(0, 0) = kI * mu;
  m(0, 1) = -kI * mu;
  m(1, 0) = kI * mu;
  m(1, 1) = -kI * mu;
  return AlgebraElement(tag, n, m);
}

AlgebraElement a_element(int n, double x, AlgebraTag tag = AlgebraTag::SU1n) {
  const int d = n + 1;
  MatrixXcd m = MatrixXcd::Zero(d, d);
  m(0, 1) = x;
  m(1, 0) = x;
  return AlgebraElement(tag, n, m);
}

AlgebraElement retag(const AlgebraElement& x, AlgebraTag tag) {
  return AlgebraElement(tag, x.n, x.mat);
}

// traceless skew-hermitian (or pseudo skew-hermitian when neg = 1) basis
std::vector<MatrixXcd> pseudo_su_matrices(int m, int neg) {
  std::vector<MatrixXcd> out;
  for (int j = 1; j < m; ++j) {
    MatrixXcd d = MatrixXcd::Zero(m, m);
    d(0, 0) = kI;
    d(j, j) = -kI;
    out.push_back(d);
  }
  for (int j = 0; j < m; ++j)
    for (int k = j + 1; k < m; ++k) {
      const bool mixed = (j < neg) != (k < neg);
      MatrixXcd a = MatrixXcd::Zero(m, m);
      MatrixXcd b = MatrixXcd::Zero(m, m);
      if (mixed) {
        a(j, k) = 1.0;
        a(k, j) = 1.0;
        b(j, k) = -kI;
        b(k, j) = kI;
      } else {
        a(j, k) = 1.0;
        a(k, j) = -1.0;
        b(j, k) = kI;
        b(k, j) = kI;
      }
      out.push_back(a);
      out.push_back(b);
    }
  return out;
}

MatrixXcd pad_block(const MatrixXcd& block, int dim, int offset) {
  MatrixXcd m = MatrixXcd::Zero(dim, dim);
  m.block(offset, offset, block.rows(), block.cols()) = block;
  return m;
}

// k0 of su(1,n): diag(i mu, i mu, Y) with 2 i mu + tr Y = 0
std::vector<AlgebraElement> k0_basis_su(int n) {
  const int d = n + 1;
  std::vector<AlgebraElement> out;
  {
    MatrixXcd m = MatrixXcd::Zero(d, d);
    m(0, 0) = kI;
    m(1, 1) = kI;
    for (int j = 2; j < d; ++j) m(j, j) = -2.0 * kI / static_cast<double>(n - 1);
    out.emplace_back(AlgebraTag::SU1n, n, m);
  }
  for (const MatrixXcd& y : pseudo_su_matrices(n - 1, 0))
    out.emplace_back(AlgebraTag::SU1n, n, pad_block(y, d, 2));
  return out;
}

std::vector<AlgebraElement> iwasawa_n_basis(int n, AlgebraTag tag = AlgebraTag::SU1n) {
  std::vector<AlgebraElement> out;
  for (AlgebraElement& x : closed_form_root_space(AlgebraTag::SU1n, n, su_alpha()))
    out.push_back(retag(x, tag));
  for (AlgebraElement& x : closed_form_root_space(AlgebraTag::SU1n, n, su_2alpha()))
    out.push_back(retag(x, tag));
  return out;
}

// k of su(1,n): block-diagonal traceless, s(u(1) + u(n))
std::vector<AlgebraElement> k_basis_su(int n) {
  const int d = n + 1;
  std::vector<AlgebraElement> out;
  for (int j = 1; j < d; ++j) {
    MatrixXcd m = MatrixXcd::Zero(d, d);
    m(0, 0) = kI;
    m(j, j) = -kI;
    out.emplace_back(AlgebraTag::SU1n, n, m);
  }
  for (int j = 1; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      MatrixXcd a = MatrixXcd::Zero(d, d);
      MatrixXcd b = MatrixXcd::Zero(d, d);
      a(j, k) = 1.0;
      a(k, j) = -1.0;
      b(j, k) = kI;
      b(k, j) = kI;
      out.emplace_back(AlgebraTag::SU1n, n, a);
      out.emplace_back(AlgebraTag::SU1n, n, b);
    }
  return out;
}

}  // namespace

AlgebraElement ceil_element(double t, const VectorXcd& v, const MatrixXcd& X,
                            AlgebraTag tag) {
  const int n = static_cast<int>(v.size());
  if (X.rows() != n || X.cols() != n)
    throw DimensionError("ceil_element: X must be n x n");
  if ((X + X.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw ArgumentError("ceil_element: X must be skew-hermitian");
  MatrixXcd m(n + 1, n + 1);
  m(0, 0) = kI * t;
  m.block(0, 1, 1, n) = v.adjoint();
  m.block(1, 0, n, 1) = v;
  m.block(1, 1, n, n) = X;
  if (tag == AlgebraTag::SU1n && std::abs(kI * t + X.trace()) > 1e-10)
    throw ArgumentError("ceil_element: trace condition fails for su(1,n)");
  return AlgebraElement(tag, n, m);
}

GroupElement exp_a_closed(double x, int n) {
  const int d = n + 1;
  MatrixXcd g = MatrixXcd::Identity(d, d);
  g(0, 0) = std::cosh(x);
  g(0, 1) = std::sinh(x);
  g(1, 0) = std::sinh(x);
  g(1, 1) = std::cosh(x);
  return GroupElement(AlgebraTag::SU1n, n, g);
}

GroupElement exp_n_closed_su(double mu, const VectorXcd& v, int n) {
  if (v.size() != n - 1) throw DimensionError("exp_n_closed_su: v must be in C^(n-1)");
  const int d = n + 1;
  const complex<double> head = kI * mu + 0.5 * v.squaredNorm();
  MatrixXcd g = MatrixXcd::Identity(d, d);
  g(0, 0) += head;
  g(0, 1) -= head;
  g(1, 0) += head;
  g(1, 1) -= head;
  for (int j = 0; j < n - 1; ++j) {
    g(0, 2 + j) = std::conj(v[j]);
    g(1, 2 + j) = std::conj(v[j]);
    g(2 + j, 0) = v[j];
    g(2 + j, 1) = -v[j];
  }
  return GroupElement(AlgebraTag::SU1n, n, g);
}

GroupElement exp_s_closed(double x, double mu, const VectorXcd& vw, int n) {
  if (vw.size() != n - 1) throw DimensionError("exp_s_closed: vw must be in C^(n-1)");
  const int d = n + 1;
  const double s = vw.squaredNorm();
  const double c2 = coeff_cosh_m1_over_x2(x);
  const double c3 = coeff_sinh_over_x(x);
  const double c4 = coeff_expm1_over_x(x);
  const double c5 = coeff_one_m_exp_neg_over_x(x);

  MatrixXcd g = MatrixXcd::Identity(d, d);
  g(0, 0) = std::cosh(x) + c2 * s + kI * c3 * mu;
  g(0, 1) = std::sinh(x) - c2 * s - kI * c3 * mu;
  g(1, 0) = c2 * s + std::sinh(x) + kI * c3 * mu;
  g(1, 1) = std::cosh(x) - c2 * s - kI * c3 * mu;
  for (int j = 0; j < n - 1; ++j) {
    g(0, 2 + j) = c4 * std::conj(vw[j]);
    g(1, 2 + j) = c4 * std::conj(vw[j]);
    g(2 + j, 0) = c5 * vw[j];
    g(2 + j, 1) = -c5 * vw[j];
  }
  return GroupElement(AlgebraTag::SU1n, n, g);
}

GroupElement exp_s_closed(const SGeometry& geom, const SParams& params) {
  return exp_s_closed(params.x, params.mu, geom.assemble(params.z, params.u, params.v),
                      geom.n());
}

SGeometry SGeometry::totally_real(int n, int r) {
  if (r < 1 || r > n - 1)
    throw ArgumentError("SGeometry: totally real complement needs 1 <= r <= n-1");
  SGeometry g;
  g.n_ = n;
  g.totally_real_ = true;
  g.w0_dim_ = n - 1 - r;
  g.phi_ = kHalfPi;
  const int m = n - 1;
  for (int j = 0; j < g.w0_dim_; ++j) {
    g.w_.push_back(unit_vector(m, j));
    g.w_.push_back(kI * unit_vector(m, j));
  }
  for (int j = 0; j < r; ++j) g.w_.push_back(unit_vector(m, g.w0_dim_ + j));
  for (int j = 0; j < r; ++j) g.w_perp_.push_back(kI * unit_vector(m, g.w0_dim_ + j));
  return g;
}

SGeometry SGeometry::with_angle(int n, int k, int l, double phi) {
  if (!(phi > 0.0 && phi < kHalfPi))
    throw ArgumentError("SGeometry: angle must lie strictly between 0 and pi/2");
  const WDecomposition dec = build_w_decomposition(k, l, phi, n);
  SGeometry g;
  g.n_ = n;
  g.totally_real_ = false;
  g.w0_dim_ = k;
  g.l_ = l;
  g.phi_ = phi;
  const int m = n - 1;
  for (int j = 0; j < k; ++j) {
    g.w_.push_back(unit_vector(m, j));
    g.w_.push_back(kI * unit_vector(m, j));
  }
  for (const auto& v : dec.f) g.w_.push_back(v);
  for (const auto& v : dec.h) g.w_.push_back(v);
  for (const auto& v : dec.f_prime) g.w_perp_.push_back(v);
  for (const auto& v : dec.h_prime) g.w_perp_.push_back(v);
  return g;
}

VectorXcd SGeometry::assemble(const VectorXcd& z, const VectorXd& u,
                              const VectorXd& v) const {
  if (z.size() != w0_dim_) throw DimensionError("SGeometry::assemble: bad z length");
  VectorXcd out = VectorXcd::Zero(n_ - 1);
  for (int j = 0; j < w0_dim_; ++j) out[j] = z[j];
  if (totally_real_) {
    if (u.size() != static_cast<int>(w_.size()) - 2 * w0_dim_)
      throw DimensionError("SGeometry::assemble: bad u length");
    for (int j = 0; j < u.size(); ++j) out[w0_dim_ + j] = u[j];
    return out;
  }
  if (u.size() != l_ || v.size() != l_)
    throw DimensionError("SGeometry::assemble: bad u/v length");
  // sum of u_j f_j + v_j h_j over the angled pairs
  const int offset = 2 * w0_dim_;
  for (int j = 0; j < l_; ++j)
    out += u[j] * w_[offset + j] + v[j] * w_[offset + l_ + j];
  return out;
}

void SGeometry::split(const VectorXcd& vw, VectorXcd& z, VectorXd& u, VectorXd& v) const {
  if (vw.size() != n_ - 1) throw DimensionError("SGeometry::split: bad length");
  z.resize(w0_dim_);
  for (int j = 0; j < w0_dim_; ++j) z[j] = vw[j];
  if (totally_real_) {
    const int r = static_cast<int>(w_perp_.size());
    u.resize(r);
    for (int j = 0; j < r; ++j) {
      const complex<double> c = vw[w0_dim_ + j];
      if (std::abs(c.imag()) > 1e-9 * std::max(1.0, vw.norm()))
        throw UnreachableError("SGeometry::split: vector leaves the real block");
      u[j] = c.real();
    }
    v.resize(0);
    return;
  }
  // real least squares on the f/h pairs
  const int offset = 2 * w0_dim_;
  MatrixXd cols(2 * (n_ - 1), 2 * l_);
  for (int j = 0; j < 2 * l_; ++j) cols.col(j) = complex_to_real(w_[offset + j]);
  VectorXcd tail = vw;
  for (int j = 0; j < w0_dim_; ++j) tail[j] = 0.0;
  const VectorXd rhs = complex_to_real(tail);
  const VectorXd sol = cols.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(rhs);
  if ((cols * sol - rhs).norm() > 1e-9 * std::max(1.0, rhs.norm()))
    throw UnreachableError("SGeometry::split: vector is not in w");
  u = sol.head(l_);
  v = sol.tail(l_);
}

std::vector<VectorXcd> SGeometry::slice_basis() const {
  const int d = n_ + 1;
  std::vector<VectorXcd> out;
  out.push_back(unit_vector(d, 0));
  out.push_back(unit_vector(d, 1));
  out.push_back(kI * (unit_vector(d, 0) + unit_vector(d, 1)));
  for (const VectorXcd& w : w_) {
    VectorXcd v = VectorXcd::Zero(d);
    v.tail(n_ - 1) = w;
    out.push_back(v);
  }
  return out;
}

std::vector<VectorXcd> SGeometry::w_slab_basis() const {
  const int d = n_ + 1;
  std::vector<VectorXcd> out;
  out.push_back(unit_vector(d, 0));
  out.push_back(kI * unit_vector(d, 0));
  out.push_back(unit_vector(d, 1));
  out.push_back(kI * unit_vector(d, 1));
  for (const VectorXcd& w : w_) {
    VectorXcd v = VectorXcd::Zero(d);
    v.tail(n_ - 1) = w;
    out.push_back(v);
  }
  return out;
}

Subalgebra SGeometry::s_subalgebra() const {
  std::vector<AlgebraElement> basis;
  basis.push_back(a_element(n_, 1.0));
  for (const VectorXcd& w : w_) basis.push_back(g_alpha_element(n_, w));
  basis.push_back(g_2alpha_element(n_, 1.0));
  return Subalgebra(AlgebraTag::SU1n, n_, std::move(basis));
}

CaseDescriptor CaseDescriptor::fn_a(int n) { return {Kind::FnA, n, 0, 0, 0, 0, 0}; }
CaseDescriptor CaseDescriptor::fn_k0(int n) { return {Kind::FnK0, n, 0, 0, 0, 0, 0}; }
CaseDescriptor CaseDescriptor::fn_fc(int n, double c) {
  if (c == 0.0) throw ArgumentError("CaseDescriptor: fn_fc needs c != 0");
  return {Kind::FnFc, n, c, 0, 0, 0, 0};
}
CaseDescriptor CaseDescriptor::block_unitary(int n, int k) {
  if (k < 0 || k > n - 1) throw ArgumentError("CaseDescriptor: block_unitary needs 0 <= k <= n-1");
  return {Kind::BlockUnitary, n, 0, k, 0, 0, 0};
}
CaseDescriptor CaseDescriptor::circle_real(int n) {
  return {Kind::CircleTimesReal, n, 0, 0, 0, 0, 0};
}
CaseDescriptor CaseDescriptor::totally_real_perp(int n, int r) {
  if (r < 1 || r > n - 1)
    throw ArgumentError("CaseDescriptor: totally_real_perp needs 1 <= r <= n-1");
  return {Kind::TotallyRealPerp, n, 0, 0, r, 0, 0};
}
CaseDescriptor CaseDescriptor::angled_perp(int n, int k, int l, double phi) {
  if (l < 1 || k < 0 || k + 2 * l != n - 1)
    throw ArgumentError("CaseDescriptor: angled_perp needs k + 2l = n-1, l >= 1");
  if (!(phi > 0.0 && phi < kHalfPi))
    throw ArgumentError("CaseDescriptor: angled_perp needs phi in (0, pi/2)");
  return {Kind::AngledPerp, n, 0, k, 0, l, phi};
}

Subalgebra normalizer_in_k(const Subalgebra& s) {
  if (s.tag() != AlgebraTag::SU1n)
    throw TagError("normalizer_in_k: expects a subalgebra of su(1,n)");
  const int n = s.n();
  const std::vector<AlgebraElement> kb = k_basis_su(n);
  const int kd = static_cast<int>(kb.size());

  // orthonormal basis of the flattened s-span for the mod-s projection
  Eigen::JacobiSVD<MatrixXd> svd(s.span_columns(), Eigen::ComputeThinU);
  const int srank = numerical_rank(s.span_columns());
  const MatrixXd q = svd.matrixU().leftCols(srank);
  auto mod_s = [&](const VectorXd& v) { return (v - q * (q.transpose() * v)).eval(); };

  MatrixXd conditions(static_cast<int>(s.dim()) * q.rows(), kd);
  for (int i = 0; i < kd; ++i)
    for (int j = 0; j < s.dim(); ++j) {
      const AlgebraElement br = bracket(kb[i], s.basis()[j]);
      conditions.block(j * q.rows(), i, q.rows(), 1) = mod_s(flatten(br.mat));
    }

  Eigen::JacobiSVD<MatrixXd> nsvd(conditions, Eigen::ComputeFullV);
  const int rank = numerical_rank(conditions, 1e-9);
  const int null_dim = kd - rank;
  std::vector<AlgebraElement> basis;
  for (int c = 0; c < null_dim; ++c) {
    const VectorXd coeff = nsvd.matrixV().col(kd - 1 - c);
    MatrixXcd m = MatrixXcd::Zero(n + 1, n + 1);
    for (int i = 0; i < kd; ++i) m += coeff[i] * kb[i].mat;
    basis.emplace_back(AlgebraTag::SU1n, n, m);
  }
  return Subalgebra(AlgebraTag::SU1n, n, std::move(basis));
}

Subalgebra k0a_subalgebra(int n) {
  std::vector<AlgebraElement> basis = k0_basis_su(n);
  basis.push_back(a_element(n, 1.0));
  return Subalgebra(AlgebraTag::SU1n, n, std::move(basis));
}

Subalgebra case_subalgebra(const CaseDescriptor& d) {
  const int n = d.n;
  if (n < 2) throw ArgumentError("case_subalgebra: need n >= 2");
  switch (d.kind) {
    case CaseDescriptor::Kind::FnA: {
      std::vector<AlgebraElement> basis = iwasawa_n_basis(n);
      basis.push_back(a_element(n, 1.0));
      return Subalgebra(AlgebraTag::SU1n, n, std::move(basis));
    }
    case CaseDescriptor::Kind::FnK0: {
      std::vector<AlgebraElement> basis = iwasawa_n_basis(n);
      for (AlgebraElement& x : k0_basis_su(n)) basis.push_back(x);
      return Subalgebra(AlgebraTag::SU1n, n, std::move(basis));
    }
    case CaseDescriptor::Kind::FnFc: {
      std::vector<AlgebraElement> basis = iwasawa_n_basis(n, AlgebraTag::U1n);
      MatrixXcd xc = MatrixXcd::Zero(n + 1, n + 1);
      xc(0, 0) = kI * d.c;
      xc(0, 1) = 1.0;
      xc(1, 0) = 1.0;
      xc(1, 1) = kI * d.c;
      basis.emplace_back(AlgebraTag::U1n, n, xc);
      return Subalgebra(AlgebraTag::U1n, n, std::move(basis));
    }
    case CaseDescriptor::Kind::BlockUnitary: {
      const int k = d.k;
      const int dim = n + 1;
      std::vector<AlgebraElement> basis;
      for (const MatrixXcd& m : pseudo_su_matrices(k + 1, 1))
        basis.emplace_back(AlgebraTag::SU1n, n, pad_block(m, dim, 0));
      for (const MatrixXcd& m : pseudo_su_matrices(n - k, 0))
        basis.emplace_back(AlgebraTag::SU1n, n, pad_block(m, dim, k + 1));
      MatrixXcd mixed = MatrixXcd::Zero(dim, dim);
      for (int j = 0; j <= k; ++j) mixed(j, j) = kI * static_cast<double>(n - k);
      for (int j = k + 1; j <= n; ++j) mixed(j, j) = -kI * static_cast<double>(k + 1);
      basis.emplace_back(AlgebraTag::SU1n, n, mixed);
      return Subalgebra(AlgebraTag::SU1n, n, std::move(basis));
    }
    case CaseDescriptor::Kind::CircleTimesReal: {
      const int dim = n + 1;
      std::vector<AlgebraElement> basis;
      basis.emplace_back(AlgebraTag::U1n, n, kI * MatrixXcd::Identity(dim, dim));
      for (int j = 1; j < dim; ++j) {
        MatrixXcd m = MatrixXcd::Zero(dim, dim);
        m(0, j) = 1.0;
        m(j, 0) = 1.0;
        basis.emplace_back(AlgebraTag::U1n, n, m);
      }
      for (int j = 1; j < dim; ++j)
        for (int k = j + 1; k < dim; ++k) {
          MatrixXcd m = MatrixXcd::Zero(dim, dim);
          m(j, k) = 1.0;
          m(k, j) = -1.0;
          basis.emplace_back(AlgebraTag::U1n, n, m);
        }
      return Subalgebra(AlgebraTag::U1n, n, std::move(basis));
    }
    case CaseDescriptor::Kind::TotallyRealPerp:
    case CaseDescriptor::Kind::AngledPerp: {
      // algebra of the lifted group: circle factor, normalizer of S in K,
      // and S itself. Without the center the action drops to cohomogeneity
      // two whenever the normalizer has no u(1) part (r = n-1, k = 0).
      const SGeometry geom = d.kind == CaseDescriptor::Kind::TotallyRealPerp
                                 ? SGeometry::totally_real(n, d.r)
                                 : SGeometry::with_angle(n, d.k, d.l, d.phi);
      const Subalgebra s = geom.s_subalgebra();
      const Subalgebra nk = normalizer_in_k(s);
      std::vector<AlgebraElement> basis;
      basis.emplace_back(AlgebraTag::U1n, n, kI * MatrixXcd::Identity(n + 1, n + 1));
      for (const AlgebraElement& x : nk.basis()) basis.push_back(retag(x, AlgebraTag::U1n));
      for (const AlgebraElement& x : s.basis()) basis.push_back(retag(x, AlgebraTag::U1n));
      return Subalgebra(AlgebraTag::U1n, n, std::move(basis));
    }
  }
  throw ArgumentError("case_subalgebra: unhandled case");
}

namespace {

// containment of f in k0 + a of u(1,n), structural form
bool in_k0a_structurally(const AlgebraElement& x, double tol) {
  const int d = x.matrix_dim();
  const MatrixXcd& m = x.mat;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  // first column below row 1 and the (1, j>=2) row must vanish
  for (int j = 2; j < d; ++j)
    if (std::abs(m(j, 0)) > tol * scale || std::abs(m(1, j)) > tol * scale) return false;
  // a-part real, u(1) parts equal on the first two diagonal entries
  if (std::abs(m(1, 0).imag()) > tol * scale) return false;
  if (std::abs(m(0, 0) - m(1, 1)) > tol * scale) return false;
  return true;
}

double a_component(const AlgebraElement& x) { return x.mat(1, 0).real(); }

double u1_component(const AlgebraElement& x) { return x.mat(0, 0).imag(); }

}  // namespace

bool fn_cohomogeneity_one(const Subalgebra& f, double tol) {
  if (f.dim() == 0) throw ArgumentError("fn_cohomogeneity_one: empty f");
  double max_a = 0.0;
  for (const AlgebraElement& x : f.basis()) {
    if (!in_k0a_structurally(x, 1e-8))
      throw ArgumentError("fn_cohomogeneity_one: f is not inside k0 + a");
    max_a = std::max(max_a, std::abs(a_component(x)));
  }
  if (max_a <= tol)
    throw ArgumentError("fn_cohomogeneity_one: f has trivial projection onto a");

  // reduce to elements with zero a-part; their u(1) component must vanish
  int pivot = 0;
  for (int i = 1; i < f.dim(); ++i)
    if (std::abs(a_component(f.basis()[i])) > std::abs(a_component(f.basis()[pivot])))
      pivot = i;
  const double pa = a_component(f.basis()[pivot]);
  for (int i = 0; i < f.dim(); ++i) {
    if (i == pivot) continue;
    const double ratio = a_component(f.basis()[i]) / pa;
    const AlgebraElement z(f.tag(), f.n(),
                           f.basis()[i].mat - ratio * f.basis()[pivot].mat);
    if (std::abs(u1_component(z)) > tol) return false;
  }
  return true;
}

double fn_c_parameter(const Subalgebra& f, double tol) {
  int pivot = -1;
  double best = tol;
  for (int i = 0; i < f.dim(); ++i)
    if (std::abs(a_component(f.basis()[i])) > best) {
      best = std::abs(a_component(f.basis()[i]));
      pivot = i;
    }
  if (pivot < 0) throw ArgumentError("fn_c_parameter: trivial a-projection");
  return u1_component(f.basis()[pivot]) / a_component(f.basis()[pivot]);
}

bool fn_orbit_equivalence_check(const Subalgebra& f, double c, const AdsPoint& p,
                                double tol) {
  const int n = f.n();
  std::vector<MatrixXcd> lhs, rhs;
  for (const AlgebraElement& x : f.basis()) lhs.push_back(x.mat);
  MatrixXcd xc = MatrixXcd::Zero(n + 1, n + 1);
  xc(0, 0) = kI * c;
  xc(0, 1) = 1.0;
  xc(1, 0) = 1.0;
  xc(1, 1) = kI * c;
  rhs.push_back(xc);
  for (const AlgebraElement& x : iwasawa_n_basis(n)) {
    lhs.push_back(x.mat);
    rhs.push_back(x.mat);
  }
  auto tangent = [&](const std::vector<MatrixXcd>& mats) {
    MatrixXd t(2 * (n + 1), static_cast<int>(mats.size()));
    for (size_t j = 0; j < mats.size(); ++j)
      t.col(static_cast<int>(j)) = complex_to_real(mats[j] * p.z);
    return t;
  };
  const MatrixXd a = tangent(lhs);
  const MatrixXd b = tangent(rhs);
  const int ra = numerical_rank(a, tol);
  const int rb = numerical_rank(b, tol);
  if (ra != rb) return false;
  MatrixXd joint(a.rows(), a.cols() + b.cols());
  joint << a, b;
  return numerical_rank(joint, tol) == ra;
}

bool OrbitModel::contains(const AdsPoint& q, double tol) const {
  if (q.model != model || q.n != n) return false;
  if (q.quadric_residual() > std::max(tol, 1e-9)) return false;
  switch (kind) {
    case Kind::AffineSlice: {
      Eigen::MatrixXd cols(q.realified_dim(), static_cast<int>(span.size()));
      for (size_t j = 0; j < span.size(); ++j)
        cols.col(static_cast<int>(j)) = realify(model, span[j]);
      const VectorXcd diff = q.z - base.z;
      return span_residual(cols, realify(model, diff), std::max(1.0, q.z.norm())) <= tol;
    }
    case Kind::HalfSlice: {
      const VectorXcd y = (q.z - base.z) / lambda;
      Eigen::MatrixXd cols(q.realified_dim(), static_cast<int>(span.size()));
      for (size_t j = 0; j < span.size(); ++j)
        cols.col(static_cast<int>(j)) = realify(model, span[j]);
      if (span_residual(cols, realify(model, y), std::max(1.0, q.z.norm())) > tol)
        return false;
      return x0 + y[0].real() - y[1].real() > 0.0;
    }
    case Kind::SphereSlice: {
      const complex<double> head = q.z[0] - q.z[1];
      if (std::abs(head) < 1e-12) return false;
      const complex<double> phase = std::conj(head) / std::abs(head);
      const VectorXcd w = phase * q.z;
      // decompose over slice + perp; the i(e0-e1) component is gone by phase choice
      const int cols_n = static_cast<int>(span.size() + perp.size());
      Eigen::MatrixXd cols(q.realified_dim(), cols_n);
      for (size_t j = 0; j < span.size(); ++j)
        cols.col(static_cast<int>(j)) = realify(model, span[j]);
      for (size_t j = 0; j < perp.size(); ++j)
        cols.col(static_cast<int>(span.size() + j)) = realify(model, perp[j]);
      const VectorXd rhs = realify(model, w);
      const VectorXd sol = cols.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(rhs);
      if ((cols * sol - rhs).norm() > tol * std::max(1.0, rhs.norm())) return false;
      VectorXcd perp_part = VectorXcd::Zero(q.ambient_dim());
      for (size_t j = 0; j < perp.size(); ++j)
        perp_part += sol[static_cast<int>(span.size() + j)] * perp[j];
      const double norm = std::sqrt(perp_part.dot(perp_part).real());
      if (std::abs(norm - radius) > std::max(tol, tol * radius)) return false;
      if (!sphere_full) {
        // one-point sphere: the perp component must match exactly
        VectorXcd target = VectorXcd::Zero(q.ambient_dim());
        for (size_t j = 0; j < perp.size(); ++j) target += perp_coords[j] * perp[j];
        if ((perp_part - target).norm() > std::max(tol, tol * radius)) return false;
      }
      return true;
    }
    case Kind::Membership:
      return predicate && predicate(q, tol);
  }
  return false;
}

OrbitModel n_orbit_model_su(const AdsPoint& p) {
  if (p.model != Model::Complex) throw TagError("n_orbit_model_su: complex model only");
  if (p.quadric_residual() > 1e-8) throw ArgumentError("n_orbit_model_su: p off the quadric");
  const int n = p.n;
  const int d = n + 1;
  OrbitModel m;
  m.kind = OrbitModel::Kind::AffineSlice;
  m.model = Model::Complex;
  m.n = n;
  m.base = p;
  m.span.push_back(unit_vector(d, 0) + unit_vector(d, 1));
  m.span.push_back(kI * (unit_vector(d, 0) + unit_vector(d, 1)));
  for (int j = 2; j < d; ++j) {
    m.span.push_back(unit_vector(d, j));
    m.span.push_back(kI * unit_vector(d, j));
  }
  m.expected_dim = 2 * n;
  return m;
}

OrbitModel s_orbit_model(const SGeometry& geom, const AdsPoint& p) {
  if (p.model != Model::Complex || p.n != geom.n())
    throw TagError("s_orbit_model: model mismatch");
  const double head = std::abs(p.z[0]);
  if (head < 1e-9) throw ArgumentError("s_orbit_model: base point has no e0 component");
  const complex<double> lambda = p.z[0] / head;
  VectorXcd transversal = p.z / lambda;
  transversal[0] -= head;
  // the base must be lambda (x0 e0 + perp vector)
  std::vector<VectorXcd> perp_ambient;
  for (const VectorXcd& v : geom.w_perp_basis()) {
    VectorXcd a = VectorXcd::Zero(p.ambient_dim());
    a.tail(geom.n() - 1) = v;
    perp_ambient.push_back(a);
  }
  Eigen::MatrixXd cols(p.realified_dim(), static_cast<int>(perp_ambient.size()));
  for (size_t j = 0; j < perp_ambient.size(); ++j)
    cols.col(static_cast<int>(j)) = realify(Model::Complex, perp_ambient[j]);
  if (span_residual(cols, realify(Model::Complex, transversal)) > 1e-8 &&
      transversal.norm() > 1e-10)
    throw ArgumentError("s_orbit_model: base point is not in canonical transversal form");

  OrbitModel m;
  m.kind = OrbitModel::Kind::HalfSlice;
  m.model = Model::Complex;
  m.n = geom.n();
  m.base = p;
  m.lambda = lambda;
  m.x0 = head;
  m.span = geom.slice_basis();
  m.expected_dim = static_cast<int>(m.span.size()) - 1;
  return m;
}

OrbitModel orbit_model(const CaseDescriptor& d, const AdsPoint& p) {
  if (p.model != Model::Complex || p.n != d.n)
    throw TagError("orbit_model: complex model point of matching n required");
  if (p.quadric_residual() > 1e-8) throw ArgumentError("orbit_model: p off the quadric");
  const int n = d.n;
  const int dim = n + 1;
  switch (d.kind) {
    case CaseDescriptor::Kind::BlockUnitary: {
      // the distinguished orbit is the lower-dimensional quadric
      // span_C{e0..ek} meet AdS; other orbits are tubes without a slice model
      for (int j = d.k + 1; j <= n; ++j)
        if (std::abs(p.z[j]) > 1e-8)
          throw ArgumentError("orbit_model: point is outside the block slice");
      OrbitModel m;
      m.kind = OrbitModel::Kind::AffineSlice;
      m.model = Model::Complex;
      m.n = n;
      m.base = p;
      for (int j = 0; j <= d.k; ++j) {
        m.span.push_back(unit_vector(dim, j));
        m.span.push_back(kI * unit_vector(dim, j));
      }
      m.expected_dim = 2 * d.k + 1;
      return m;
    }
    case CaseDescriptor::Kind::CircleTimesReal: {
      OrbitModel m;
      m.kind = OrbitModel::Kind::Membership;
      m.model = Model::Complex;
      m.n = n;
      m.base = p;
      m.expected_dim = n + 1;
      m.predicate = [](const AdsPoint& q, double tol) {
        const double scale = std::max(1.0, q.z.cwiseAbs().maxCoeff());
        for (int j = 0; j < q.z.size(); ++j)
          for (int k = j + 1; k < q.z.size(); ++k)
            if (std::abs((q.z[j] * std::conj(q.z[k])).imag()) > tol * scale * scale)
              return false;
        return true;
      };
      if (!m.contains(p, 1e-8))
        throw ArgumentError("orbit_model: point is not a circle multiple of a real vector");
      return m;
    }
    case CaseDescriptor::Kind::TotallyRealPerp:
    case CaseDescriptor::Kind::AngledPerp: {
      const SGeometry geom = d.kind == CaseDescriptor::Kind::TotallyRealPerp
                                 ? SGeometry::totally_real(n, d.r)
                                 : SGeometry::with_angle(n, d.k, d.l, d.phi);
      OrbitModel m;
      m.kind = OrbitModel::Kind::SphereSlice;
      m.model = Model::Complex;
      m.n = n;
      m.base = p;
      m.span = geom.slice_basis();
      for (const VectorXcd& v : geom.w_perp_basis()) {
        VectorXcd a = VectorXcd::Zero(dim);
        a.tail(n - 1) = v;
        m.perp.push_back(a);
      }
      // phase-align p and read off its transversal component
      const complex<double> head = p.z[0] - p.z[1];
      if (std::abs(head) < 1e-12)
        throw ArgumentError("orbit_model: degenerate point");
      const complex<double> phase = std::conj(head) / std::abs(head);
      const VectorXcd w = phase * p.z;
      Eigen::MatrixXd cols(p.realified_dim(),
                           static_cast<int>(m.span.size() + m.perp.size()));
      for (size_t j = 0; j < m.span.size(); ++j)
        cols.col(static_cast<int>(j)) = realify(Model::Complex, m.span[j]);
      for (size_t j = 0; j < m.perp.size(); ++j)
        cols.col(static_cast<int>(m.span.size() + j)) = realify(Model::Complex, m.perp[j]);
      const VectorXd rhs = realify(Model::Complex, w);
      const VectorXd sol =
          cols.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(rhs);
      if ((cols * sol - rhs).norm() > 1e-8 * std::max(1.0, rhs.norm()))
        throw ArgumentError("orbit_model: point does not decompose over the slice");
      m.perp_coords.resize(m.perp.size());
      double r2 = 0.0;
      for (size_t j = 0; j < m.perp.size(); ++j) {
        m.perp_coords[j] = sol[static_cast<int>(m.span.size() + j)];
        r2 += m.perp_coords[j] * m.perp_coords[j];
      }
      m.radius = std::sqrt(r2);
      m.sphere_full = m.perp.size() >= 2;
      const int w_slab_dim = static_cast<int>(geom.w_slab_basis().size());
      m.expected_dim = m.radius > 1e-9 ? 2 * n : w_slab_dim - 1;
      return m;
    }
    default:
      throw ArgumentError("orbit_model: no closed-form slice for this case");
  }
}

NSolveSu solve_n_slice_su(const AdsPoint& p, const AdsPoint& q, double tol) {
  if (p.model != Model::Complex || q.model != Model::Complex || p.n != q.n)
    throw TagError("solve_n_slice_su: complex model points of equal n required");
  const int n = p.n;
  const VectorXcd diff = q.z - p.z;
  const double scale = std::max(1.0, q.z.norm());
  if (std::abs(diff[0] - diff[1]) > tol * scale)
    throw UnreachableError("solve_n_slice_su: target is outside the slice");
  const complex<double> denom = p.z[0] - p.z[1];  // never 0 on the quadric
  if (std::abs(denom) < 1e-12)
    throw ArgumentError("solve_n_slice_su: degenerate base point");
  NSolveSu out;
  out.v = diff.tail(n - 1) / denom;
  const complex<double> dotted = out.v.dot(p.z.tail(n - 1));
  const complex<double> target = (diff[0] - dotted) / denom;
  out.mu = target.imag();
  const AdsPoint image = act(exp_n_closed_su(out.mu, out.v, n), p);
  if ((image.z - q.z).norm() > tol * scale)
    throw UnreachableError("solve_n_slice_su: residual check failed");
  return out;
}

SParams solve_s_slice(const SGeometry& geom, const AdsPoint& p, const AdsPoint& q,
                      double tol) {
  const int n = geom.n();
  if (p.model != Model::Complex || q.model != Model::Complex || p.n != n || q.n != n)
    throw TagError("solve_s_slice: complex model points of matching n required");
  const double head = std::abs(p.z[0]);
  if (head < 1e-9) throw ArgumentError("solve_s_slice: base point has no e0 component");
  const complex<double> lambda = p.z[0] / head;
  const double x0 = head;
  VectorXcd transversal = p.z / lambda;
  transversal[0] -= x0;

  const VectorXcd y = (q.z - p.z) / lambda;
  const double scale = std::max(1.0, q.z.norm());
  const double b = y[0].imag();
  if (std::abs(y[0].imag() - y[1].imag()) > tol * scale)
    throw UnreachableError("solve_s_slice: target leaves the slice subspace");

  const double drop = x0 + y[0].real() - y[1].real();
  if (drop <= 0.0) throw WrongHalfError("solve_s_slice: target is on the opposite half");
  const double x = -std::log(drop / x0);

  VectorXcd z;
  VectorXd u, v;
  geom.split(y.tail(n - 1), z, u, v);  // throws UnreachableError outside w
  const double factor = 1.0 / (x0 * coeff_one_m_exp_neg_over_x(x));
  SParams out;
  out.x = x;
  out.z = factor * z;
  out.u = factor * u;
  out.v = factor * v;

  const VectorXcd vw = geom.assemble(out.z, out.u, out.v);
  const complex<double> cross = vw.dot(transversal.tail(n - 1));
  out.mu = (b - coeff_expm1_over_x(x) * cross.imag()) /
           (x0 * coeff_sinh_over_x(x));

  const AdsPoint image = act(exp_s_closed(out.x, out.mu, vw, n), p);
  if ((image.z - q.z).norm() > tol * scale)
    throw UnreachableError("solve_s_slice: residual check failed");
  return out;
}

AdsPoint e0_point(int n) {
  VectorXcd z = VectorXcd::Zero(n + 1);
  z[0] = 1.0;
  return AdsPoint::complex_point(n, z);
}

}  // namespace adslie
