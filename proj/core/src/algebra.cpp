#include "adslie/algebra.hpp"

#include <cmath>
#include <complex>

namespace adslie {

namespace {

using Eigen::MatrixXcd;
using std::complex;

MatrixXcd epsilon(AlgebraTag tag, int n) {
  const int d = tag_matrix_dim(tag, n);
  const int neg = tag == AlgebraTag::SO2n ? 2 : 1;
  Eigen::VectorXcd diag = Eigen::VectorXcd::Ones(d);
  for (int i = 0; i < neg; ++i) diag[i] = -1.0;
  return diag.asDiagonal();
}

void check_same(const AlgebraElement& x, const AlgebraElement& y, const char* who) {
  if (x.tag != y.tag || x.n != y.n)
    throw TagError(std::string(who) + ": mixed algebras");
}

}  // namespace

const char* tag_name(AlgebraTag tag) {
  switch (tag) {
    case AlgebraTag::U1n: return "u(1,n)";
    case AlgebraTag::SU1n: return "su(1,n)";
    case AlgebraTag::SO2n: return "so(2,n)";
  }
  return "?";
}

AlgebraElement::AlgebraElement(AlgebraTag tag_, int n_, Eigen::MatrixXcd m)
    : tag(tag_), n(n_), mat(std::move(m)) {
  const int d = matrix_dim();
  if (mat.rows() != d || mat.cols() != d)
    throw DimensionError("AlgebraElement: matrix size does not match n");
}

GroupElement::GroupElement(AlgebraTag tag_, int n_, Eigen::MatrixXcd m)
    : tag(tag_), n(n_), mat(std::move(m)) {
  const int d = matrix_dim();
  if (mat.rows() != d || mat.cols() != d)
    throw DimensionError("GroupElement: matrix size does not match n");
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
  check_same(x, y, "bracket");
  return AlgebraElement(x.tag, x.n, x.mat * y.mat - y.mat * x.mat);
}

double killing_form(const AlgebraElement& x, const AlgebraElement& y) {
  check_same(x, y, "killing_form");
  if (x.tag != AlgebraTag::SO2n)
    throw TagError("killing_form: n tr XY shortcut is defined for so(2,n) only");
  return static_cast<double>(x.n) * (x.mat * y.mat).trace().real();
}

double killing_ad_trace(const AlgebraElement& x, const AlgebraElement& y) {
  check_same(x, y, "killing_ad_trace");
  const std::vector<AlgebraElement> basis = standard_basis(x.tag, x.n);
  const int d = static_cast<int>(basis.size());
  // Coordinates w.r.t. a Frobenius-orthonormal basis are Frobenius products.
  auto coords = [&](const MatrixXcd& m) {
    Eigen::VectorXd c(d);
    for (int i = 0; i < d; ++i) c[i] = (m.cwiseProduct(basis[i].mat.conjugate())).sum().real();
    return c;
  };
  Eigen::MatrixXd ad_x(d, d), ad_y(d, d);
  for (int i = 0; i < d; ++i) {
    ad_x.col(i) = coords(x.mat * basis[i].mat - basis[i].mat * x.mat);
    ad_y.col(i) = coords(y.mat * basis[i].mat - basis[i].mat * y.mat);
  }
  return (ad_x * ad_y).trace();
}

AlgebraElement cartan_theta(const AlgebraElement& x) {
  if (x.tag == AlgebraTag::SO2n)
    return AlgebraElement(x.tag, x.n, -x.mat.transpose());
  return AlgebraElement(x.tag, x.n, -x.mat.adjoint());
}

std::pair<AlgebraElement, AlgebraElement> cartan_split(const AlgebraElement& x) {
  const AlgebraElement tx = cartan_theta(x);
  AlgebraElement k(x.tag, x.n, 0.5 * (x.mat + tx.mat));
  AlgebraElement p(x.tag, x.n, 0.5 * (x.mat - tx.mat));
  return {k, p};
}

double btheta_inner(const AlgebraElement& x, const AlgebraElement& y) {
  check_same(x, y, "btheta_inner");
  const AlgebraElement ty = cartan_theta(y);
  switch (x.tag) {
    case AlgebraTag::SO2n:
      return -killing_form(x, ty);
    case AlgebraTag::SU1n:
      return -killing_ad_trace(x, ty);
    case AlgebraTag::U1n:
      // Killing form is degenerate on the u(1) center; the trace form is the
      // invariant positive definite substitute.
      return -(x.mat * ty.mat).trace().real();
  }
  return 0.0;
}

bool validate(const AlgebraElement& x, double tol) {
  const int d = x.matrix_dim();
  if (x.mat.rows() != d || x.mat.cols() != d) return false;
  if (!x.mat.allFinite()) return false;
  const MatrixXcd eps = epsilon(x.tag, x.n);
  if (x.tag == AlgebraTag::SO2n) {
    if (x.mat.imag().cwiseAbs().maxCoeff() > tol) return false;
    const MatrixXcd r = eps * x.mat + x.mat.transpose() * eps;
    if (r.cwiseAbs().maxCoeff() > tol) return false;
    return std::abs(x.mat.trace()) <= tol * std::max(1.0, x.mat.cwiseAbs().maxCoeff());
  }
  const MatrixXcd r = x.mat.adjoint() * eps + eps * x.mat;
  if (r.cwiseAbs().maxCoeff() > tol) return false;
  if (x.tag == AlgebraTag::SU1n && std::abs(x.mat.trace()) > tol) return false;
  return true;
}

bool validate(const GroupElement& g, double tol) {
  const int d = g.matrix_dim();
  if (g.mat.rows() != d || g.mat.cols() != d) return false;
  if (!g.mat.allFinite()) return false;
  const MatrixXcd eps = epsilon(g.tag, g.n);
  if (g.tag == AlgebraTag::SO2n) {
    if (g.mat.imag().cwiseAbs().maxCoeff() > tol) return false;
    const MatrixXcd r = g.mat.transpose() * eps * g.mat - eps;
    if (r.cwiseAbs().maxCoeff() > tol) return false;
    return std::abs(g.mat.determinant() - 1.0) <= tol * 10;
  }
  const MatrixXcd r = g.mat.adjoint() * eps * g.mat - eps;
  if (r.cwiseAbs().maxCoeff() > tol) return false;
  if (g.tag == AlgebraTag::SU1n && std::abs(g.mat.determinant() - 1.0) > tol * 10)
    return false;
  return true;
}

GroupElement exp_series(const AlgebraElement& x, double tol) {
  const int d = x.matrix_dim();
  const double norm = x.mat.cwiseAbs().maxCoeff() * d;
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const double scale = std::ldexp(1.0, -squarings);

  MatrixXcd y = x.mat * scale;
  MatrixXcd term = MatrixXcd::Identity(d, d);
  MatrixXcd sum = term;
  bool converged = false;
  for (int k = 1; k <= 64; ++k) {
    term = (term * y) / static_cast<double>(k);
    sum += term;
    const double tn = term.cwiseAbs().maxCoeff();
    if (!std::isfinite(tn)) throw NumericError("exp_series: non-finite term");
    if (tn <= tol * std::max(1.0, sum.cwiseAbs().maxCoeff())) {
      converged = true;
      break;
    }
  }
  if (!converged) throw NumericError("exp_series: series did not converge in 64 terms");
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return GroupElement(x.tag, x.n, sum);
}

AdsPoint act(const GroupElement& g, const AdsPoint& p) {
  if (tag_model(g.tag) != p.model || g.matrix_dim() != p.ambient_dim())
    throw TagError("act: group/point model mismatch");
  AdsPoint q = p;
  q.z = g.mat * p.z;
  return q;
}

Eigen::VectorXcd act_tangent(const AlgebraElement& x, const AdsPoint& p) {
  if (tag_model(x.tag) != p.model || x.matrix_dim() != p.ambient_dim())
    throw TagError("act_tangent: algebra/point model mismatch");
  return x.mat * p.z;
}

namespace {

void push_normalized(std::vector<AlgebraElement>& out, AlgebraTag tag, int n,
                     const MatrixXcd& m) {
  const double norm = std::sqrt((m.cwiseProduct(m.conjugate())).sum().real());
  out.emplace_back(tag, n, m / norm);
}

std::vector<AlgebraElement> so2n_basis(int n) {
  const int d = n + 2;
  std::vector<AlgebraElement> out;
  const complex<double> one(1.0, 0.0);
  // antisymmetric inside each definiteness block, symmetric across
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      MatrixXcd m = MatrixXcd::Zero(d, d);
      const bool mixed = (i < 2) != (j < 2);
      m(i, j) = one;
      m(j, i) = mixed ? one : -one;
      push_normalized(out, AlgebraTag::SO2n, n, m);
    }
  return out;
}

std::vector<AlgebraElement> u1n_like_basis(AlgebraTag tag, int n) {
  const int d = n + 1;
  std::vector<AlgebraElement> out;
  const complex<double> i_unit(0.0, 1.0);

  if (tag == AlgebraTag::U1n) {
    // diagonal iE_kk, then off-diagonal pairs
    for (int k = 0; k < d; ++k) {
      MatrixXcd m = MatrixXcd::Zero(d, d);
      m(k, k) = i_unit;
      push_normalized(out, tag, n, m);
    }
  } else {
    // traceless diagonals i(E_00 - E_kk), Gram-Schmidt orthonormalized
    std::vector<MatrixXcd> diags;
    for (int k = 1; k < d; ++k) {
      MatrixXcd m = MatrixXcd::Zero(d, d);
      m(0, 0) = i_unit;
      m(k, k) = -i_unit;
      diags.push_back(m);
    }
    std::vector<MatrixXcd> ortho;
    for (MatrixXcd m : diags) {
      for (const MatrixXcd& b : ortho)
        m -= (m.cwiseProduct(b.conjugate())).sum() * b;
      const double norm = std::sqrt((m.cwiseProduct(m.conjugate())).sum().real());
      ortho.push_back(m / norm);
    }
    for (const MatrixXcd& m : ortho) out.emplace_back(tag, n, m);
  }

  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      // mixed block (row/col 0) is symmetric-real / antisymmetric-imag,
      // the u(n) block the other way around
      const bool mixed = (j == 0);
      MatrixXcd a = MatrixXcd::Zero(d, d);
      MatrixXcd b = MatrixXcd::Zero(d, d);
      if (mixed) {
        a(j, k) = 1.0;
        a(k, j) = 1.0;
        b(j, k) = -i_unit;
        b(k, j) = i_unit;
      } else {
        a(j, k) = 1.0;
        a(k, j) = -1.0;
        b(j, k) = i_unit;
        b(k, j) = i_unit;
      }
      push_normalized(out, tag, n, a);
      push_normalized(out, tag, n, b);
    }
  return out;
}

}  // namespace

std::vector<AlgebraElement> standard_basis(AlgebraTag tag, int n) {
  std::vector<AlgebraElement> out =
      tag == AlgebraTag::SO2n ? so2n_basis(n) : u1n_like_basis(tag, n);
  return out;
}

int algebra_dim(AlgebraTag tag, int n) {
  switch (tag) {
    case AlgebraTag::SO2n: return (n + 2) * (n + 1) / 2;
    case AlgebraTag::SU1n: return (n + 1) * (n + 1) - 1;
    case AlgebraTag::U1n: return (n + 1) * (n + 1);
  }
  return 0;
}

Eigen::VectorXd flatten(const Eigen::MatrixXcd& m) {
  const int sz = static_cast<int>(m.size());
  Eigen::VectorXd v(2 * sz);
  int idx = 0;
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < m.rows(); ++i) {
      v[idx++] = m(i, j).real();
      v[idx++] = m(i, j).imag();
    }
  return v;
}

}  // namespace adslie
