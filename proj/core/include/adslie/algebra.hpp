#ifndef ADSLIE_ALGEBRA_HPP
#define ADSLIE_ALGEBRA_HPP

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "adslie/indefinite.hpp"

namespace adslie {

/// Matrix Lie algebras acting on the quadric models.
enum class AlgebraTag { U1n, SU1n, SO2n };

const char* tag_name(AlgebraTag tag);

/// Quadric model an algebra acts on.
inline Model tag_model(AlgebraTag tag) {
  return tag == AlgebraTag::SO2n ? Model::Real : Model::Complex;
}

/// Matrix size of elements with parameter n.
inline int tag_matrix_dim(AlgebraTag tag, int n) {
  return tag == AlgebraTag::SO2n ? n + 2 : n + 1;
}

/// An element of u(1,n), su(1,n) or so(2,n).
///
/// so(2,n) matrices are real (stored with zero imaginary parts); the defining
/// identity is eps X + X^T eps = 0 with eps = diag(-I2, I_n). For u(1,n),
/// X* eps + eps X = 0 with eps = diag(-1, I_n); su(1,n) adds tr X = 0.
struct AlgebraElement {
  AlgebraTag tag = AlgebraTag::SO2n;
  int n = 0;
  Eigen::MatrixXcd mat;

  AlgebraElement() = default;
  AlgebraElement(AlgebraTag tag, int n, Eigen::MatrixXcd m);

  int matrix_dim() const { return tag_matrix_dim(tag, n); }
};

/// An element of the corresponding matrix group.
struct GroupElement {
  AlgebraTag tag = AlgebraTag::SO2n;
  int n = 0;
  Eigen::MatrixXcd mat;

  GroupElement() = default;
  GroupElement(AlgebraTag tag, int n, Eigen::MatrixXcd m);

  int matrix_dim() const { return tag_matrix_dim(tag, n); }
};

/// Commutator XY - YX; requires matching tags.
AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);

/// n tr(XY); defined for so(2,n) only. For su(1,n) use btheta_inner, which is
/// backed by the ad-trace form.
double killing_form(const AlgebraElement& x, const AlgebraElement& y);

/// tr(ad X o ad Y) computed on a full basis; the slow reference for the
/// trace-form shortcuts.
double killing_ad_trace(const AlgebraElement& x, const AlgebraElement& y);

/// Cartan involution: -X^T for so(2,n), -X* otherwise.
AlgebraElement cartan_theta(const AlgebraElement& x);

/// X = k + p with theta(k) = k (block diagonal) and theta(p) = -p.
std::pair<AlgebraElement, AlgebraElement> cartan_split(const AlgebraElement& x);

/// Positive definite inner product -B(X, theta Y). so(2,n) uses the
/// n tr XY Killing form, su(1,n) its ad-trace Killing form, and u(1,n)
/// (reductive, degenerate Killing form) the matrix trace form.
double btheta_inner(const AlgebraElement& x, const AlgebraElement& y);

/// Entrywise check of the defining identities, to tol in max norm.
bool validate(const AlgebraElement& x, double tol = 1e-10);
bool validate(const GroupElement& g, double tol = 1e-10);

/// Scaling-and-squaring power series exponential. Ground truth for all
/// closed-form exponentials in the library.
GroupElement exp_series(const AlgebraElement& x, double tol = 1e-14);

/// Apply a group element to a quadric point.
AdsPoint act(const GroupElement& g, const AdsPoint& p);

/// Tangent action X . p as an ambient vector.
Eigen::VectorXcd act_tangent(const AlgebraElement& x, const AdsPoint& p);

/// Frobenius-orthonormal real basis of the algebra. For the simple algebras
/// this is also orthogonal for btheta_inner (invariant forms on a simple
/// algebra are proportional).
std::vector<AlgebraElement> standard_basis(AlgebraTag tag, int n);

/// Real dimension of the algebra.
int algebra_dim(AlgebraTag tag, int n);

/// Flatten a matrix to a real coordinate vector (re then im), the shared
/// coordinate chart for all span computations.
Eigen::VectorXd flatten(const Eigen::MatrixXcd& m);

}  // namespace adslie

#endif
