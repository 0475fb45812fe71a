#ifndef ADSLIE_SU1N_HPP
#define ADSLIE_SU1N_HPP

#include <functional>
#include <optional>

#include "adslie/kaehler.hpp"
#include "adslie/orbit.hpp"
#include "adslie/roots.hpp"

namespace adslie {

/// Assemble the bordered matrix with top-left it, first column v, top row v*
/// and lower-right block X (skew-hermitian). Lands in u(1,n); in su(1,n)
/// exactly when it + tr X = 0.
AlgebraElement ceil_element(double t, const Eigen::VectorXcd& v, const Eigen::MatrixXcd& X,
                            AlgebraTag tag = AlgebraTag::U1n);

/// exp of x times the flat generator: hyperbolic rotation of the (e0, e1)
/// plane.
GroupElement exp_a_closed(double x, int n);

/// exp of the nilpotent element with center parameter mu and g_alpha vector
/// v in C^(n-1); closed because the cube vanishes.
GroupElement exp_n_closed_su(double mu, const Eigen::VectorXcd& v, int n);

/// Geometry of the solvable subalgebra s = a + w + g_2alpha: the splitting of
/// w inside g_alpha = C^(n-1) and the bases of the slice subspaces.
class SGeometry {
 public:
  /// w = C^(n-1-r) + R^r with a totally real complement of dimension r.
  static SGeometry totally_real(int n, int r);
  /// w = C^k + (constant-angle plane pairs); complement has constant
  /// Kaehler angle phi in (0, pi/2), real dimension 2l; k + 2l = n-1.
  static SGeometry with_angle(int n, int k, int l, double phi);

  int n() const { return n_; }
  bool is_totally_real() const { return totally_real_; }
  int w0_complex_dim() const { return w0_dim_; }
  int transversal_dim() const { return static_cast<int>(w_perp_.size()); }
  double phi() const { return phi_; }
  int l() const { return l_; }

  /// Real basis of w inside C^(n-1) (w0 pairs first, then the angled part).
  const std::vector<Eigen::VectorXcd>& w_basis() const { return w_; }
  /// Real basis of the orthogonal complement of w in g_alpha... for the
  /// totally real case this is i R^r, else the primed constant-angle basis.
  const std::vector<Eigen::VectorXcd>& w_perp_basis() const { return w_perp_; }

  /// Compose the g_alpha vector of an s-element from its parameters:
  /// z over w0, and the real coordinates u (and v, angled case) of the
  /// remaining part of w.
  Eigen::VectorXcd assemble(const Eigen::VectorXcd& z, const Eigen::VectorXd& u,
                            const Eigen::VectorXd& v = Eigen::VectorXd()) const;

  /// Split a g_alpha vector lying in w back into (z, u, v); the inverse of
  /// assemble on w.
  void split(const Eigen::VectorXcd& vw, Eigen::VectorXcd& z, Eigen::VectorXd& u,
             Eigen::VectorXd& v) const;

  /// Slice subspace V = span_R{e0, e1, i(e0+e1)} + w, as ambient vectors.
  std::vector<Eigen::VectorXcd> slice_basis() const;

  /// The enveloping subspace W = span_C{e0, e1} + w of the base orbit.
  std::vector<Eigen::VectorXcd> w_slab_basis() const;

  /// The algebra s = a + w + g_2alpha.
  Subalgebra s_subalgebra() const;

 private:
  SGeometry() = default;
  int n_ = 0;
  bool totally_real_ = true;
  int w0_dim_ = 0;
  int l_ = 0;
  double phi_ = 0.0;
  std::vector<Eigen::VectorXcd> w_;
  std::vector<Eigen::VectorXcd> w_perp_;
};

/// Closed form of exp(X) for X = x(flat) + (mu, vw) in s, any vw in C^(n-1):
/// I plus (cosh x - 1)/x and sinh(x)/x multiples of the two displayed
/// matrices, with series-stabilized coefficients near x = 0.
GroupElement exp_s_closed(double x, double mu, const Eigen::VectorXcd& vw, int n);

/// The parameters of an s-element under a geometry.
struct SParams {
  double x = 0;
  double mu = 0;
  Eigen::VectorXcd z;   // w0 coordinates
  Eigen::VectorXd u;    // real coordinates (first half, or the R^r block)
  Eigen::VectorXd v;    // second real block (angled case only)
};

GroupElement exp_s_closed(const SGeometry& geom, const SParams& params);

/// Descriptors of the cohomogeneity-one subgroups of U(1,n).
struct CaseDescriptor {
  enum class Kind {
    FnA,             // F = A
    FnK0,            // F = K0
    FnFc,            // F generated by the bordered ic matrix, c != 0
    BlockUnitary,    // S(U(1,k) x U(n-k))
    CircleTimesReal, // S^1 SO0(1,n)
    TotallyRealPerp, // normalizer of S, w-perp totally real of dim r
    AngledPerp       // normalizer of S, w-perp of constant angle phi
  };

  Kind kind = Kind::FnA;
  int n = 0;
  double c = 0;    // FnFc
  int k = 0;       // BlockUnitary; AngledPerp w0 dimension
  int r = 0;       // TotallyRealPerp
  int l = 0;       // AngledPerp
  double phi = 0;  // AngledPerp

  static CaseDescriptor fn_a(int n);
  static CaseDescriptor fn_k0(int n);
  static CaseDescriptor fn_fc(int n, double c);
  static CaseDescriptor block_unitary(int n, int k);
  static CaseDescriptor circle_real(int n);
  static CaseDescriptor totally_real_perp(int n, int r);
  static CaseDescriptor angled_perp(int n, int k, int l, double phi);
};

/// The acting subalgebra of a case, bracket-closed inside u(1,n).
Subalgebra case_subalgebra(const CaseDescriptor& d);

/// Normalizer of s inside k: {X in k : [X, s] in s}, by nullspace solve.
Subalgebra normalizer_in_k(const Subalgebra& s);

/// The k0 + a subalgebra and helpers for the F-factor analysis.
Subalgebra k0a_subalgebra(int n);

/// True when F N acts with cohomogeneity one: every element of f
/// intersect k0 must have vanishing u(1) component. Requires f inside
/// k0 + a with nontrivial projection onto a.
bool fn_cohomogeneity_one(const Subalgebra& f, double tol = 1e-9);

/// Coefficient c of the normalized generator of f over a (the u(1)
/// component of the element whose a-part is the unit flat generator).
double fn_c_parameter(const Subalgebra& f, double tol = 1e-9);

/// Tangent-space equality (f + n).p = (f_c + n).p.
bool fn_orbit_equivalence_check(const Subalgebra& f, double c, const AdsPoint& p,
                                double tol = 1e-8);

/// Symbolic orbit descriptions.
struct OrbitModel {
  enum class Kind { AffineSlice, HalfSlice, SphereSlice, Membership };

  Kind kind = Kind::AffineSlice;
  Model model = Model::Complex;
  int n = 0;
  AdsPoint base;

  // AffineSlice / HalfSlice: real span of the slice directions
  std::vector<Eigen::VectorXcd> span;
  // HalfSlice: phase of the base point and its timelike height; membership
  // requires x0 + Re(y0 - y1) > 0 after removing the phase
  std::complex<double> lambda{1.0, 0.0};
  double x0 = 1.0;
  // SphereSlice: circle-saturated slice; perp directions and sphere radius.
  // sphere_full is false when the compact factor fixes the transversal
  // point (1-dimensional perp), in which case perp_coords pins it exactly.
  std::vector<Eigen::VectorXcd> perp;
  double radius = 0.0;
  bool sphere_full = true;
  std::vector<double> perp_coords;
  // Membership: free-form predicate
  std::function<bool(const AdsPoint&, double)> predicate;

  // expected orbit dimension, recorded for cross-checks
  int expected_dim = 0;

  bool contains(const AdsPoint& q, double tol = 1e-9) const;
};

/// Orbit of the nilpotent group N through p: the affine slice
/// p + span_R{e0+e1, i(e0+e1), e2, i e2, ...}.
OrbitModel n_orbit_model_su(const AdsPoint& p);

/// Orbit of S through a canonical base point lambda(x0 e0 + transversal):
/// the half slice (p + lambda V)+ with the sign functional selected by the
/// e0 coefficient of p.
OrbitModel s_orbit_model(const SGeometry& geom, const AdsPoint& p);

/// Orbit model of a case subgroup through p (see contains() semantics per
/// kind). Cases 4/5 yield circle-saturated sphere slices; case 3 a phase
/// alignment predicate; case 2 the linear slice span_C{e0..ek}.
OrbitModel orbit_model(const CaseDescriptor& d, const AdsPoint& p);

/// Parameters of the N element mapping p to q inside the N slice.
struct NSolveSu {
  double mu = 0;
  Eigen::VectorXcd v;
};
NSolveSu solve_n_slice_su(const AdsPoint& p, const AdsPoint& q, double tol = 1e-9);

/// Parameters of the S element mapping a canonical base point p to q in the
/// same half slice: x from the timelike drop, then stabilized divisions.
SParams solve_s_slice(const SGeometry& geom, const AdsPoint& p, const AdsPoint& q,
                      double tol = 1e-9);

/// e0 as a quadric point of the complex model.
AdsPoint e0_point(int n);

}  // namespace adslie

#endif
