#ifndef ADSLIE_SO2N_HPP
#define ADSLIE_SO2N_HPP

#include "adslie/orbit.hpp"
#include "adslie/roots.hpp"
#include "adslie/su1n.hpp"

namespace adslie {

/// Coordinates of a nilpotent element of so(2,n): b and a weight the rank-one
/// root directions (long and longest), v and w the two multiplicity-(n-2)
/// families.
struct NElement {
  double a = 0;
  double b = 0;
  Eigen::VectorXd v;
  Eigen::VectorXd w;
};

/// Assemble the nilpotent element; len(v) = len(w) = n-2.
AlgebraElement n_element(const NElement& coords, int n);
AlgebraElement n_element(double a, double b, const Eigen::VectorXd& v,
                         const Eigen::VectorXd& w, int n);

/// Closed-form exponential of n_element(a, 0, v, 0): the form that fixes the
/// x2 = x4 slice (1-based coordinates).
GroupElement exp_n_singular(double a, const Eigen::VectorXd& v, int n);

/// Closed-form exponential of n_element(a, b, 0, w).
GroupElement exp_n_principal(double a, double b, const Eigen::VectorXd& w, int n);

/// The nilpotent Iwasawa factor of so(2,n) from the explicit root matrices.
Subalgebra iwasawa_n_so2n(int n);
/// a + n.
Subalgebra an_subalgebra(int n);
/// line R H_{a,b} + n (closed for every (a,b)).
Subalgebra line_plus_n(double a, double b, int n);

/// Leaf invariants of a real-model point: r = x2 - x4 and s = x1 - x3
/// (1-based coordinates).
double leaf_r(const AdsPoint& p);
double leaf_s(const AdsPoint& p);

/// The orbit of the nilpotent group through p: an affine slice of codimension
/// one (x2 = x4 directions) at principal points, codimension two on the
/// singular locus. Leaf invariants are recorded on the model.
struct So2nOrbitModel {
  bool principal = true;
  AdsPoint base;
  std::vector<Eigen::VectorXd> span;  // slice directions in R^{n+2}
  double r = 0;                       // x2 - x4, exact invariant
  double s = 0;                       // x1 - x3, singular parameter
  int expected_dim = 0;

  bool contains(const AdsPoint& q, double tol = 1e-9) const;
};

So2nOrbitModel n_orbit_model(const AdsPoint& p);

/// Parameters mapping p to q inside the slice of n_orbit_model(p).
NElement solve_n_element_so(const AdsPoint& p, const AdsPoint& q, double tol = 1e-9);

/// Acting groups whose leaf structure is classified.
enum class So2nGroup { N, A1N, AN, Qempty, Q1, Q2 };

const char* group_name(So2nGroup g);

/// The subalgebra of a leaf-classified group.
Subalgebra group_subalgebra(So2nGroup g, int n);

/// Orbit-foliation label of a point under a group action: principal leaves
/// carry the exact invariant r where the group preserves it, merged leaves
/// only a sign.
struct LeafId {
  So2nGroup group = So2nGroup::N;
  enum class Label {
    Principal,       // carries value r
    PrincipalPlus,   // r > 0 leaves merged
    PrincipalMinus,
    Singular,        // carries value s
    SingularPlus,    // s > 0 leaves merged
    SingularMinus,
    All              // transitive action
  };
  Label label = Label::All;
  double value = 0;

  bool same_leaf(const LeafId& other, double tol = 1e-9) const;
};

std::string leaf_to_string(const LeafId& id);

LeafId leaf_id(So2nGroup g, const AdsPoint& p, double tol = 1e-9);

/// Langlands decomposition q = l + n of a parabolic subalgebra of so(2,n),
/// for a proper subset of the two simple roots.
struct LanglandsDecomposition {
  bool has_alpha1 = false;  // membership of the two simple roots in Phi
  bool has_alpha2 = false;
  Subalgebra l;
  Subalgebra n;
  Subalgebra q;
};

enum class ParabolicSubset { Empty, Alpha1, Alpha2 };

LanglandsDecomposition parabolic(ParabolicSubset phi, int n);

/// The three conjugacy classes as acting subalgebras: q_empty = k0 + a + n,
/// q1 = q_empty + g_{-alpha2}, q2 = q_empty + g_{-alpha1}.
Subalgebra parabolic_q(So2nGroup which, int n);

}  // namespace adslie

#endif
