#ifndef ADSLIE_ROOTS_HPP
#define ADSLIE_ROOTS_HPP

#include <compare>
#include <vector>

#include "adslie/subalgebra.hpp"

namespace adslie {

/// A restricted root as integer coordinates in the simple-root basis:
/// {alpha1, alpha2} for so(2,n) (B2 pattern), {alpha} for su(1,n) where
/// c1 in {1,2} and c2 = 0.
struct RootLabel {
  int c1 = 0;
  int c2 = 0;

  friend auto operator<=>(const RootLabel&, const RootLabel&) = default;
  RootLabel negated() const { return {-c1, -c2}; }
};

inline RootLabel so_alpha1() { return {1, 0}; }
inline RootLabel so_alpha2() { return {0, 1}; }
inline RootLabel so_alpha1_plus_alpha2() { return {1, 1}; }
inline RootLabel so_alpha1_plus_2alpha2() { return {1, 2}; }
inline RootLabel su_alpha() { return {1, 0}; }
inline RootLabel su_2alpha() { return {2, 0}; }

std::string root_to_string(AlgebraTag tag, RootLabel r);

/// One restricted root space g_lambda.
struct RootSpace {
  RootLabel label;
  Eigen::VectorXd flat_values;          // lambda(H_i) on the stored flat basis
  std::vector<AlgebraElement> basis;    // btheta-orthonormal

  int multiplicity() const { return static_cast<int>(basis.size()); }
};

/// Simultaneous ad-eigensplit of the algebra along a maximal flat.
struct RootDecomposition {
  AlgebraTag tag = AlgebraTag::SO2n;
  int n = 0;
  std::vector<AlgebraElement> flat;     // basis of a
  std::vector<RootSpace> spaces;        // nonzero roots
  std::vector<AlgebraElement> k0;       // g_0 intersect k

  const RootSpace& space(RootLabel label) const;
  bool has_root(RootLabel label) const;
  std::vector<RootLabel> positive_roots() const;
  int zero_dim() const { return static_cast<int>(k0.size() + flat.size()); }
};

/// The explicit maximal flats: span{H_{1,0}, H_{0,1}} in so(2,n) and the
/// single off-diagonal e1 generator in su(1,n).
std::vector<AlgebraElement> maximal_flat(AlgebraTag tag, int n);

/// H_{a,b}: the so(2,n) flat element pairing the timelike plane with the
/// (e3, e4) plane (1-based coordinates).
AlgebraElement so2n_flat_element(double a, double b, int n);

/// Diagonalize ad over a generic flat element and group eigenvectors by their
/// joint eigenvalue tuple. Cached per (algebra, n); the first computation may
/// be repeated concurrently rather than locked.
const RootDecomposition& root_decomposition(AlgebraTag tag, int n, double tol = 1e-6);

/// The explicit parametrized matrices of the positive root spaces; negative
/// roots are obtained by applying the Cartan involution.
std::vector<AlgebraElement> closed_form_root_space(AlgebraTag tag, int n, RootLabel root);

struct IwasawaParts {
  Subalgebra k0;
  Subalgebra a;
  Subalgebra n;
};

/// k0 + a + (sum of positive root spaces).
IwasawaParts iwasawa_parts(const RootDecomposition& dec);

/// Smallest k with s^(k+1) = 0 in the lower central series s^(1) = s,
/// s^(j+1) = [s, s^(j)]; 1 for abelian algebras.
int nilpotency_degree(const Subalgebra& s, double tol = 1e-9);

}  // namespace adslie

#endif
