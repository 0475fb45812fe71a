#ifndef ADSLIE_ORBIT_HPP
#define ADSLIE_ORBIT_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "adslie/subalgebra.hpp"

namespace adslie {

/// Realified tangent vectors {X . p : X in basis} as columns. Every column is
/// orthogonal to p in the ambient form (tangency to the quadric).
Eigen::MatrixXd tangent_space(const Subalgebra& h, const AdsPoint& p);

/// Rank of the tangent space with the degeneracy guard.
int orbit_dim(const Subalgebra& h, const AdsPoint& p, double tol = 1e-8);

struct CohomogeneityResult {
  int cohomogeneity = 0;
  int max_dim = 0;
  std::vector<int> dims_observed;  // distinct, sorted
  int degenerate_samples = 0;      // rank splits that failed the guard
};

/// dim(quadric) minus the maximal sampled orbit dimension. Constrained draws
/// visit measure-zero loci (e.g. the x2 = x4 slice) deliberately; each
/// constraint in `loci` is sampled `per_locus` times on top of `samples`
/// unconstrained points.
CohomogeneityResult cohomogeneity(const Subalgebra& h, int samples, std::uint64_t seed,
                                  std::span<const std::vector<CoordEq>> loci = {},
                                  int per_locus = 20);

/// True when the realified vector i.p lies in the tangent space of h at p
/// (infinitesimal circle-fiber containment). Complex model only.
bool fiber_contained(const Subalgebra& h, const AdsPoint& p, double tol = 1e-8);

/// True when X . w stays in span(W) for every basis X of h and w of W.
/// W is given in the ambient model representation; its real span is used.
bool invariant_subspace(const Subalgebra& h, std::span<const Eigen::VectorXcd> w_basis,
                        double tol = 1e-8);

/// cosh(r) p + sinh(r) xi for a unit spacelike normal xi; lands exactly on
/// the quadric.
AdsPoint geodesic_exp(const AdsPoint& p, const Eigen::VectorXcd& xi, double r);

/// Unit normals to the orbit h.p inside the tangent space of the quadric,
/// pushed out to radius r. Requires the induced form on the normal space to
/// be positive definite.
std::vector<AdsPoint> tube_sample(const Subalgebra& h, const AdsPoint& singular_p,
                                  double r, int count, std::uint64_t seed);

}  // namespace adslie

#endif
