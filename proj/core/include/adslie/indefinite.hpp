#ifndef ADSLIE_INDEFINITE_HPP
#define ADSLIE_INDEFINITE_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <vector>

#include "adslie/errors.hpp"

namespace adslie {

/// Signature (neg, pos) of a real scalar product, negative directions first.
struct Signature {
  int neg = 0;
  int pos = 0;

  int dim() const { return neg + pos; }
};

/// -sum over the first sig.neg coordinates plus the rest.
double scalar_product(const Eigen::VectorXd& x, const Eigen::VectorXd& y, Signature sig);

/// Re(-z0 conj(w0) + sum_{k>=1} z_k conj(w_k)) on C^{1,n}.
double hermitian_real_part(const Eigen::VectorXcd& z, const Eigen::VectorXcd& w);

/// (Re z0, Im z0, Re z1, Im z1, ...): an isometry C^{1,n} -> R^{2,2n}.
Eigen::VectorXd complex_to_real(const Eigen::VectorXcd& z);

/// Inverse of complex_to_real.
Eigen::VectorXcd real_to_complex(const Eigen::VectorXd& x);

/// Ambient vector model of the quadric.
enum class Model { Real, Complex };

/// A point on the quadric <p,p> = -1, in R^{2,n} (real model, n+2 coords)
/// or C^{1,n} (complex model, n+1 coords).
///
/// Real-model coordinates are stored 0-based; written discussion of the
/// real model uses 1-based indices (p1..p_{n+2}) with the two timelike
/// directions first, so the slice conditions x2=x4 / x1=x3 live at stored
/// indices (1,3) and (0,2).
struct AdsPoint {
  Model model = Model::Real;
  int n = 0;
  Eigen::VectorXcd z;  // real model keeps zero imaginary parts

  static AdsPoint real_point(int n, const Eigen::VectorXd& coords);
  static AdsPoint complex_point(int n, const Eigen::VectorXcd& coords);

  int ambient_dim() const { return model == Model::Real ? n + 2 : n + 1; }
  int realified_dim() const { return model == Model::Real ? n + 2 : 2 * (n + 1); }
  /// Dimension of the quadric hypersurface itself.
  int quadric_dim() const { return model == Model::Real ? n + 1 : 2 * n + 1; }

  Signature realified_signature() const {
    return model == Model::Real ? Signature{2, n} : Signature{2, 2 * n};
  }

  double self_product() const;
  double quadric_residual() const;  // |<p,p> + 1|
  Eigen::VectorXd realified() const;
};

/// Indefinite product of two ambient vectors in the given model.
double model_product(Model model, const Eigen::VectorXcd& a, const Eigen::VectorXcd& b);

/// Realify an ambient vector of the given model (identity for the real model).
Eigen::VectorXd realify(Model model, const Eigen::VectorXcd& v);
Eigen::VectorXcd unrealify(Model model, int n, const Eigen::VectorXd& v);

/// Sampling constraint: tie two stored real-model coordinates, x[i] = x[j].
struct CoordEq {
  int i = 0;
  int j = 0;
};

/// Draw a quadric point: gaussian direction, then solve for a free timelike
/// coordinate so that <p,p> = -1; resamples when the quadratic has no root.
/// Constraints are supported in the real model only.
AdsPoint sample_ads_point(int n, Model model, std::uint64_t seed,
                          std::span<const CoordEq> constraints = {});

/// Rank as the number of singular values above tol * sigma_max; 0 for an
/// all-zero family.
int numerical_rank(const Eigen::MatrixXd& columns, double tol = 1e-8);
int numerical_rank(const std::vector<Eigen::VectorXd>& vectors, double tol = 1e-8);

/// Like numerical_rank but fails when the spectrum does not split cleanly:
/// the smallest kept singular value must exceed 1e4 times the largest
/// dropped one.
int numerical_rank_checked(const Eigen::MatrixXd& columns, double tol = 1e-8,
                           double gap = 1e4);

/// Orthogonal projection of v onto the real span of basis, with respect to
/// the standard (definite) real part of the hermitian product.
Eigen::VectorXcd project_onto(const Eigen::VectorXcd& v,
                              std::span<const Eigen::VectorXcd> basis);

/// Projection with respect to an indefinite ambient form; refuses bases on
/// which the induced Gram matrix is not positive definite.
Eigen::VectorXd project_onto(const Eigen::VectorXd& v,
                             std::span<const Eigen::VectorXd> basis, Signature sig);

/// Residual of v relative to the span of the columns (Euclidean least
/// squares), normalized by max(|v|, scale); vectors below the scale count
/// as contained.
double span_residual(const Eigen::MatrixXd& columns, const Eigen::VectorXd& v,
                     double scale = 0.0);

/// True when v lies in the span of the columns up to tol (relative).
bool in_span(const Eigen::MatrixXd& columns, const Eigen::VectorXd& v, double tol = 1e-9,
             double scale = 0.0);

Eigen::MatrixXd columns_of(const std::vector<Eigen::VectorXd>& vectors);

}  // namespace adslie

#endif
