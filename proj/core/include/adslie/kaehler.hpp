#ifndef ADSLIE_KAEHLER_HPP
#define ADSLIE_KAEHLER_HPP

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "adslie/errors.hpp"

namespace adslie {

/// A real-linear subspace of C^m, with the standard definite hermitian
/// product. Keeps an orthonormalized shadow basis for projections.
class RealSubspace {
 public:
  RealSubspace(int ambient_dim, std::vector<Eigen::VectorXcd> basis);

  int ambient_dim() const { return m_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Eigen::VectorXcd>& basis() const { return basis_; }
  const std::vector<Eigen::VectorXcd>& ortho_basis() const { return ortho_; }

  Eigen::VectorXcd project(const Eigen::VectorXcd& v) const;
  bool contains(const Eigen::VectorXcd& v, double tol = 1e-9) const;

 private:
  int m_;
  std::vector<Eigen::VectorXcd> basis_;
  std::vector<Eigen::VectorXcd> ortho_;
};

/// Angle between iv and V, for a nonzero v in V:
/// phi(v) = arccos(|pi_V(iv)| / |v|), clamped to [0, pi/2].
double kaehler_angle(const Eigen::VectorXcd& v, const RealSubspace& V);

/// The common angle when every vector of V attains it, detected via the
/// singular values of the restricted form (u, w) -> Re<iu, w>; nullopt
/// otherwise. 50 random unit combinations are kept as a cross-check.
std::optional<double> constant_kaehler_angle(const RealSubspace& V, double tol = 1e-9);

/// Splitting of g_alpha = C^(n-1) into a complex part, a constant-angle part
/// and its orthogonal complement, with the paired trigonometric bases.
struct WDecomposition {
  int k = 0;       // complex dimension of w0
  int l = 0;       // half the real dimension of w_phi
  double phi = 0;  // common angle of w_phi and w_perp
  RealSubspace w0;
  RealSubspace w_phi;   // basis f_1..f_l, h_1..h_l
  RealSubspace w_perp;  // basis f'_1..f'_l, h'_1..h'_l
  std::vector<Eigen::VectorXcd> f, h, f_prime, h_prime;
};

/// Build w0 = span_C{first k coordinates} and the angled pair
///   f_j = cos(phi/2) a_j + sin(phi/2) i b_j,
///   h_j = cos(phi/2) i a_j + sin(phi/2) b_j,
/// with a_j, b_j the next 2l coordinates of C^(n-1); requires k + 2l = n-1.
/// phi = pi/2 yields the totally real case.
WDecomposition build_w_decomposition(int k, int l, double phi, int n);

}  // namespace adslie

#endif
