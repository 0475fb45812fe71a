#ifndef ADSLIE_SUBALGEBRA_HPP
#define ADSLIE_SUBALGEBRA_HPP

#include <vector>

#include "adslie/algebra.hpp"

namespace adslie {

/// An ordered basis of algebra elements, closed under bracket up to a
/// relative residual. Construction verifies closure and membership.
class Subalgebra {
 public:
  Subalgebra(AlgebraTag tag, int n, std::vector<AlgebraElement> basis,
             double closure_tol = 1e-9);

  AlgebraTag tag() const { return tag_; }
  int n() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<AlgebraElement>& basis() const { return basis_; }

  /// Flattened basis matrix (one column per basis element).
  const Eigen::MatrixXd& span_columns() const { return span_; }

  bool contains(const AlgebraElement& x, double tol = 1e-9) const;

  /// Span-level equality with another subalgebra of the same ambient algebra.
  bool same_span(const Subalgebra& other, double tol = 1e-8) const;

  /// Union of the two spans as a new subalgebra (checked for closure).
  static Subalgebra direct_span(const Subalgebra& a, const Subalgebra& b,
                                double closure_tol = 1e-9);

 private:
  AlgebraTag tag_;
  int n_;
  std::vector<AlgebraElement> basis_;
  Eigen::MatrixXd span_;
};

/// Convenience: wrap raw elements, checking closure.
Subalgebra make_subalgebra(AlgebraTag tag, int n, std::vector<AlgebraElement> basis,
                           double closure_tol = 1e-9);

}  // namespace adslie

#endif
