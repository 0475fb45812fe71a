#include "adslie/subalgebra.hpp"

namespace adslie {

Subalgebra::Subalgebra(AlgebraTag tag, int n, std::vector<AlgebraElement> basis,
                       double closure_tol)
    : tag_(tag), n_(n), basis_(std::move(basis)) {
  for (const AlgebraElement& x : basis_) {
    if (x.tag != tag_ || x.n != n_) throw TagError("Subalgebra: mixed elements");
    if (!validate(x, 1e-8))
      throw ArgumentError("Subalgebra: element fails the membership identities");
  }
  double scale = 0.0;
  if (!basis_.empty()) {
    span_.resize(flatten(basis_[0].mat).size(), dim());
    for (int j = 0; j < dim(); ++j) {
      span_.col(j) = flatten(basis_[j].mat);
      scale = std::max(scale, span_.col(j).norm());
    }
    if (numerical_rank(span_) != dim())
      throw ArgumentError("Subalgebra: basis is linearly dependent");
  }
  // brackets of basis pairs scale like the squared basis norm
  for (int i = 0; i < dim(); ++i)
    for (int j = i + 1; j < dim(); ++j) {
      const AlgebraElement b = bracket(basis_[i], basis_[j]);
      if (span_residual(span_, flatten(b.mat), scale * scale) > closure_tol)
        throw ArgumentError("Subalgebra: basis is not closed under bracket");
    }
}

bool Subalgebra::contains(const AlgebraElement& x, double tol) const {
  if (x.tag != tag_ || x.n != n_) return false;
  if (dim() == 0) return flatten(x.mat).norm() <= tol;
  return in_span(span_, flatten(x.mat), tol);
}

bool Subalgebra::same_span(const Subalgebra& other, double tol) const {
  if (other.tag_ != tag_ || other.n_ != n_) return false;
  if (dim() == 0 || other.dim() == 0) return dim() == other.dim();
  const int ra = numerical_rank(span_, tol);
  const int rb = numerical_rank(other.span_, tol);
  if (ra != rb) return false;
  Eigen::MatrixXd joint(span_.rows(), span_.cols() + other.span_.cols());
  joint << span_, other.span_;
  return numerical_rank(joint, tol) == ra;
}

Subalgebra Subalgebra::direct_span(const Subalgebra& a, const Subalgebra& b,
                                   double closure_tol) {
  if (a.tag() != b.tag() || a.n() != b.n())
    throw TagError("direct_span: mixed subalgebras");
  std::vector<AlgebraElement> basis = a.basis();
  basis.insert(basis.end(), b.basis().begin(), b.basis().end());
  return Subalgebra(a.tag(), a.n(), std::move(basis), closure_tol);
}

Subalgebra make_subalgebra(AlgebraTag tag, int n, std::vector<AlgebraElement> basis,
                           double closure_tol) {
  return Subalgebra(tag, n, std::move(basis), closure_tol);
}

}  // namespace adslie
