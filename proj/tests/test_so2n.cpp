#include <doctest.h>

#include "adslie/rng.hpp"
#include "adslie/so2n.hpp"

using namespace adslie;
using Eigen::VectorXd;

TEST_CASE("nilpotent element assembly") {
  const int n = 4;
  CHECK(flatten(n_element(0, 0, VectorXd::Zero(n - 2), VectorXd::Zero(n - 2), n).mat)
            .norm() == 0.0);
  // (1,0,0,0) is the sum of the two rank-one generators
  const AlgebraElement x = n_element(1, 0, VectorXd::Zero(n - 2), VectorXd::Zero(n - 2), n);
  CHECK(x.mat(0, 1).real() == doctest::Approx(1.0));
  CHECK(x.mat(2, 3).real() == doctest::Approx(-1.0));
  CHECK(validate(x));
  // membership in the nilpotent span: rank unchanged when appended
  const Subalgebra nil = iwasawa_n_so2n(n);
  CHECK(nil.contains(x));
  Rng rng(3);
  CHECK(nil.contains(n_element(rng.uniform(-1, 1), rng.uniform(-1, 1),
                               rng.gaussian_vector(n - 2), rng.gaussian_vector(n - 2), n)));
  CHECK_THROWS_AS(n_element(0, 0, VectorXd::Zero(n - 1), VectorXd::Zero(n - 2), n),
                  ArgumentError);
}

TEST_CASE("singular exponential entries") {
  const int n = 4;
  Rng rng(5);
  const VectorXd v = rng.gaussian_vector(n - 2);
  const GroupElement g = exp_n_singular(0.4, v, n);
  CHECK(g.mat(0, 0).real() == doctest::Approx(1.0 + 0.5 * v.squaredNorm()));
  CHECK(validate(g));
  CHECK((exp_n_singular(0, VectorXd::Zero(n - 2), n).mat -
         Eigen::MatrixXcd::Identity(n + 2, n + 2))
            .cwiseAbs()
            .maxCoeff() == 0.0);
}

TEST_CASE("nilpotent orbit models split by the slice invariant") {
  const int n = 3;
  // e1 (first basis vector, timelike) is a singular point
  VectorXd e1 = VectorXd::Zero(n + 2);
  e1[0] = 1.0;
  const So2nOrbitModel singular = n_orbit_model(AdsPoint::real_point(n, e1));
  CHECK_FALSE(singular.principal);
  CHECK(singular.expected_dim == n - 1);
  CHECK(static_cast<int>(singular.span.size()) == n);

  VectorXd p(n + 2);
  p << std::sqrt(2.0), 0, 0, 1, 0;
  const So2nOrbitModel principal = n_orbit_model(AdsPoint::real_point(n, p));
  CHECK(principal.principal);
  CHECK(principal.expected_dim == n);
  CHECK(static_cast<int>(principal.span.size()) == n + 1);
  CHECK(principal.r == doctest::Approx(-1.0));

  // measured orbit dimensions match the models
  const Subalgebra nil = iwasawa_n_so2n(n);
  CHECK(orbit_dim(nil, AdsPoint::real_point(n, e1)) == n - 1);
  CHECK(orbit_dim(nil, AdsPoint::real_point(n, p)) == n);
}

TEST_CASE("slice solvers recover group elements") {
  Rng rng(7);
  for (int n = 3; n <= 5; ++n) {
    for (int t = 0; t < 100; ++t) {
      const AdsPoint p = sample_ads_point(n, Model::Real, rng.next_u64());
      const GroupElement g = exp_n_principal(rng.uniform(-1, 1), rng.uniform(-1, 1),
                                             rng.gaussian_vector(n - 2), n);
      const AdsPoint q = act(g, p);
      const NElement sol = solve_n_element_so(p, q);
      const AdsPoint image = act(exp_n_principal(sol.a, sol.b, sol.w, n), p);
      CHECK((image.realified() - q.realified()).norm() <= 1e-9);
      CHECK(sol.v.norm() == 0.0);
    }
    const std::vector<CoordEq> locus = {{1, 3}};
    for (int t = 0; t < 100; ++t) {
      const AdsPoint p = sample_ads_point(n, Model::Real, rng.next_u64(), locus);
      const GroupElement g = exp_n_singular(rng.uniform(-1, 1),
                                            rng.gaussian_vector(n - 2), n);
      const AdsPoint q = act(g, p);
      const NElement sol = solve_n_element_so(p, q);
      CHECK((act(exp_n_singular(sol.a, sol.v, n), p).realified() - q.realified()).norm() <=
            1e-9);
    }
  }
  // q = p solves to the zero element
  const AdsPoint p = sample_ads_point(3, Model::Real, 99);
  const NElement id = solve_n_element_so(p, p);
  CHECK(std::abs(id.a) <= 1e-12);
  CHECK(std::abs(id.b) <= 1e-12);
}

TEST_CASE("degenerate points are flagged, not accepted") {
  // a vector with x2 = x4 and x1 = x3 violates the quadric; the solver
  // refuses the pair (r = s = 0 cannot happen on the quadric)
  const int n = 3;
  VectorXd bad(n + 2);
  bad << 1, 1, 1, 1, 1;  // <x,x> = +1, off the quadric
  const AdsPoint p = AdsPoint::real_point(n, bad);
  CHECK(p.quadric_residual() > 1.0);
  CHECK_THROWS_AS(solve_n_element_so(p, p), DegeneracyError);
}

TEST_CASE("leaf labels") {
  const int n = 3;
  VectorXd pr(n + 2);
  pr << 1, 1, 0, 0, 1;  // r = 1, s = 1
  const AdsPoint p = AdsPoint::real_point(n, pr);
  CHECK(p.quadric_residual() <= 1e-12);

  CHECK(leaf_id(So2nGroup::Q2, p).label == LeafId::Label::All);
  CHECK(leaf_id(So2nGroup::N, p).label == LeafId::Label::Principal);
  CHECK(leaf_id(So2nGroup::N, p).value == doctest::Approx(1.0));
  CHECK(leaf_id(So2nGroup::AN, p).label == LeafId::Label::PrincipalPlus);

  VectorXd sr(n + 2);
  sr << -std::sqrt(2.0), 0.5, 0, 0.5, 1;  // r = 0, s = -sqrt(2)
  const AdsPoint q = AdsPoint::real_point(n, sr);
  CHECK(q.quadric_residual() <= 1e-12);
  CHECK(leaf_id(So2nGroup::A1N, q).label == LeafId::Label::SingularMinus);
  CHECK(leaf_id(So2nGroup::Qempty, q).label == LeafId::Label::SingularMinus);
  CHECK(leaf_id(So2nGroup::N, q).label == LeafId::Label::Singular);

  // merged leaves compare signs only
  LeafId a = leaf_id(So2nGroup::AN, p);
  VectorXd pr2(n + 2);
  pr2 << 1, 2, 0, 0, 2;  // r = 2, same signs, still on the quadric
  const AdsPoint p2 = AdsPoint::real_point(n, pr2);
  CHECK(p2.quadric_residual() <= 1e-12);
  CHECK(a.same_leaf(leaf_id(So2nGroup::AN, p2)));
  CHECK_FALSE(leaf_id(So2nGroup::N, p).same_leaf(leaf_id(So2nGroup::N, p2)));
}

TEST_CASE("parabolic subalgebras") {
  const int n = 3;
  const LanglandsDecomposition empty = parabolic(ParabolicSubset::Empty, n);
  CHECK(empty.q.dim() == 6);
  CHECK(empty.l.dim() == 2);
  CHECK(empty.n.dim() == 4);
  CHECK(nilpotency_degree(empty.n) == 3);

  const LanglandsDecomposition q1 = parabolic(ParabolicSubset::Alpha2, n);
  CHECK(q1.q.dim() == 7);
  const LanglandsDecomposition q2 = parabolic(ParabolicSubset::Alpha1, n);
  CHECK(q2.q.dim() == 7);

  // q1 = q_empty + g_{-alpha2} as spans
  std::vector<AlgebraElement> ext = empty.q.basis();
  for (AlgebraElement& x :
       closed_form_root_space(AlgebraTag::SO2n, n, so_alpha2().negated()))
    ext.push_back(std::move(x));
  CHECK(q1.q.same_span(Subalgebra(AlgebraTag::SO2n, n, ext)));
}

TEST_CASE("parabolic actions: transitivity of the second class") {
  const int n = 3;
  Rng rng(13);
  const Subalgebra q2 = parabolic_q(So2nGroup::Q2, n);
  const std::vector<CoordEq> locus = {{1, 3}};
  for (int t = 0; t < 30; ++t) {
    const AdsPoint p = sample_ads_point(n, Model::Real, rng.next_u64(),
                                        t % 3 == 0 ? std::span<const CoordEq>(locus)
                                                   : std::span<const CoordEq>());
    CHECK(orbit_dim(q2, p) == n + 1);
  }
  const Subalgebra q1 = parabolic_q(So2nGroup::Q1, n);
  const Subalgebra qe = parabolic_q(So2nGroup::Qempty, n);
  for (int t = 0; t < 10; ++t) {
    const AdsPoint p = sample_ads_point(n, Model::Real, rng.next_u64(), locus);
    CHECK(orbit_dim(q1, p) == n);
    CHECK(orbit_dim(qe, p) == n);
  }
}
