#include <doctest.h>

#include <cmath>

#include "adslie/orbit.hpp"
#include "adslie/rng.hpp"
#include "adslie/su1n.hpp"

using namespace adslie;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

namespace {
const std::complex<double> kI(0.0, 1.0);
const double kPi = 3.1415926535897932384626433832795;
}  // namespace

TEST_CASE("bordered element constructor") {
  const int n = 3;
  // the flat generator
  VectorXcd e1 = VectorXcd::Zero(n);
  e1[0] = 1.0;
  const AlgebraElement a = ceil_element(0.0, e1, MatrixXcd::Zero(n, n), AlgebraTag::SU1n);
  CHECK(validate(a));
  CHECK((a.mat - maximal_flat(AlgebraTag::SU1n, n)[0].mat).cwiseAbs().maxCoeff() <= 1e-15);

  // trace condition separates su from u
  MatrixXcd x = MatrixXcd::Zero(n, n);
  x(0, 0) = -kI;
  CHECK(validate(ceil_element(1.0, VectorXcd::Zero(n), x, AlgebraTag::SU1n)));
  CHECK_THROWS_AS(ceil_element(1.0, VectorXcd::Zero(n), MatrixXcd::Zero(n, n),
                               AlgebraTag::SU1n),
                  ArgumentError);
  CHECK(validate(ceil_element(1.0, VectorXcd::Zero(n), MatrixXcd::Zero(n, n))));  // u(1,n)
  CHECK_THROWS_AS(ceil_element(0.0, e1, MatrixXcd::Identity(n, n)), ArgumentError);
}

TEST_CASE("closed nilpotent exponential entries") {
  const int n = 2;
  // mu = 1, v = 0: identity plus the rank-structure matrix with entries +-i
  const GroupElement g = exp_n_closed_su(1.0, VectorXcd::Zero(n - 1), n);
  MatrixXcd expected = MatrixXcd::Identity(n + 1, n + 1);
  expected(0, 0) += kI;
  expected(0, 1) -= kI;
  expected(1, 0) += kI;
  expected(1, 1) -= kI;
  CHECK((g.mat - expected).cwiseAbs().maxCoeff() <= 1e-15);
  CHECK(validate(g));
}

TEST_CASE("exp identities at zero") {
  CHECK((exp_a_closed(0.0, 3).mat - MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff() == 0);
  CHECK((exp_s_closed(0.0, 0.0, VectorXcd::Zero(2), 3).mat - MatrixXcd::Identity(4, 4))
            .cwiseAbs()
            .maxCoeff() == 0);
}

TEST_CASE("solvable geometries") {
  const SGeometry tr = SGeometry::totally_real(4, 2);
  CHECK(tr.w0_complex_dim() == 1);
  CHECK(static_cast<int>(tr.w_basis().size()) == 2 + 2);
  CHECK(tr.transversal_dim() == 2);
  CHECK(tr.s_subalgebra().dim() == 2 + 4);

  const SGeometry an = SGeometry::with_angle(4, 1, 1, kPi / 3);
  CHECK(static_cast<int>(an.w_basis().size()) == 2 + 2);
  CHECK(an.transversal_dim() == 2);
  // assemble and split round trip
  Rng rng(5);
  const VectorXcd z = rng.gaussian_cvector(1);
  const VectorXd u = rng.gaussian_vector(1);
  const VectorXd v = rng.gaussian_vector(1);
  const VectorXcd vw = an.assemble(z, u, v);
  VectorXcd z2;
  VectorXd u2, v2;
  an.split(vw, z2, u2, v2);
  CHECK((z2 - z).norm() <= 1e-12);
  CHECK((u2 - u).norm() <= 1e-12);
  CHECK((v2 - v).norm() <= 1e-12);

  CHECK_THROWS_AS(SGeometry::totally_real(4, 0), ArgumentError);
  CHECK_THROWS_AS(SGeometry::with_angle(4, 0, 1, kPi / 2), ArgumentError);
}

TEST_CASE("case subalgebra dimensions") {
  const int n = 3;
  CHECK(case_subalgebra(CaseDescriptor::fn_a(n)).dim() == 2 * n);
  CHECK(case_subalgebra(CaseDescriptor::fn_k0(n)).dim() ==
        (n - 1) * (n - 1) + 2 * n - 1);
  CHECK(case_subalgebra(CaseDescriptor::fn_fc(n, 1.0)).dim() == 2 * n);
  for (int k = 0; k <= n - 1; ++k)
    CHECK(case_subalgebra(CaseDescriptor::block_unitary(n, k)).dim() ==
          (k + 1) * (k + 1) + (n - k) * (n - k) - 1);
  CHECK(case_subalgebra(CaseDescriptor::circle_real(n)).dim() ==
        1 + n * (n + 1) / 2);
  CHECK_THROWS_AS(CaseDescriptor::fn_fc(n, 0.0), ArgumentError);
  CHECK_THROWS_AS(CaseDescriptor::block_unitary(n, n), ArgumentError);
}

TEST_CASE("normalizer dimensions match the block closed forms") {
  for (int n = 3; n <= 4; ++n) {
    for (int r = 1; r <= n - 1; ++r) {
      const SGeometry geom = SGeometry::totally_real(n, r);
      const Subalgebra nk = normalizer_in_k(geom.s_subalgebra());
      const int expected = (n - 1 - r) * (n - 1 - r) + r * (r - 1) / 2;
      CHECK(nk.dim() == expected);
    }
    for (int l = 1; 2 * l <= n - 1; ++l) {
      const int k = n - 1 - 2 * l;
      const SGeometry geom = SGeometry::with_angle(n, k, l, kPi / 3);
      const Subalgebra nk = normalizer_in_k(geom.s_subalgebra());
      CHECK(nk.dim() == k * k + l * l);
    }
  }
}

TEST_CASE("transitivity criterion for factors over the flat") {
  const int n = 3;
  // f = a alone: cohomogeneity one
  const Subalgebra fa(AlgebraTag::SU1n, n, maximal_flat(AlgebraTag::SU1n, n));
  CHECK(fn_cohomogeneity_one(fa));
  CHECK(fn_c_parameter(fa) == doctest::Approx(0.0));

  // the full k0 + a factor contains nonzero u(1) parts: transitive
  CHECK_FALSE(fn_cohomogeneity_one(k0a_subalgebra(n)));

  // a k0-only f has trivial projection onto a
  const Subalgebra k0a = k0a_subalgebra(n);
  std::vector<AlgebraElement> k0_only;
  for (const AlgebraElement& x : k0a.basis())
    if (std::abs(x.mat(1, 0).real()) < 1e-12) k0_only.push_back(x);
  CHECK_THROWS_AS(fn_cohomogeneity_one(Subalgebra(AlgebraTag::SU1n, n, k0_only)),
                  ArgumentError);

  // an element outside k0 + a is rejected
  const Subalgebra nil(AlgebraTag::SU1n, n,
                       closed_form_root_space(AlgebraTag::SU1n, n, su_2alpha()));
  CHECK_THROWS_AS(fn_cohomogeneity_one(nil), ArgumentError);
}

TEST_CASE("orbit models on the complex quadric") {
  const int n = 3;
  const AdsPoint e0 = e0_point(n);

  SUBCASE("nilpotent slice through e0 has real dimension 2n") {
    const OrbitModel m = n_orbit_model_su(e0);
    CHECK(static_cast<int>(m.span.size()) == 2 * n);
    CHECK(m.contains(e0));
    // translate by the group: q stays in the slice
    Rng rng(9);
    for (int t = 0; t < 30; ++t) {
      const GroupElement g =
          exp_n_closed_su(rng.uniform(-1, 1), rng.gaussian_cvector(n - 1), n);
      CHECK(m.contains(act(g, e0)));
    }
    // a flat translate leaves it
    CHECK_FALSE(m.contains(act(exp_a_closed(0.7, n), e0)));
  }

  SUBCASE("half slice of the solvable group") {
    const SGeometry geom = SGeometry::totally_real(n, 1);
    const OrbitModel m = s_orbit_model(geom, e0);
    CHECK(m.expected_dim == 2 + static_cast<int>(geom.w_basis().size()) - 0);
    Rng rng(11);
    for (int t = 0; t < 30; ++t) {
      SParams params;
      params.x = rng.uniform(-1.2, 1.2);
      params.mu = rng.uniform(-1.2, 1.2);
      params.z = rng.gaussian_cvector(geom.w0_complex_dim());
      params.u = rng.gaussian_vector(1);
      CHECK(m.contains(act(exp_s_closed(geom, params), e0)));
    }
    // the mirrored point sits on the wrong half
    VectorXcd neg = -e0.z;
    CHECK_FALSE(m.contains(AdsPoint::complex_point(n, neg)));
  }

  SUBCASE("phase-alignment predicate accepts circle multiples of real points") {
    const OrbitModel m = orbit_model(CaseDescriptor::circle_real(n), e0);
    for (double t : {-1.0, 0.3, 2.0})
      for (double th : {0.0, 1.1, 4.0}) {
        VectorXcd z = VectorXcd::Zero(n + 1);
        z[0] = std::exp(kI * th) * std::cosh(t);
        z[1] = std::exp(kI * th) * std::sinh(t);
        CHECK(m.contains(AdsPoint::complex_point(n, z)));
      }
  }

  SUBCASE("block-unitary slice is the lower quadric with signature (2, 2k)") {
    const int k = 1;
    const CaseDescriptor d = CaseDescriptor::block_unitary(n, k);
    const OrbitModel m = orbit_model(d, e0);
    CHECK(static_cast<int>(m.span.size()) == 2 * (k + 1));
    CHECK(m.expected_dim == 2 * k + 1);
    // points of the small quadric lie in the slice, others do not
    Rng rng(15);
    for (int t = 0; t < 10; ++t) {
      const double s = rng.uniform(-1.5, 1.5);
      VectorXcd z = VectorXcd::Zero(n + 1);
      z[0] = std::exp(kI * rng.uniform(0, 2 * kPi)) * std::cosh(s);
      z[1] = std::exp(kI * rng.uniform(0, 2 * kPi)) * std::sinh(s);
      CHECK(m.contains(AdsPoint::complex_point(n, z)));
    }
    CHECK_FALSE(m.contains(sample_ads_point(n, Model::Complex, 77)));
    // induced form on the slice directions has two negative squares
    int neg = 0, pos = 0;
    for (const auto& v : m.span) {
      const double q = model_product(Model::Complex, v, v);
      (q < 0 ? neg : pos) += 1;
    }
    CHECK(neg == 2);
    CHECK(pos == 2 * k);
    // points outside the slice are rejected as base points
    CHECK_THROWS_AS(orbit_model(d, sample_ads_point(n, Model::Complex, 78)),
                    ArgumentError);
  }

  SUBCASE("sphere slice radius extraction") {
    const CaseDescriptor d = CaseDescriptor::totally_real_perp(n, 2);
    const OrbitModel at_base = orbit_model(d, e0);
    CHECK(at_base.radius == doctest::Approx(0.0));
    CHECK(at_base.expected_dim == 2 * n + 1 - d.r);
    // a transversal point at height rho
    const SGeometry geom = SGeometry::totally_real(n, 2);
    VectorXcd z = VectorXcd::Zero(n + 1);
    const double rho = 0.8;
    VectorXcd dir = geom.w_perp_basis()[0];
    z[0] = std::sqrt(1 + rho * rho);
    z.tail(n - 1) = rho * dir;
    const OrbitModel away = orbit_model(d, AdsPoint::complex_point(n, z));
    CHECK(away.radius == doctest::Approx(rho));
    CHECK(away.expected_dim == 2 * n);
  }
}

TEST_CASE("slice solvers recover closed-form parameters") {
  const int n = 3;
  const AdsPoint e0 = e0_point(n);

  SUBCASE("identity solves to zero parameters") {
    const NSolveSu nsol = solve_n_slice_su(e0, e0);
    CHECK(std::abs(nsol.mu) <= 1e-12);
    CHECK(nsol.v.norm() <= 1e-12);
    const SGeometry geom = SGeometry::totally_real(n, 1);
    const SParams ssol = solve_s_slice(geom, e0, e0);
    CHECK(std::abs(ssol.x) <= 1e-12);
    CHECK(std::abs(ssol.mu) <= 1e-12);
  }

  SUBCASE("flat target gives x = -log(a0 - a1)") {
    const SGeometry geom = SGeometry::totally_real(n, 1);
    VectorXcd z = VectorXcd::Zero(n + 1);
    z[0] = std::cosh(1.0);
    z[1] = std::sinh(1.0);
    const SParams sol = solve_s_slice(geom, e0, AdsPoint::complex_point(n, z));
    CHECK(sol.x == doctest::Approx(1.0));
    CHECK(std::abs(sol.mu) <= 1e-12);
  }

  SUBCASE("wrong half is reported") {
    const SGeometry geom = SGeometry::totally_real(n, 1);
    VectorXcd z = VectorXcd::Zero(n + 1);
    z[0] = -std::cosh(1.0);
    z[1] = -std::sinh(1.0);
    CHECK_THROWS_AS(solve_s_slice(geom, e0, AdsPoint::complex_point(n, z)),
                    WrongHalfError);
  }

  SUBCASE("unreachable targets are reported") {
    const AdsPoint q = act(exp_a_closed(0.5, n), e0);  // flat direction leaves the N slice
    CHECK_THROWS_AS(solve_n_slice_su(e0, q), UnreachableError);
  }
}

TEST_CASE("reduction to the canonical generator") {
  const int n = 3;
  Rng rng(21);
  // f gets its own c back, and the tangent spaces agree everywhere
  MatrixXcd blk = MatrixXcd::Zero(n - 1, n - 1);
  blk(0, 0) = -2.0 * kI;
  blk(1, 1) = 0.0;
  VectorXcd e1 = VectorXcd::Zero(n);
  e1[0] = 1.0;
  MatrixXcd x = MatrixXcd::Zero(n, n);
  x(0, 0) = kI;
  x.block(1, 1, n - 1, n - 1) = blk;
  const AlgebraElement xi = ceil_element(1.0, e1, x, AlgebraTag::SU1n);
  const Subalgebra f(AlgebraTag::SU1n, n, {xi});
  CHECK(fn_c_parameter(f) == doctest::Approx(1.0));
  for (int t = 0; t < 50; ++t) {
    const AdsPoint p = sample_ads_point(n, Model::Complex, rng.next_u64());
    CHECK(fn_orbit_equivalence_check(f, 1.0, p));
  }
  // the trivial identity case
  for (int t = 0; t < 5; ++t) {
    const AdsPoint p = sample_ads_point(n, Model::Complex, rng.next_u64());
    const Subalgebra fa(AlgebraTag::SU1n, n, maximal_flat(AlgebraTag::SU1n, n));
    CHECK(fn_orbit_equivalence_check(fa, 0.0, p));
  }
}
