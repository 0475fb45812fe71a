#include <doctest.h>

#include "adslie/indefinite.hpp"
#include "adslie/rng.hpp"

using namespace adslie;
using Eigen::VectorXcd;
using Eigen::VectorXd;

namespace {
const std::complex<double> kI(0.0, 1.0);

VectorXd e_real(int dim, int i) {
  VectorXd v = VectorXd::Zero(dim);
  v[i] = 1.0;
  return v;
}

VectorXcd e_cx(int dim, int i) {
  VectorXcd v = VectorXcd::Zero(dim);
  v[i] = 1.0;
  return v;
}
}  // namespace

TEST_CASE("scalar product on R^{2,3}") {
  const Signature sig{2, 3};
  CHECK(scalar_product(e_real(5, 0), e_real(5, 0), sig) == doctest::Approx(-1.0));
  CHECK(scalar_product(e_real(5, 0), e_real(5, 2), sig) == doctest::Approx(0.0));
  VectorXd v(5);
  v << 1, 0, 1, 0, 0;
  CHECK(scalar_product(v, v, sig) == doctest::Approx(0.0));
  CHECK_THROWS_AS(scalar_product(e_real(4, 0), e_real(5, 0), sig), DimensionError);
}

TEST_CASE("hermitian real part") {
  CHECK(hermitian_real_part(e_cx(3, 0), e_cx(3, 0)) == doctest::Approx(-1.0));
  CHECK(hermitian_real_part(e_cx(3, 0), kI * e_cx(3, 0)) == doctest::Approx(0.0));
  VectorXcd z(3);
  z << 1, 1, 1;
  CHECK(hermitian_real_part(z, z) == doctest::Approx(1.0));
}

TEST_CASE("complex_to_real layout and isometry") {
  CHECK(complex_to_real(e_cx(3, 0)) == e_real(6, 0));
  CHECK(complex_to_real((kI * e_cx(3, 1)).eval()) == e_real(6, 3));

  // form agreement on random pairs: the realification is an isometry
  Rng rng(2024);
  const Signature sig{2, 4};
  for (int t = 0; t < 100; ++t) {
    const VectorXcd z = rng.gaussian_cvector(3);
    const VectorXcd w = rng.gaussian_cvector(3);
    const double lhs = hermitian_real_part(z, w);
    const double rhs = scalar_product(complex_to_real(z), complex_to_real(w), sig);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
    CHECK((real_to_complex(complex_to_real(z)) - z).norm() == doctest::Approx(0.0));
  }
}

TEST_CASE("quadric sampling") {
  // determinism
  const AdsPoint a = sample_ads_point(3, Model::Real, 99);
  const AdsPoint b = sample_ads_point(3, Model::Real, 99);
  CHECK((a.z - b.z).norm() == 0.0);

  // membership across both models
  for (int t = 0; t < 1000; ++t) {
    const AdsPoint p = sample_ads_point(3, Model::Real, Rng::derive(5, 0, t));
    CHECK(p.quadric_residual() <= 1e-12);
  }
  for (int t = 0; t < 200; ++t) {
    const AdsPoint p = sample_ads_point(2, Model::Complex, Rng::derive(5, 1, t));
    CHECK(p.quadric_residual() <= 1e-12);
  }

  // constrained draws land on the tied-coordinate locus
  const CoordEq eq[] = {{1, 3}};
  for (int t = 0; t < 50; ++t) {
    const AdsPoint p = sample_ads_point(3, Model::Real, Rng::derive(5, 2, t), eq);
    CHECK(std::abs(p.z[1].real() - p.z[3].real()) <= 1e-12);
    CHECK(p.quadric_residual() <= 1e-12);
  }

  const CoordEq bad[] = {{0, 9}};
  CHECK_THROWS_AS(sample_ads_point(3, Model::Real, 1, bad), ConstraintError);
}

TEST_CASE("numerical rank") {
  std::vector<VectorXd> fam = {e_real(3, 0), e_real(3, 1), e_real(3, 0) + e_real(3, 1)};
  CHECK(numerical_rank(fam) == 2);
  CHECK(numerical_rank(std::vector<VectorXd>{VectorXd::Zero(3)}) == 0);

  // invariance under permutation and scaling
  std::vector<VectorXd> scaled = {3.0 * fam[2], -0.5 * fam[0], 7.0 * fam[1]};
  CHECK(numerical_rank(scaled) == 2);

  // gap guard trips when the kept and dropped values are too close
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(3, 3);
  m(0, 0) = 1.0;
  m(1, 1) = 1e-7;
  m(2, 2) = 1e-9;
  CHECK_THROWS_AS(numerical_rank_checked(m), DegeneracyError);
  CHECK(numerical_rank(m) == 2);
}

TEST_CASE("projection onto a real span") {
  // v in V is fixed, v orthogonal to V dies
  std::vector<VectorXcd> v_basis = {e_cx(2, 0)};
  const VectorXcd inside = project_onto(e_cx(2, 0), v_basis);
  CHECK((inside - e_cx(2, 0)).norm() <= 1e-12);
  CHECK(project_onto(e_cx(2, 1), v_basis).norm() <= 1e-12);

  // e2 + i e3 onto span_R{e2} keeps the real part only
  VectorXcd v = e_cx(2, 0) + kI * e_cx(2, 1);
  CHECK((project_onto(v, v_basis) - e_cx(2, 0)).norm() <= 1e-12);

  // idempotence and linearity
  Rng rng(7);
  std::vector<VectorXcd> basis = {rng.gaussian_cvector(4), rng.gaussian_cvector(4)};
  for (int t = 0; t < 20; ++t) {
    const VectorXcd x = rng.gaussian_cvector(4);
    const VectorXcd px = project_onto(x, basis);
    CHECK((project_onto(px, basis) - px).norm() <= 1e-10 * std::max(1.0, px.norm()));
  }

  // indefinite ambient form is refused when the Gram matrix is not definite
  std::vector<VectorXd> timelike = {e_real(5, 0)};
  CHECK_THROWS_AS(project_onto(e_real(5, 2), timelike, Signature{2, 3}), UnsupportedError);
}
