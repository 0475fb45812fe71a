#include <doctest.h>

#include <cmath>

#include "adslie/kaehler.hpp"
#include "adslie/rng.hpp"

using namespace adslie;
using Eigen::VectorXcd;

namespace {
const std::complex<double> kI(0.0, 1.0);
const double kPi = 3.1415926535897932384626433832795;

VectorXcd e_cx(int dim, int i) {
  VectorXcd v = VectorXcd::Zero(dim);
  v[i] = 1.0;
  return v;
}
}  // namespace

TEST_CASE("complex lines have angle zero, totally real planes pi/2") {
  // span_C{e0} in C^3
  RealSubspace line(3, {e_cx(3, 0), kI * e_cx(3, 0)});
  Rng rng(11);
  for (int t = 0; t < 10; ++t) {
    const std::complex<double> c(rng.gaussian(), rng.gaussian());
    CHECK(kaehler_angle((c * e_cx(3, 0)).eval(), line) <= 1e-9);
  }
  CHECK(constant_kaehler_angle(line).value() == doctest::Approx(0.0));

  RealSubspace plane(3, {e_cx(3, 0), e_cx(3, 1)});
  CHECK(kaehler_angle(e_cx(3, 0), plane) == doctest::Approx(kPi / 2));
  CHECK(constant_kaehler_angle(plane).value() == doctest::Approx(kPi / 2));

  RealSubspace triple(4, {e_cx(4, 0), e_cx(4, 1), e_cx(4, 2)});
  CHECK(constant_kaehler_angle(triple).value() == doctest::Approx(kPi / 2));
}

TEST_CASE("angle errors") {
  RealSubspace line(3, {e_cx(3, 0)});
  CHECK_THROWS_AS(kaehler_angle(e_cx(3, 1), line), ArgumentError);  // not in V
  CHECK_THROWS_AS(kaehler_angle(VectorXcd::Zero(3).eval(), line), ArgumentError);
}

TEST_CASE("mixed principal angles yield no constant angle") {
  // one complex direction plus one totally real one
  RealSubspace mixed(3, {e_cx(3, 0), kI * e_cx(3, 0), e_cx(3, 1)});
  CHECK_FALSE(constant_kaehler_angle(mixed).has_value());
}

TEST_CASE("built pair decomposition attains the requested angle") {
  const int n = 6;
  for (double phi : {kPi / 6, kPi / 4, kPi / 3}) {
    const WDecomposition dec = build_w_decomposition(1, 2, phi, n);
    CHECK(dec.w_phi.dim() == 4);
    CHECK(dec.w_perp.dim() == 4);
    CHECK(constant_kaehler_angle(dec.w_phi).value() == doctest::Approx(phi).epsilon(1e-9));
    CHECK(constant_kaehler_angle(dec.w_perp).value() == doctest::Approx(phi).epsilon(1e-9));
    CHECK(kaehler_angle(dec.f[0], dec.w_phi) == doctest::Approx(phi).epsilon(1e-9));
    // paired bases are hermitian-orthogonal where claimed
    for (int j = 0; j < dec.l; ++j)
      CHECK(std::abs(dec.f[j].dot(dec.f_prime[j])) <= 1e-12);
  }
  // the pi/2 construction reproduces a totally real complement
  const WDecomposition flat = build_w_decomposition(1, 2, kPi / 2, n);
  CHECK(constant_kaehler_angle(flat.w_perp).value() == doctest::Approx(kPi / 2));
  CHECK_THROWS_AS(build_w_decomposition(2, 2, kPi / 3, 6), ArgumentError);
}

TEST_CASE("kaehler angle is unitary and scaling invariant") {
  Rng rng(13);
  const WDecomposition dec = build_w_decomposition(0, 2, kPi / 3, 5);
  // scaling invariance on random members of w_phi
  for (int t = 0; t < 20; ++t) {
    VectorXcd v = VectorXcd::Zero(4);
    for (const auto& b : dec.w_phi.basis()) v += rng.gaussian() * b;
    if (v.norm() < 1e-6) continue;
    const double a1 = kaehler_angle(v, dec.w_phi);
    const double a2 = kaehler_angle((rng.uniform(0.1, 3.0) * v).eval(), dec.w_phi);
    CHECK(a1 == doctest::Approx(a2).epsilon(1e-9));
  }
  // a diagonal-phase unitary fixing the pairing leaves the angle unchanged:
  // multiply both paired coordinates by the same phase
  const std::complex<double> phase = std::exp(kI * 0.77);
  std::vector<VectorXcd> rotated;
  for (const auto& b : dec.w_phi.basis()) rotated.push_back(phase * b);
  RealSubspace twisted(4, rotated);
  CHECK(constant_kaehler_angle(twisted).value() ==
        doctest::Approx(kPi / 3).epsilon(1e-9));
}
