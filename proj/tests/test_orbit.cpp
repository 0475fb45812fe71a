#include <doctest.h>

#include "adslie/orbit.hpp"
#include "adslie/rng.hpp"
#include "adslie/so2n.hpp"
#include "adslie/su1n.hpp"

using namespace adslie;
using Eigen::VectorXcd;

namespace {
const std::complex<double> kI(0.0, 1.0);
}

TEST_CASE("tangent spaces are tangent to the quadric") {
  Rng rng(3);
  const int n = 4;
  const Subalgebra so(AlgebraTag::SO2n, n, standard_basis(AlgebraTag::SO2n, n));
  for (int t = 0; t < 50; ++t) {
    const AdsPoint p = sample_ads_point(n, Model::Real, rng.next_u64());
    const Eigen::MatrixXd ts = tangent_space(so, p);
    for (int j = 0; j < ts.cols(); ++j) {
      const VectorXcd v = unrealify(p.model, n, ts.col(j));
      CHECK(std::abs(model_product(p.model, v, p.z)) <= 1e-10 * std::max(1.0, ts.col(j).norm()));
    }
    // the full isometry algebra is transitive
    CHECK(orbit_dim(so, p) == n + 1);
  }
  const Subalgebra su(AlgebraTag::SU1n, 3, standard_basis(AlgebraTag::SU1n, 3));
  for (int t = 0; t < 20; ++t) {
    const AdsPoint p = sample_ads_point(3, Model::Complex, rng.next_u64());
    CHECK(orbit_dim(su, p) == 7);
  }
}

TEST_CASE("orbit_dim of the trivial algebra is zero") {
  const Subalgebra zero(AlgebraTag::SO2n, 3, {});
  const AdsPoint p = sample_ads_point(3, Model::Real, 5);
  CHECK(orbit_dim(zero, p) == 0);
}

TEST_CASE("orbit dimension is constant along an orbit") {
  Rng rng(7);
  const int n = 4;
  const Subalgebra nil = iwasawa_n_so2n(n);
  for (int t = 0; t < 20; ++t) {
    const AdsPoint p = sample_ads_point(n, Model::Real, rng.next_u64());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n + 2, n + 2);
    for (const AlgebraElement& b : nil.basis()) m += rng.uniform(-1, 1) * b.mat;
    const GroupElement g = exp_series(AlgebraElement(AlgebraTag::SO2n, n, m));
    CHECK(orbit_dim(nil, act(g, p)) == orbit_dim(nil, p));
  }
}

TEST_CASE("cohomogeneity aggregates sampled dimensions") {
  const int n = 4;
  const CohomogeneityResult free_run = cohomogeneity(iwasawa_n_so2n(n), 60, 11);
  CHECK(free_run.cohomogeneity == 1);
  CHECK(free_run.max_dim == n);
  // with constrained draws the singular dimension is observed as well
  const std::vector<std::vector<CoordEq>> loci = {{{1, 3}}};
  const CohomogeneityResult with_locus = cohomogeneity(iwasawa_n_so2n(n), 60, 11, loci, 20);
  CHECK(with_locus.dims_observed == std::vector<int>{n - 1, n});
}

TEST_CASE("fiber containment") {
  const int n = 2;
  // the circle algebra alone contains its own fibers
  std::vector<AlgebraElement> circle = {
      AlgebraElement(AlgebraTag::U1n, n, kI * Eigen::MatrixXcd::Identity(n + 1, n + 1))};
  const Subalgebra s1(AlgebraTag::U1n, n, circle);
  Rng rng(13);
  for (int t = 0; t < 20; ++t)
    CHECK(fiber_contained(s1, sample_ads_point(n, Model::Complex, rng.next_u64())));

  // the flat alone does not: a . e0 = R e1 misses i e0
  std::vector<AlgebraElement> flat = maximal_flat(AlgebraTag::SU1n, n);
  CHECK_FALSE(fiber_contained(Subalgebra(AlgebraTag::SU1n, n, flat), e0_point(n)));

  CHECK_THROWS_AS(fiber_contained(iwasawa_n_so2n(3), sample_ads_point(3, Model::Real, 1)),
                  UnsupportedError);
}

TEST_CASE("invariant subspaces") {
  const int n = 3;
  const Subalgebra nil = iwasawa_n_so2n(n);
  // the whole ambient space is always invariant
  std::vector<VectorXcd> all;
  for (int j = 0; j < n + 2; ++j) {
    VectorXcd e = VectorXcd::Zero(n + 2);
    e[j] = 1.0;
    all.push_back(e);
  }
  CHECK(invariant_subspace(nil, all));
  // the x2 = x4 direction space is invariant under the nilpotent factor
  std::vector<VectorXcd> w;
  {
    VectorXcd e = VectorXcd::Zero(n + 2);
    e[1] = 1.0;
    e[3] = 1.0;
    w.push_back(e);
    for (int j : {0, 2, 4}) {
      VectorXcd f = VectorXcd::Zero(n + 2);
      f[j] = 1.0;
      w.push_back(f);
    }
  }
  CHECK(invariant_subspace(nil, w));
  // a single spacelike axis is not
  CHECK_FALSE(invariant_subspace(nil, std::vector<VectorXcd>{all[4]}));
}

TEST_CASE("geodesic pushout stays on the quadric") {
  Rng rng(17);
  const int n = 3;
  for (int t = 0; t < 40; ++t) {
    const AdsPoint p = sample_ads_point(n, Model::Real, rng.next_u64());
    // build a unit spacelike normal by projecting a random vector
    Eigen::VectorXd raw = rng.gaussian_vector(n + 2);
    const Eigen::VectorXd pr = p.realified();
    Eigen::VectorXd metric = Eigen::VectorXd::Ones(n + 2);
    metric[0] = metric[1] = -1.0;
    const double coeff = (metric.asDiagonal() * pr).dot(raw) / -1.0;  // <p,p> = -1
    raw -= coeff * pr;  // now <raw, p> = 0
    const double norm2 = raw.dot(metric.asDiagonal() * raw);
    if (norm2 <= 1e-6) continue;
    const VectorXcd xi = (raw / std::sqrt(norm2)).cast<std::complex<double>>();
    const AdsPoint q = geodesic_exp(p, xi, 0.8);
    CHECK(q.quadric_residual() <= 1e-12);
    CHECK((geodesic_exp(p, xi, 0.0).z - p.z).norm() <= 1e-15);
  }
  // hyperbolic combination along the flat orbit through e0
  const AdsPoint e0 = e0_point(2);
  VectorXcd e1 = VectorXcd::Zero(3);
  e1[1] = 1.0;
  const AdsPoint moved = geodesic_exp(e0, e1, 1.0);
  CHECK((moved.z - (act(exp_a_closed(1.0, 2), e0)).z).norm() <= 1e-12);
  CHECK_THROWS_AS(geodesic_exp(e0, (2.0 * e1).eval(), 1.0), ArgumentError);
}

TEST_CASE("tube sampling around a block-unitary base orbit") {
  const int n = 2;
  const Subalgebra h = case_subalgebra(CaseDescriptor::block_unitary(n, 0));
  const auto points = tube_sample(h, e0_point(n), 1.0, 20, 19);
  CHECK(points.size() == 20);
  for (const AdsPoint& p : points) {
    CHECK(p.quadric_residual() <= 1e-10);
    CHECK(orbit_dim(h, p) == 2 * n);
  }
  // radius to zero converges to the base point
  const auto near = tube_sample(h, e0_point(n), 1e-8, 5, 23);
  for (const AdsPoint& p : near) CHECK((p.z - e0_point(n).z).norm() <= 1e-7);
  // a principal base point is rejected
  const AdsPoint generic = sample_ads_point(n, Model::Complex, 29);
  CHECK_THROWS_AS(tube_sample(h, generic, 0.5, 3, 31), ArgumentError);
}
