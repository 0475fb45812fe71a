#include "adslie/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "adslie/kaehler.hpp"
#include "adslie/orbit.hpp"
#include "adslie/rng.hpp"
#include "adslie/so2n.hpp"
#include "adslie/su1n.hpp"

namespace adslie {

namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;
using std::complex;

constexpr complex<double> kI(0.0, 1.0);
constexpr double kPi = 3.1415926535897932384626433832795;

struct Checker {
  const SuiteConfig& cfg;
  std::vector<CheckResult> results;

  double tol(double fallback) const { return cfg.tol > 0.0 ? cfg.tol : fallback; }

  void run(const std::string& name, const std::function<void(CheckResult&)>& body) {
    CheckResult r;
    r.name = name;
    try {
      body(r);
    } catch (const std::exception& e) {
      r.status = CheckResult::Status::Error;
      r.observed = e.what();
    }
    results.push_back(std::move(r));
  }

  static void expect(CheckResult& r, bool ok, const std::string& observed,
                     const std::string& expected) {
    if (!ok) r.status = CheckResult::Status::Fail;
    if (r.observed.empty()) r.observed = observed;
    if (r.expected.empty()) r.expected = expected;
    if (!ok) {
      r.observed = observed;
      r.expected = expected;
    }
  }
};

std::string fmt_int(int v) { return std::to_string(v); }

std::string fmt_dims(const std::vector<int>& dims) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < dims.size(); ++i) os << (i ? "," : "") << dims[i];
  os << "}";
  return os.str();
}

// nilpotent algebra element of su(1,n) with parameters (mu, v)
AlgebraElement n_algebra_su(int n, double mu, const VectorXcd& v) {
  VectorXcd full = VectorXcd::Zero(n);
  full[0] = kI * mu;
  full.tail(n - 1) = v;
  MatrixXcd x = MatrixXcd::Zero(n, n);
  x(0, 0) = -kI * mu;
  x.block(0, 1, 1, n - 1) = v.adjoint();
  x.block(1, 0, n - 1, 1) = -v;
  return ceil_element(mu, full, x, AlgebraTag::SU1n);
}

// solvable algebra element x * (flat) + (mu, vw)
AlgebraElement s_algebra_su(int n, double x, double mu, const VectorXcd& vw) {
  VectorXcd full = VectorXcd::Zero(n);
  full[0] = x + kI * mu;
  full.tail(n - 1) = vw;
  MatrixXcd blk = MatrixXcd::Zero(n, n);
  blk(0, 0) = -kI * mu;
  blk.block(0, 1, 1, n - 1) = vw.adjoint();
  blk.block(1, 0, n - 1, 1) = -vw;
  return ceil_element(mu, full, blk, AlgebraTag::SU1n);
}

AlgebraElement a_algebra_su(int n, double x) {
  VectorXcd full = VectorXcd::Zero(n);
  full[0] = x;
  return ceil_element(0.0, full, MatrixXcd::Zero(n, n), AlgebraTag::SU1n);
}

MatrixXcd random_skew_hermitian(Rng& rng, int m, complex<double> trace) {
  MatrixXcd x = MatrixXcd::Zero(m, m);
  for (int i = 0; i < m; ++i) x(i, i) = kI * rng.uniform(-1.0, 1.0);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const complex<double> e(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
      x(i, j) = e;
      x(j, i) = -std::conj(e);
    }
  const complex<double> shift = (trace - x.trace()) / static_cast<double>(m);
  for (int i = 0; i < m; ++i) x(i, i) += shift;
  return x;
}

// xi = ceil(c, e1, diag(ic, X)) with tr X = -2ic: the normalized generator
// of an admissible f over the flat
AlgebraElement fn_generator(int n, double c, const MatrixXcd& block) {
  VectorXcd full = VectorXcd::Zero(n);
  full[0] = 1.0;
  MatrixXcd x = MatrixXcd::Zero(n, n);
  x(0, 0) = kI * c;
  x.block(1, 1, n - 1, n - 1) = block;
  return ceil_element(c, full, x, AlgebraTag::SU1n);
}

AlgebraElement random_algebra_element(Rng& rng, AlgebraTag tag, int n, double span = 1.0) {
  const std::vector<AlgebraElement> basis = standard_basis(tag, n);
  MatrixXcd m = MatrixXcd::Zero(tag_matrix_dim(tag, n), tag_matrix_dim(tag, n));
  for (const AlgebraElement& b : basis) m += rng.uniform(-span, span) * b.mat;
  return AlgebraElement(tag, n, m);
}

GroupElement random_group_element(Rng& rng, const Subalgebra& h, double span = 1.0) {
  MatrixXcd m =
      MatrixXcd::Zero(tag_matrix_dim(h.tag(), h.n()), tag_matrix_dim(h.tag(), h.n()));
  for (const AlgebraElement& b : h.basis()) m += rng.uniform(-span, span) * b.mat;
  return exp_series(AlgebraElement(h.tag(), h.n(), m));
}

std::vector<int> clamp_range(const std::vector<int>& in, int lo, int hi) {
  std::vector<int> out;
  for (int v : in)
    if (v >= lo && v <= hi) out.push_back(v);
  return out;
}

// ---------------------------------------------------------------- roots

void suite_roots_so2n(const SuiteConfig& cfg, Checker& ck) {
  for (int n : clamp_range(cfg.n_range, 3, 16)) {
    const std::string sn = "[n=" + fmt_int(n) + "]";
    ck.run("root-set" + sn, [&](CheckResult& r) {
      const RootDecomposition& dec = root_decomposition(AlgebraTag::SO2n, n);
      std::ostringstream obs;
      bool ok = dec.spaces.size() == 8;
      const std::vector<std::pair<RootLabel, int>> expected = {
          {so_alpha1(), 1},
          {so_alpha2(), n - 2},
          {so_alpha1_plus_alpha2(), n - 2},
          {so_alpha1_plus_2alpha2(), 1}};
      for (auto [label, mult] : expected) {
        for (RootLabel l : {label, label.negated()}) {
          if (!dec.has_root(l) || dec.space(l).multiplicity() != mult) ok = false;
        }
        obs << root_to_string(dec.tag, label) << ":"
            << (dec.has_root(label) ? dec.space(label).multiplicity() : -1) << " ";
      }
      Checker::expect(r, ok, obs.str(), "mults 1, n-2, n-2, 1 for the B2 positive set");
    });
    ck.run("root-relation" + sn, [&](CheckResult& r) {
      const RootDecomposition& dec = root_decomposition(AlgebraTag::SO2n, n);
      double worst = 0;
      for (const RootSpace& sp : dec.spaces)
        for (size_t f = 0; f < dec.flat.size(); ++f)
          for (const AlgebraElement& x : sp.basis) {
            const AlgebraElement lhs = bracket(dec.flat[f], x);
            const double err =
                (lhs.mat - sp.flat_values[static_cast<int>(f)] * x.mat).cwiseAbs().maxCoeff();
            worst = std::max(worst, err / std::max(1.0, x.mat.cwiseAbs().maxCoeff()));
          }
      r.max_err = worst;
      Checker::expect(r, worst <= ck.tol(1e-9), format_double(worst), "<= 1e-9");
    });
    ck.run("closed-form-spans" + sn, [&](CheckResult& r) {
      const RootDecomposition& dec = root_decomposition(AlgebraTag::SO2n, n);
      bool ok = true;
      for (const RootSpace& sp : dec.spaces) {
        const std::vector<AlgebraElement> closed =
            closed_form_root_space(AlgebraTag::SO2n, n, sp.label);
        if (static_cast<int>(closed.size()) != sp.multiplicity()) ok = false;
        MatrixXd joint(flatten(closed[0].mat).size(),
                       sp.multiplicity() + static_cast<int>(closed.size()));
        int col = 0;
        for (const AlgebraElement& x : sp.basis) joint.col(col++) = flatten(x.mat);
        for (const AlgebraElement& x : closed) joint.col(col++) = flatten(x.mat);
        if (numerical_rank(joint) != sp.multiplicity()) ok = false;
      }
      Checker::expect(r, ok, ok ? "spans agree" : "span mismatch",
                      "closed forms span the computed root spaces");
    });
    ck.run("theta-symmetry" + sn, [&](CheckResult& r) {
      const RootDecomposition& dec = root_decomposition(AlgebraTag::SO2n, n);
      bool ok = true;
      for (const RootSpace& sp : dec.spaces) {
        const RootSpace& neg = dec.space(sp.label.negated());
        MatrixXd joint(flatten(sp.basis[0].mat).size(), 2 * sp.multiplicity());
        int col = 0;
        for (const AlgebraElement& x : sp.basis)
          joint.col(col++) = flatten(cartan_theta(x).mat);
        for (const AlgebraElement& x : neg.basis) joint.col(col++) = flatten(x.mat);
        if (numerical_rank(joint) != sp.multiplicity()) ok = false;
      }
      Checker::expect(r, ok, ok ? "theta maps each space onto its negative" : "mismatch",
                      "theta g_lambda = g_{-lambda}");
    });
    ck.run("dim-bookkeeping" + sn, [&](CheckResult& r) {
      const RootDecomposition& dec = root_decomposition(AlgebraTag::SO2n, n);
      int total = dec.zero_dim();
      for (const RootSpace& sp : dec.spaces) total += sp.multiplicity();
      const int expected = (n + 2) * (n + 1) / 2;
      const int k0_expected = (n - 2) * (n - 3) / 2;
      const bool ok =
          total == expected && static_cast<int>(dec.k0.size()) == k0_expected;
      Checker::expect(r, ok,
                      "total=" + fmt_int(total) + " k0=" + fmt_int(static_cast<int>(dec.k0.size())),
                      "total=" + fmt_int(expected) + " k0=" + fmt_int(k0_expected));
    });
    ck.run("killing-form" + sn, [&](CheckResult& r) {
      Rng rng(Rng::derive(cfg.seed, 11, n));
      double worst = 0;
      for (int trial = 0; trial < 50; ++trial) {
        const AlgebraElement x = random_algebra_element(rng, AlgebraTag::SO2n, n);
        const AlgebraElement y = random_algebra_element(rng, AlgebraTag::SO2n, n);
        const double fast = killing_form(x, y);
        const double slow = killing_ad_trace(x, y);
        worst = std::max(worst, std::abs(fast - slow) / std::max(1.0, std::abs(slow)));
      }
      r.max_err = worst;
      Checker::expect(r, worst <= ck.tol(1e-8), format_double(worst), "<= 1e-8");
    });
  }
}

void suite_roots_su1n(const SuiteConfig& cfg, Checker& ck) {
  for (int n : clamp_range(cfg.n_range, 2, 8)) {
    const std::string sn = "[n=" + fmt_int(n) + "]";
    ck.run("root-set" + sn, [&](CheckResult& r) {
      const RootDecomposition& dec = root_decomposition(AlgebraTag::SU1n, n);
      bool ok = dec.spaces.size() == 4;
      ok = ok && dec.has_root(su_alpha()) &&
           dec.space(su_alpha()).multiplicity() == 2 * (n - 1);
      ok = ok && dec.has_root(su_2alpha()) && dec.space(su_2alpha()).multiplicity() == 1;
      ok = ok && dec.has_root(su_alpha().negated()) && dec.has_root(su_2alpha().negated());
      std::ostringstream obs;
      obs << "alpha:" << (dec.has_root(su_alpha()) ? dec.space(su_alpha()).multiplicity() : -1)
          << " 2alpha:"
          << (dec.has_root(su_2alpha()) ? dec.space(su_2alpha()).multiplicity() : -1);
      Checker::expect(r, ok, obs.str(), "alpha:" + fmt_int(2 * (n - 1)) + " 2alpha:1");
    });
    ck.run("closed-form-spans" + sn, [&](CheckResult& r) {
      const RootDecomposition& dec = root_decomposition(AlgebraTag::SU1n, n);
      bool ok = true;
      for (const RootSpace& sp : dec.spaces) {
        const std::vector<AlgebraElement> closed =
            closed_form_root_space(AlgebraTag::SU1n, n, sp.label);
        MatrixXd joint(flatten(closed[0].mat).size(),
                       sp.multiplicity() + static_cast<int>(closed.size()));
        int col = 0;
        for (const AlgebraElement& x : sp.basis) joint.col(col++) = flatten(x.mat);
        for (const AlgebraElement& x : closed) joint.col(col++) = flatten(x.mat);
        if (numerical_rank(joint) != sp.multiplicity()) ok = false;
      }
      Checker::expect(r, ok, ok ? "spans agree" : "span mismatch",
                      "closed forms span the computed root spaces");
    });
    ck.run("iwasawa-dims" + sn, [&](CheckResult& r) {
      const RootDecomposition& dec = root_decomposition(AlgebraTag::SU1n, n);
      const IwasawaParts parts = iwasawa_parts(dec);
      const bool ok = parts.a.dim() == 1 && parts.n.dim() == 2 * n - 1 &&
                      parts.k0.dim() == (n - 1) * (n - 1);
      Checker::expect(r, ok,
                      "a=" + fmt_int(parts.a.dim()) + " n=" + fmt_int(parts.n.dim()) +
                          " k0=" + fmt_int(parts.k0.dim()),
                      "a=1 n=" + fmt_int(2 * n - 1) +
                          " k0=" + fmt_int((n - 1) * (n - 1)));
    });
    ck.run("nilpotency-degree-n" + sn, [&](CheckResult& r) {
      const IwasawaParts parts = iwasawa_parts(root_decomposition(AlgebraTag::SU1n, n));
      const int deg = nilpotency_degree(parts.n);
      Checker::expect(r, deg == 2, fmt_int(deg), "2");
    });
  }
}

// ------------------------------------------------- closed-form exponentials

void suite_exp_closed_forms(const SuiteConfig& cfg, Checker& ck) {
  const int draws = std::max(1, cfg.samples);
  const double tol = ck.tol(1e-10);

  for (int n : clamp_range(cfg.n_range, 2, 8)) {
    const std::string sn = "[n=" + fmt_int(n) + "]";
    ck.run("exp-a" + sn, [&](CheckResult& r) {
      Rng rng(Rng::derive(cfg.seed, 21, n));
      double worst = 0;
      for (int t = 0; t < draws; ++t) {
        const double x = rng.uniform(-1.5, 1.5);
        const GroupElement closed = exp_a_closed(x, n);
        const GroupElement series = exp_series(a_algebra_su(n, x));
        worst = std::max(worst, (closed.mat - series.mat).cwiseAbs().maxCoeff());
      }
      r.max_err = worst;
      Checker::expect(r, worst <= tol, format_double(worst), "<= " + format_double(tol));
    });
    ck.run("exp-n" + sn, [&](CheckResult& r) {
      Rng rng(Rng::derive(cfg.seed, 22, n));
      double worst = 0;
      for (int t = 0; t < draws; ++t) {
        const double mu = rng.uniform(-1.0, 1.0);
        const VectorXcd v = 0.5 * rng.gaussian_cvector(n - 1);
        const GroupElement closed = exp_n_closed_su(mu, v, n);
        const GroupElement series = exp_series(n_algebra_su(n, mu, v));
        worst = std::max(worst, (closed.mat - series.mat).cwiseAbs().maxCoeff());
      }
      r.max_err = worst;
      Checker::expect(r, worst <= tol, format_double(worst), "<= " + format_double(tol));
    });
    ck.run("exp-s" + sn, [&](CheckResult& r) {
      Rng rng(Rng::derive(cfg.seed, 23, n));
      double worst = 0;
      for (int t = 0; t < draws; ++t) {
        // includes tiny x to exercise the stabilized coefficients
        const double x = (t % 5 == 0) ? rng.uniform(-1e-5, 1e-5) : rng.uniform(-1.0, 1.0);
        const double mu = rng.uniform(-1.0, 1.0);
        const VectorXcd vw = 0.5 * rng.gaussian_cvector(n - 1);
        const GroupElement closed = exp_s_closed(x, mu, vw, n);
        const GroupElement series = exp_series(s_algebra_su(n, x, mu, vw));
        worst = std::max(worst, (closed.mat - series.mat).cwiseAbs().maxCoeff());
      }
      r.max_err = worst;
      Checker::expect(r, worst <= tol, format_double(worst), "<= " + format_double(tol));
    });
  }

  for (int n : clamp_range(cfg.n_range, 3, 16)) {
    const std::string sn = "[n=" + fmt_int(n) + "]";
    ck.run("exp-so-singular" + sn, [&](CheckResult& r) {
      Rng rng(Rng::derive(cfg.seed, 24, n));
      double worst = 0;
      for (int t = 0; t < draws; ++t) {
        const double a = rng.uniform(-1.0, 1.0);
        const VectorXd v = 0.5 * rng.gaussian_vector(n - 2);
        const GroupElement closed = exp_n_singular(a, v, n);
        const GroupElement series =
            exp_series(n_element(a, 0.0, v, VectorXd::Zero(n - 2), n));
        worst = std::max(worst, (closed.mat - series.mat).cwiseAbs().maxCoeff());
      }
      r.max_err = worst;
      Checker::expect(r, worst <= tol, format_double(worst), "<= " + format_double(tol));
    });
    ck.run("exp-so-principal" + sn, [&](CheckResult& r) {
      Rng rng(Rng::derive(cfg.seed, 25, n));
      double worst = 0;
      for (int t = 0; t < draws; ++t) {
        const double a = rng.uniform(-1.0, 1.0);
        const double b = rng.uniform(-1.0, 1.0);
        const VectorXd w = 0.5 * rng.gaussian_vector(n - 2);
        const GroupElement closed = exp_n_principal(a, b, w, n);
        const GroupElement series =
            exp_series(n_element(a, b, VectorXd::Zero(n - 2), w, n));
        worst = std::max(worst, (closed.mat - series.mat).cwiseAbs().maxCoeff());
      }
      r.max_err = worst;
      Checker::expect(r, worst <= tol, format_double(worst), "<= " + format_double(tol));
    });
  }
}

// ------------------------------------------------------------- prop-4-1

void suite_prop_4_1(const SuiteConfig& cfg, Checker& ck) {
  const std::vector<CoordEq> singular_locus = {{1, 3}};
  for (int n : clamp_range(cfg.n_range, 3, 16)) {
    const std::string sn = "[n=" + fmt_int(n) + "]";
    const Subalgebra nil = iwasawa_n_so2n(n);
    ck.run("cohomogeneity-one" + sn, [&](CheckResult& r) {
      const std::vector<std::vector<CoordEq>> loci = {singular_locus};
      const CohomogeneityResult res = cohomogeneity(nil, cfg.samples, cfg.seed, loci, 50);
      const bool ok = res.cohomogeneity == 1 && res.dims_observed == std::vector<int>{n - 1, n};
      Checker::expect(r, ok,
                      "cohom=" + fmt_int(res.cohomogeneity) + " dims=" +
                          fmt_dims(res.dims_observed),
                      "cohom=1 dims={" + fmt_int(n - 1) + "," + fmt_int(n) + "}");
    });
    ck.run("dim-split" + sn, [&](CheckResult& r) {
      bool ok = true;
      for (int i = 0; i < cfg.samples && ok; ++i) {
        const AdsPoint p = sample_ads_point(n, Model::Real, Rng::derive(cfg.seed, 31, n, i));
        const int expected = std::abs(leaf_r(p)) > 1e-9 ? n : n - 1;
        if (orbit_dim(nil, p) != expected) ok = false;
      }
      for (int i = 0; i < 50 && ok; ++i) {
        const AdsPoint p =
            sample_ads_point(n, Model::Real, Rng::derive(cfg.seed, 32, n, i), singular_locus);
        if (orbit_dim(nil, p) != n - 1) ok = false;
      }
      Checker::expect(r, ok, ok ? "split holds" : "split violated",
                      "dim n iff x2 != x4, else n-1");
    });
    ck.run("slice-invariance" + sn, [&](CheckResult& r) {
      // infinitesimal form: the nilpotent algebra maps both slice direction
      // spaces into themselves
      const So2nOrbitModel principal =
          n_orbit_model(sample_ads_point(n, Model::Real, Rng::derive(cfg.seed, 33, n)));
      AdsPoint sing = sample_ads_point(n, Model::Real, Rng::derive(cfg.seed, 34, n),
                                       singular_locus);
      const So2nOrbitModel singular = n_orbit_model(sing);
      auto to_cx = [](const std::vector<VectorXd>& vs) {
        std::vector<VectorXcd> out;
        for (const VectorXd& v : vs) out.push_back(v.cast<complex<double>>());
        return out;
      };
      const bool ok = invariant_subspace(nil, to_cx(principal.span)) &&
                      invariant_subspace(nil, to_cx(singular.span));
      Checker::expect(r, ok, ok ? "invariant" : "not invariant",
                      "n-basis maps slice directions into themselves");
    });
    ck.run("solver-principal" + sn, [&](CheckResult& r) {
      Rng rng(Rng::derive(cfg.seed, 35, n));
      double worst = 0;
      for (int t = 0; t < 100; ++t) {
        const AdsPoint p = sample_ads_point(n, Model::Real, rng.next_u64());
        if (std::abs(leaf_r(p)) < 1e-6) continue;
        const GroupElement g = exp_n_principal(rng.uniform(-1, 1), rng.uniform(-1, 1),
                                               rng.gaussian_vector(n - 2), n);
        const AdsPoint q = act(g, p);
        const NElement sol = solve_n_element_so(p, q);
        const AdsPoint image = act(exp_n_principal(sol.a, sol.b, sol.w, n), p);
        worst = std::max(worst, (image.realified() - q.realified()).norm());
      }
      r.max_err = worst;
      Checker::expect(r, worst <= ck.tol(1e-9), format_double(worst), "<= 1e-9");
    });
    ck.run("solver-singular" + sn, [&](CheckResult& r) {
      Rng rng(Rng::derive(cfg.seed, 36, n));
      double worst = 0;
      for (int t = 0; t < 100; ++t) {
        const AdsPoint p = sample_ads_point(n, Model::Real, rng.next_u64(), singular_locus);
        const GroupElement g =
            exp_n_singular(rng.uniform(-1, 1), rng.gaussian_vector(n - 2), n);
        const AdsPoint q = act(g, p);
        const NElement sol = solve_n_element_so(p, q);
        const AdsPoint image = act(exp_n_singular(sol.a, sol.v, n), p);
        worst = std::max(worst, (image.realified() - q.realified()).norm());
      }
      r.max_err = worst;
      Checker::expect(r, worst <= ck.tol(1e-9), format_double(worst), "<= 1e-9");
    });
  }
}

// ------------------------------------------------------------ remark-4-2

void suite_remark_4_2(const SuiteConfig& cfg, Checker& ck) {
  for (int n : clamp_range(cfg.n_range, 3, 16)) {
    const std::string sn = "[n=" + fmt_int(n) + "]";
    ck.run("line-dichotomy" + sn, [&](CheckResult& r) {
      bool ok = true;
      std::ostringstream obs;
      const double grid[] = {-1.0, -0.5, 0.0, 0.5, 1.0};
      for (double a : grid)
        for (double b : grid) {
          const Subalgebra h = line_plus_n(a, b, n);
          const CohomogeneityResult res = cohomogeneity(h, cfg.samples / 2 + 10, cfg.seed);
          const int expected = (b == 0.0) ? 1 : 0;
          if (res.cohomogeneity != expected) {
            ok = false;
            obs << "(a=" << a << ",b=" << b << ")->" << res.cohomogeneity << " ";
          }
        }
      Checker::expect(r, ok, ok ? "dichotomy holds" : obs.str(),
                      "cohomogeneity one exactly when b = 0");
    });
    ck.run("leaf-preservation-N-A1N" + sn, [&](CheckResult& r) {
      bool ok = true;
      for (So2nGroup g : {So2nGroup::N, So2nGroup::A1N}) {
        const Subalgebra h = group_subalgebra(g, n);
        Rng rng(Rng::derive(cfg.seed, 41, n, static_cast<int>(g)));
        for (int t = 0; t < 50 && ok; ++t) {
          const bool singular = t % 2 == 0;
          const std::vector<CoordEq> locus = {{1, 3}};
          const AdsPoint p = sample_ads_point(
              n, Model::Real, rng.next_u64(),
              singular ? std::span<const CoordEq>(locus) : std::span<const CoordEq>());
          const GroupElement ge = random_group_element(rng, h);
          const AdsPoint q = act(ge, p);
          if (!leaf_id(g, p).same_leaf(leaf_id(g, q), 1e-7)) ok = false;
        }
      }
      Checker::expect(r, ok, ok ? "leaves preserved" : "leaf changed",
                      "leaf labels invariant under the group");
    });
  }
}

// ------------------------------------------------------------- prop-4-3

void suite_prop_4_3(const SuiteConfig& cfg, Checker& ck) {
  const std::vector<CoordEq> singular_locus = {{1, 3}};
  for (int n : clamp_range(cfg.n_range, 3, 16)) {
    const std::string sn = "[n=" + fmt_int(n) + "]";
    ck.run("parabolic-dims" + sn, [&](CheckResult& r) {
      const int k0 = (n - 2) * (n - 3) / 2;
      const int nil = 2 * (n - 2) + 2;
      const Subalgebra qe = parabolic_q(So2nGroup::Qempty, n);
      const Subalgebra q1 = parabolic_q(So2nGroup::Q1, n);
      const Subalgebra q2 = parabolic_q(So2nGroup::Q2, n);
      const bool ok = qe.dim() == k0 + 2 + nil && q1.dim() == qe.dim() + (n - 2) &&
                      q2.dim() == qe.dim() + 1;
      Checker::expect(r, ok,
                      "q_empty=" + fmt_int(qe.dim()) + " q1=" + fmt_int(q1.dim()) +
                          " q2=" + fmt_int(q2.dim()),
                      "q_empty=" + fmt_int(k0 + 2 + nil) + " q1=" +
                          fmt_int(k0 + 2 + nil + n - 2) + " q2=" + fmt_int(k0 + 3 + nil));
    });
    ck.run("q2-transitive" + sn, [&](CheckResult& r) {
      const Subalgebra q2 = parabolic_q(So2nGroup::Q2, n);
      bool ok = true;
      for (int i = 0; i < cfg.samples && ok; ++i)
        if (orbit_dim(q2, sample_ads_point(n, Model::Real, Rng::derive(cfg.seed, 51, n, i))) !=
            n + 1)
          ok = false;
      for (int i = 0; i < 20 && ok; ++i)
        if (orbit_dim(q2, sample_ads_point(n, Model::Real, Rng::derive(cfg.seed, 52, n, i),
                                           singular_locus)) != n + 1)
          ok = false;
      Checker::expect(r, ok, ok ? "dim n+1 everywhere" : "dimension drop",
                      "orbit dim n+1 at all sampled points");
    });
    ck.run("q-empty-q1-singular-dims" + sn, [&](CheckResult& r) {
      const Subalgebra qe = parabolic_q(So2nGroup::Qempty, n);
      const Subalgebra q1 = parabolic_q(So2nGroup::Q1, n);
      bool ok = true;
      for (int i = 0; i < 20 && ok; ++i) {
        const AdsPoint p =
            sample_ads_point(n, Model::Real, Rng::derive(cfg.seed, 53, n, i), singular_locus);
        if (orbit_dim(qe, p) != n || orbit_dim(q1, p) != n) ok = false;
      }
      Checker::expect(r, ok, ok ? "dims equal n" : "unexpected dim",
                      "q_empty and q1 orbits drop to dim n on the x2 = x4 locus");
    });
    ck.run("singular-tangent-span" + sn, [&](CheckResult& r) {
      // (a + n).p = {x : <x,p> = 0, x2 = x4} on the singular locus
      const Subalgebra an = an_subalgebra(n);
      bool ok = true;
      for (int i = 0; i < 10 && ok; ++i) {
        const AdsPoint p =
            sample_ads_point(n, Model::Real, Rng::derive(cfg.seed, 54, n, i), singular_locus);
        const MatrixXd t = tangent_space(an, p);
        // rhs: nullspace of the two equations
        MatrixXd eqs(2, n + 2);
        eqs.setZero();
        const VectorXd pr = p.realified();
        for (int j = 0; j < n + 2; ++j) eqs(0, j) = (j < 2 ? -1.0 : 1.0) * pr[j];
        eqs(1, 1) = 1.0;
        eqs(1, 3) = -1.0;
        Eigen::JacobiSVD<MatrixXd> svd(eqs, Eigen::ComputeFullV);
        const MatrixXd rhs = svd.matrixV().rightCols(n);
        MatrixXd joint(n + 2, t.cols() + rhs.cols());
        joint << t, rhs;
        if (numerical_rank(t) != n || numerical_rank(joint) != n) ok = false;
      }
      Checker::expect(r, ok, ok ? "spans equal" : "span mismatch",
                      "(a+n).p equals the x2=x4 hyperplane section of T_p");
    });
    ck.run("leaf-preservation-AN-Q" + sn, [&](CheckResult& r) {
      bool ok = true;
      for (So2nGroup g : {So2nGroup::AN, So2nGroup::Qempty, So2nGroup::Q1, So2nGroup::Q2}) {
        const Subalgebra h = group_subalgebra(g, n);
        Rng rng(Rng::derive(cfg.seed, 55, n, static_cast<int>(g)));
        for (int t = 0; t < 50 && ok; ++t) {
          const bool singular = t % 2 == 0;
          const AdsPoint p = sample_ads_point(
              n, Model::Real, rng.next_u64(),
              singular ? std::span<const CoordEq>(singular_locus)
                       : std::span<const CoordEq>());
          const GroupElement ge = random_group_element(rng, h);
          if (!leaf_id(g, p).same_leaf(leaf_id(g, act(ge, p)), 1e-7)) ok = false;
        }
      }
      Checker::expect(r, ok, ok ? "leaves preserved" : "leaf changed",
                      "foliation labels invariant under the groups");
    });
    ck.run("foliations-coincide" + sn, [&](CheckResult& r) {
      // AN, q_empty and q1 induce the same four-piece decomposition
      bool ok = true;
      for (int i = 0; i < 30 && ok; ++i) {
        const bool singular = i % 3 == 0;
        const AdsPoint p = sample_ads_point(
            n, Model::Real, Rng::derive(cfg.seed, 56, n, i),
            singular ? std::span<const CoordEq>(singular_locus) : std::span<const CoordEq>());
        const LeafId a = leaf_id(So2nGroup::AN, p);
        const LeafId b = leaf_id(So2nGroup::Qempty, p);
        const LeafId c = leaf_id(So2nGroup::Q1, p);
        if (a.label != b.label || b.label != c.label) ok = false;
      }
      Checker::expect(r, ok, ok ? "labels agree" : "labels differ",
                      "AN, q_empty, q1 share the leaf decomposition");
    });
    ck.run("cohomogeneity-chain" + sn, [&](CheckResult& r) {
      // enlarging the algebra never increases cohomogeneity
      const std::vector<Subalgebra> chain = {iwasawa_n_so2n(n), an_subalgebra(n),
                                             parabolic_q(So2nGroup::Qempty, n),
                                             parabolic_q(So2nGroup::Q1, n)};
      std::vector<int> cohoms;
      for (const Subalgebra& h : chain)
        cohoms.push_back(cohomogeneity(h, 40, Rng::derive(cfg.seed, 57, n)).cohomogeneity);
      const bool ok = cohoms == std::vector<int>{1, 0, 0, 0};
      Checker::expect(r, ok, fmt_dims(cohoms),
                      "{1,0,0,0} along n < a+n < q_empty < q1");
    });
  }
}

// ------------------------------------------------------------- kaehler

void suite_kaehler(const SuiteConfig& cfg, Checker& ck) {
  for (int n : clamp_range(cfg.n_range, 3, 12)) {
    const std::string sn = "[n=" + fmt_int(n) + "]";
    ck.run("constant-angle" + sn, [&](CheckResult& r) {
      double worst = 0;
      bool ok = true;
      for (double phi : {kPi / 6, kPi / 4, kPi / 3, kPi / 2}) {
        for (int l = 1; 2 * l <= n - 1; ++l) {
          const int k = n - 1 - 2 * l;
          const WDecomposition dec = build_w_decomposition(k, l, phi, n);
          const auto perp_angle = constant_kaehler_angle(dec.w_perp, ck.tol(1e-9));
          const auto phi_angle = constant_kaehler_angle(dec.w_phi, ck.tol(1e-9));
          if (!perp_angle || !phi_angle) {
            ok = false;
            continue;
          }
          worst = std::max(worst, std::abs(*perp_angle - phi));
          worst = std::max(worst, std::abs(*phi_angle - phi));
          if (dec.w_perp.dim() != 2 * l) ok = false;
        }
      }
      r.max_err = worst;
      Checker::expect(r, ok && worst <= ck.tol(1e-9), format_double(worst),
                      "constant angles recovered to 1e-9, dim 2l");
    });
    ck.run("angle-formula" + sn, [&](CheckResult& r) {
      double worst = 0;
      for (double phi : {kPi / 6, kPi / 3}) {
        for (int l = 1; 2 * l <= n - 1; ++l) {
          const int k = n - 1 - 2 * l;
          const WDecomposition dec = build_w_decomposition(k, l, phi, n);
          worst = std::max(worst, std::abs(kaehler_angle(dec.f[0], dec.w_phi) - phi));
        }
      }
      r.max_err = worst;
      Checker::expect(r, worst <= ck.tol(1e-9), format_double(worst), "<= 1e-9");
    });
    ck.run("orthogonal-split" + sn, [&](CheckResult& r) {
      bool ok = true;
      for (int l = 1; 2 * l <= n - 1; ++l) {
        const int k = n - 1 - 2 * l;
        const WDecomposition dec = build_w_decomposition(k, l, kPi / 3, n);
        // pairwise real-orthogonality
        for (const auto& a : dec.w_phi.basis())
          for (const auto& b : dec.w_perp.basis())
            if (std::abs(a.dot(b).real()) > 1e-10) ok = false;
        for (const auto& a : dec.w0.basis())
          for (const auto& b : dec.w_phi.basis())
            if (std::abs(a.dot(b).real()) > 1e-10) ok = false;
        // C w_phi = w_phi + w_perp as spans
        std::vector<VectorXd> complexified;
        for (const auto& v : dec.w_phi.basis()) {
          complexified.push_back(complex_to_real(v));
          complexified.push_back(complex_to_real((kI * v).eval()));
        }
        std::vector<VectorXd> direct;
        for (const auto& v : dec.w_phi.basis()) direct.push_back(complex_to_real(v));
        for (const auto& v : dec.w_perp.basis()) direct.push_back(complex_to_real(v));
        MatrixXd a = columns_of(complexified);
        MatrixXd b = columns_of(direct);
        MatrixXd joint(a.rows(), a.cols() + b.cols());
        joint << a, b;
        if (numerical_rank(a) != 4 * l || numerical_rank(joint) != 4 * l) ok = false;
        if (numerical_rank(b) != 4 * l) ok = false;
      }
      Checker::expect(r, ok, ok ? "orthogonal, complexification splits" : "mismatch",
                      "w0, w_phi, w_perp pairwise orthogonal; C w_phi = w_phi + w_perp");
    });
  }
}

// ------------------------------------------------------- parabolic structure

void suite_parabolic(const SuiteConfig& cfg, Checker& ck) {
  for (int n : clamp_range(cfg.n_range, 3, 16)) {
    const std::string sn = "[n=" + fmt_int(n) + "]";
    ck.run("langlands-split" + sn, [&](CheckResult& r) {
      bool ok = true;
      for (ParabolicSubset phi :
           {ParabolicSubset::Empty, ParabolicSubset::Alpha1, ParabolicSubset::Alpha2}) {
        const LanglandsDecomposition dec = parabolic(phi, n);
        if (dec.q.dim() != dec.l.dim() + dec.n.dim()) ok = false;
        // direct sum: joint rank equals the dimension sum
        MatrixXd joint(dec.q.span_columns().rows(), dec.l.dim() + dec.n.dim());
        joint << dec.l.span_columns(), dec.n.span_columns();
        if (numerical_rank(joint) != dec.q.dim()) ok = false;
        if (nilpotency_degree(dec.n) > 3) ok = false;
      }
      Checker::expect(r, ok, ok ? "q = l + n for all proper subsets" : "split failed",
                      "Langlands summands are independent and close");
    });
    ck.run("q1-extension" + sn, [&](CheckResult& r) {
      // q1 = q_empty + g_{-alpha2}, q2 = q_empty + g_{-alpha1} as spans
      const Subalgebra qe = parabolic_q(So2nGroup::Qempty, n);
      bool ok = true;
      const struct {
        So2nGroup g;
        RootLabel root;
      } cases[] = {{So2nGroup::Q1, so_alpha2().negated()},
                   {So2nGroup::Q2, so_alpha1().negated()}};
      for (const auto& c : cases) {
        const Subalgebra q = parabolic_q(c.g, n);
        std::vector<AlgebraElement> ext = qe.basis();
        for (AlgebraElement& x : closed_form_root_space(AlgebraTag::SO2n, n, c.root))
          ext.push_back(std::move(x));
        const Subalgebra rebuilt(AlgebraTag::SO2n, n, std::move(ext));
        if (!q.same_span(rebuilt)) ok = false;
      }
      Checker::expect(r, ok, ok ? "extensions match" : "span mismatch",
                      "q1, q2 extend q_empty by one negative root space");
    });
    ck.run("nilpotency-degree-n" + sn, [&](CheckResult& r) {
      const int deg = nilpotency_degree(iwasawa_n_so2n(n));
      Checker::expect(r, deg == 3, fmt_int(deg), "3");
    });
    ck.run("abelian-flat" + sn, [&](CheckResult& r) {
      const int deg = nilpotency_degree(
          Subalgebra(AlgebraTag::SO2n, n, maximal_flat(AlgebraTag::SO2n, n)));
      Checker::expect(r, deg == 1, fmt_int(deg), "1");
    });
  }
}

// ------------------------------------------------------------ theorem-3-1

std::vector<CaseDescriptor> cases_for(int n) {
  std::vector<CaseDescriptor> out;
  out.push_back(CaseDescriptor::fn_a(n));
  out.push_back(CaseDescriptor::fn_k0(n));
  out.push_back(CaseDescriptor::fn_fc(n, 1.0));
  out.push_back(CaseDescriptor::fn_fc(n, -0.7));
  for (int k = 0; k <= n - 1; ++k) out.push_back(CaseDescriptor::block_unitary(n, k));
  out.push_back(CaseDescriptor::circle_real(n));
  for (int r = 1; r <= n - 1; ++r) out.push_back(CaseDescriptor::totally_real_perp(n, r));
  for (int l = 1; 2 * l <= n - 1; ++l)
    out.push_back(CaseDescriptor::angled_perp(n, n - 1 - 2 * l, l, kPi / 3));
  return out;
}

std::string case_name(const CaseDescriptor& d) {
  switch (d.kind) {
    case CaseDescriptor::Kind::FnA: return "1a";
    case CaseDescriptor::Kind::FnK0: return "1b";
    case CaseDescriptor::Kind::FnFc: return "1c(c=" + format_double(d.c) + ")";
    case CaseDescriptor::Kind::BlockUnitary: return "2(k=" + fmt_int(d.k) + ")";
    case CaseDescriptor::Kind::CircleTimesReal: return "3";
    case CaseDescriptor::Kind::TotallyRealPerp: return "4(r=" + fmt_int(d.r) + ")";
    case CaseDescriptor::Kind::AngledPerp:
      return "5(k=" + fmt_int(d.k) + ",l=" + fmt_int(d.l) + ")";
  }
  return "?";
}

bool is_fn_case(const CaseDescriptor& d) {
  return d.kind == CaseDescriptor::Kind::FnA || d.kind == CaseDescriptor::Kind::FnK0 ||
         d.kind == CaseDescriptor::Kind::FnFc;
}

std::vector<VectorXcd> stated_w_subspace(const CaseDescriptor& d) {
  // the enveloping subspace of the distinguished orbit, as listed case by case
  const int dim = d.n + 1;
  std::vector<VectorXcd> w;
  auto push_complex_axis = [&](int j) {
    VectorXcd e = VectorXcd::Zero(dim);
    e[j] = 1.0;
    w.push_back(e);
    w.push_back(kI * e);
  };
  if (d.kind == CaseDescriptor::Kind::TotallyRealPerp) {
    for (int j = 0; j <= d.n - d.r; ++j) push_complex_axis(j);
    for (int j = d.n - d.r + 1; j <= d.n; ++j) {
      VectorXcd e = VectorXcd::Zero(dim);
      e[j] = 1.0;
      w.push_back(e);
    }
    return w;
  }
  if (d.kind == CaseDescriptor::Kind::AngledPerp) {
    for (int j = 0; j <= d.k + 1; ++j) push_complex_axis(j);
    const SGeometry geom = SGeometry::with_angle(d.n, d.k, d.l, d.phi);
    for (size_t j = 2 * d.k; j < geom.w_basis().size(); ++j) {
      VectorXcd e = VectorXcd::Zero(dim);
      e.tail(d.n - 1) = geom.w_basis()[j];
      w.push_back(e);
    }
    return w;
  }
  throw ArgumentError("stated_w_subspace: only the normalizer cases carry a W");
}

void suite_theorem_3_1(const SuiteConfig& cfg, Checker& ck) {
  for (int n : clamp_range(cfg.n_range, 2, 6)) {
    const std::string sn = "[n=" + fmt_int(n) + "]";

    for (const CaseDescriptor& d : cases_for(n)) {
      const std::string cn = "[" + case_name(d) + ",n=" + fmt_int(n) + "]";
      const Subalgebra h = case_subalgebra(d);

      ck.run("cohomogeneity-one" + cn, [&](CheckResult& r) {
        const CohomogeneityResult res =
            cohomogeneity(h, std::max(20, cfg.samples / 2), Rng::derive(cfg.seed, 61, n));
        Checker::expect(r, res.cohomogeneity == 1,
                        "cohom=" + fmt_int(res.cohomogeneity) + " dims=" +
                            fmt_dims(res.dims_observed),
                        "cohom=1");
      });

      if (is_fn_case(d)) {
        ck.run("all-orbits-principal" + cn, [&](CheckResult& r) {
          bool ok = true;
          for (int i = 0; i < 40 && ok; ++i) {
            const AdsPoint p =
                sample_ads_point(n, Model::Complex, Rng::derive(cfg.seed, 62, n, i));
            if (orbit_dim(h, p) != 2 * n) ok = false;
          }
          Checker::expect(r, ok, ok ? "all sampled dims 2n" : "dimension drop",
                          "every orbit has dimension 2n");
        });
      }

      if (d.kind == CaseDescriptor::Kind::BlockUnitary) {
        ck.run("distinguished-orbit-dim" + cn, [&](CheckResult& r) {
          const int dim = orbit_dim(h, e0_point(n));
          Checker::expect(r, dim == 2 * d.k + 1, fmt_int(dim), fmt_int(2 * d.k + 1));
        });
      }
      if (d.kind == CaseDescriptor::Kind::CircleTimesReal) {
        ck.run("distinguished-orbit-dim" + cn, [&](CheckResult& r) {
          const int dim = orbit_dim(h, e0_point(n));
          Checker::expect(r, dim == n + 1, fmt_int(dim), fmt_int(n + 1));
        });
        ck.run("phase-predicate" + cn, [&](CheckResult& r) {
          const OrbitModel m = orbit_model(d, e0_point(n));
          bool ok = true;
          Rng rng(Rng::derive(cfg.seed, 63, n));
          for (int t = 0; t < 20; ++t) {
            const double theta = rng.uniform(0, 2 * kPi);
            const double s = rng.uniform(-1.5, 1.5);
            VectorXcd z = VectorXcd::Zero(n + 1);
            z[0] = std::exp(kI * theta) * std::cosh(s);
            z[1] = std::exp(kI * theta) * std::sinh(s);
            if (!m.contains(AdsPoint::complex_point(n, z), 1e-8)) ok = false;
            // perturb the phase of one coordinate off the orbit
            if (std::abs(std::sinh(s)) > 0.3) {
              z[1] *= std::exp(kI * 0.3);
              if (m.contains(AdsPoint::complex_point(n, z), 1e-8)) ok = false;
            }
          }
          Checker::expect(r, ok, ok ? "predicate exact" : "predicate wrong",
                          "accepts phase multiples of real points only");
        });
      }
      if (d.kind == CaseDescriptor::Kind::TotallyRealPerp ||
          d.kind == CaseDescriptor::Kind::AngledPerp) {
        const std::vector<VectorXcd> w = stated_w_subspace(d);
        ck.run("orbit-dim-at-e0" + cn, [&](CheckResult& r) {
          const int dim = orbit_dim(h, e0_point(n));
          const int expected = static_cast<int>(w.size()) - 1;
          Checker::expect(r, dim == expected, fmt_int(dim), fmt_int(expected));
        });
        ck.run("invariant-w" + cn, [&](CheckResult& r) {
          const bool ok = invariant_subspace(h, w);
          Checker::expect(r, ok, ok ? "invariant" : "not invariant",
                          "stated W invariant under the case subalgebra");
        });
        ck.run("slice-v-invariance" + cn, [&](CheckResult& r) {
          // the affine-slice direction space V is invariant under s
          const SGeometry geom = d.kind == CaseDescriptor::Kind::TotallyRealPerp
                                     ? SGeometry::totally_real(n, d.r)
                                     : SGeometry::with_angle(n, d.k, d.l, d.phi);
          const bool ok = invariant_subspace(geom.s_subalgebra(), geom.slice_basis());
          Checker::expect(r, ok, ok ? "invariant" : "not invariant",
                          "s maps the slice directions into themselves");
        });
        ck.run("slice-membership" + cn, [&](CheckResult& r) {
          // sampled orbit points satisfy the circle-saturated slice model
          Rng rng(Rng::derive(cfg.seed, 64, n));
          bool ok = true;
          const SGeometry geom = d.kind == CaseDescriptor::Kind::TotallyRealPerp
                                     ? SGeometry::totally_real(n, d.r)
                                     : SGeometry::with_angle(n, d.k, d.l, d.phi);
          for (int t = 0; t < 15 && ok; ++t) {
            // transversal base: x0 e0 + sphere vector of random radius
            VectorXcd z = VectorXcd::Zero(n + 1);
            const double rho = t % 3 == 0 ? 0.0 : rng.uniform(0.2, 1.2);
            VectorXcd dir = VectorXcd::Zero(n - 1);
            for (const VectorXcd& pb : geom.w_perp_basis())
              dir += rng.gaussian() * pb;
            if (dir.norm() > 1e-9) dir *= rho / dir.norm();
            z[0] = std::sqrt(1.0 + rho * rho);
            z.tail(n - 1) = dir;
            const AdsPoint base = AdsPoint::complex_point(n, z);
            const OrbitModel m = orbit_model(d, base);
            const GroupElement g = random_group_element(rng, h, 0.8);
            const AdsPoint moved = act(g, base);
            if (!m.contains(moved, 1e-6)) ok = false;
          }
          Checker::expect(r, ok, ok ? "orbit points in model" : "model missed a point",
                          "group translates stay in the circle-saturated slice");
        });
      }

      const bool fiber_case = !is_fn_case(d) ||
                              d.kind == CaseDescriptor::Kind::FnK0;
      if (fiber_case) {
        ck.run("fiber-containment" + cn, [&](CheckResult& r) {
          bool ok = true;
          for (int i = 0; i < 50 && ok; ++i) {
            const AdsPoint p =
                sample_ads_point(n, Model::Complex, Rng::derive(cfg.seed, 65, n, i));
            if (!fiber_contained(h, p)) ok = false;
          }
          Checker::expect(r, ok, ok ? "i.p tangent at all samples" : "fiber not contained",
                          "i.p lies in h.p at 50 points");
        });
      }

      if (d.kind == CaseDescriptor::Kind::BlockUnitary ||
          (d.kind == CaseDescriptor::Kind::AngledPerp)) {
        const bool singular_exists =
            d.kind != CaseDescriptor::Kind::BlockUnitary || 2 * d.k + 1 < 2 * n - 1;
        if (singular_exists) {
          ck.run("tubes" + cn, [&](CheckResult& r) {
            bool ok = true;
            for (double radius : {0.5, 1.0}) {
              const auto points =
                  tube_sample(h, e0_point(n), radius, 20, Rng::derive(cfg.seed, 66, n));
              for (const AdsPoint& p : points)
                if (orbit_dim(h, p) != 2 * n) ok = false;
            }
            Checker::expect(r, ok, ok ? "all tube points principal" : "non-principal point",
                            "tube points have orbit dimension 2n");
          });
        }
      }
    }

    // N-orbit slice and solver on the complex side
    ck.run("n-slice-solve" + sn, [&](CheckResult& r) {
      Rng rng(Rng::derive(cfg.seed, 67, n));
      double worst = 0;
      for (int t = 0; t < 100; ++t) {
        const AdsPoint p = sample_ads_point(n, Model::Complex, rng.next_u64());
        const GroupElement g =
            exp_n_closed_su(rng.uniform(-1, 1), rng.gaussian_cvector(n - 1), n);
        const AdsPoint q = act(g, p);
        const NSolveSu sol = solve_n_slice_su(p, q);
        const AdsPoint image = act(exp_n_closed_su(sol.mu, sol.v, n), p);
        worst = std::max(worst, (image.z - q.z).norm());
      }
      r.max_err = worst;
      Checker::expect(r, worst <= ck.tol(1e-9), format_double(worst), "<= 1e-9");
    });
    ck.run("n-orbit-slice-dim" + sn, [&](CheckResult& r) {
      const OrbitModel m = n_orbit_model_su(e0_point(n));
      const Subalgebra nil(AlgebraTag::SU1n, n, [&] {
        std::vector<AlgebraElement> basis;
        for (const RootLabel& root : {su_alpha(), su_2alpha()})
          for (AlgebraElement& x : closed_form_root_space(AlgebraTag::SU1n, n, root))
            basis.push_back(std::move(x));
        return basis;
      }());
      const int slice_dim = static_cast<int>(m.span.size());
      const bool ok = slice_dim == 2 * n && orbit_dim(nil, e0_point(n)) == 2 * n - 1 &&
                      invariant_subspace(nil, m.span);
      Checker::expect(r, ok, "slice=" + fmt_int(slice_dim),
                      "slice=2n, invariant, orbit dim 2n-1");
    });
    ck.run("s-slice-solve" + sn, [&](CheckResult& r) {
      Rng rng(Rng::derive(cfg.seed, 68, n));
      double worst = 0;
      std::vector<SGeometry> geoms;
      geoms.push_back(SGeometry::totally_real(n, 1));
      if (n >= 3) geoms.push_back(SGeometry::totally_real(n, n - 1));
      if (n >= 3) geoms.push_back(SGeometry::with_angle(n, n - 3, 1, kPi / 3));
      for (const SGeometry& geom : geoms) {
        for (int t = 0; t < 100; ++t) {
          // base: canonical transversal point, sometimes e0 itself
          VectorXcd z = VectorXcd::Zero(n + 1);
          const double rho = (t % 2 == 0) ? 0.0 : rng.uniform(0.2, 1.0);
          VectorXcd dir = VectorXcd::Zero(n - 1);
          for (const VectorXcd& pb : geom.w_perp_basis()) dir += rng.gaussian() * pb;
          if (dir.norm() > 1e-9) dir *= rho / dir.norm();
          z[0] = std::sqrt(1.0 + rho * rho);
          z.tail(n - 1) = dir;
          const complex<double> lambda = std::exp(kI * rng.uniform(0, 2 * kPi));
          const AdsPoint p = AdsPoint::complex_point(n, lambda * z);
          SParams params;
          params.x = rng.uniform(-1.5, 1.5);
          params.mu = rng.uniform(-1.5, 1.5);
          params.z = rng.gaussian_cvector(geom.w0_complex_dim());
          if (geom.is_totally_real()) {
            params.u = rng.gaussian_vector(static_cast<int>(geom.w_basis().size()) -
                                           2 * geom.w0_complex_dim());
          } else {
            params.u = rng.gaussian_vector(geom.l());
            params.v = rng.gaussian_vector(geom.l());
          }
          const AdsPoint q = act(exp_s_closed(geom, params), p);
          const SParams sol = solve_s_slice(geom, p, q);
          const AdsPoint image = act(exp_s_closed(geom, sol), p);
          worst = std::max(worst, (image.z - q.z).norm());
        }
      }
      r.max_err = worst;
      Checker::expect(r, worst <= ck.tol(1e-9), format_double(worst), "<= 1e-9");
    });

    // reduction of a transitive-downstairs factor to its canonical line
    ck.run("fn-reduction" + sn, [&](CheckResult& r) {
      Rng rng(Rng::derive(cfg.seed, 69, n));
      bool ok = true;
      for (int t = 0; t < 50 && ok; ++t) {
        const double c = (t % 5 == 0) ? 1.0 : rng.uniform(-1.5, 1.5);
        std::vector<AlgebraElement> basis;
        if (t % 3 == 2 && n >= 3) {
          // two-dimensional f: generator with a scalar block plus a
          // commuting traceless block element (vanishing u(1) part)
          MatrixXcd blk = MatrixXcd::Identity(n - 1, n - 1) *
                          (-2.0 * kI * c / static_cast<double>(n - 1));
          basis.push_back(fn_generator(n, c, blk));
          MatrixXcd extra = random_skew_hermitian(rng, n - 1, 0.0);
          MatrixXcd m = MatrixXcd::Zero(n + 1, n + 1);
          m.block(2, 2, n - 1, n - 1) = extra;
          basis.emplace_back(AlgebraTag::SU1n, n, m);
        } else {
          basis.push_back(
              fn_generator(n, c, random_skew_hermitian(rng, n - 1, -2.0 * kI * c)));
        }
        const Subalgebra f(AlgebraTag::SU1n, n, basis, 1e-8);
        if (!fn_cohomogeneity_one(f)) {
          ok = false;
          break;
        }
        const AdsPoint p = sample_ads_point(n, Model::Complex, rng.next_u64());
        if (!fn_orbit_equivalence_check(f, fn_c_parameter(f), p)) ok = false;
      }
      Checker::expect(r, ok, ok ? "tangent spaces agree" : "tangent mismatch",
                      "(f+n).p = (f_c+n).p at sampled points");
    });

    ck.run("fn-criterion-agreement" + sn, [&](CheckResult& r) {
      Rng rng(Rng::derive(cfg.seed, 70, n));
      bool ok = true;
      for (int t = 0; t < 20 && ok; ++t) {
        const double c = rng.uniform(-1.5, 1.5);
        std::vector<AlgebraElement> basis;
        basis.push_back(fn_generator(n, c, random_skew_hermitian(rng, n - 1, -2.0 * kI * c)));
        bool expect_one = true;
        if (t % 2 == 1) {
          // adjoin a central k0 element with nonzero u(1) part: transitive
          const double y = rng.uniform(0.3, 1.0);
          MatrixXcd m = MatrixXcd::Zero(n + 1, n + 1);
          m(0, 0) = kI * y;
          m(1, 1) = kI * y;
          for (int j = 2; j <= n; ++j) m(j, j) = -2.0 * kI * y / static_cast<double>(n - 1);
          basis.emplace_back(AlgebraTag::SU1n, n, m);
          expect_one = false;
          // the generator must commute with the added element; rebuild it
          // with a block proportional to the identity
          MatrixXcd blk = MatrixXcd::Identity(n - 1, n - 1) * (-2.0 * kI * c /
                                                               static_cast<double>(n - 1));
          basis[0] = fn_generator(n, c, blk);
        }
        const Subalgebra f(AlgebraTag::SU1n, n, basis);
        if (fn_cohomogeneity_one(f) != expect_one) ok = false;
        // measured cohomogeneity of (f + n) agrees
        std::vector<AlgebraElement> full = f.basis();
        for (const RootLabel& root : {su_alpha(), su_2alpha()})
          for (AlgebraElement& x : closed_form_root_space(AlgebraTag::SU1n, n, root))
            full.push_back(std::move(x));
        const Subalgebra fn(AlgebraTag::SU1n, n, full);
        const CohomogeneityResult res = cohomogeneity(fn, 25, rng.next_u64());
        if (res.cohomogeneity != (expect_one ? 1 : 0)) ok = false;
      }
      Checker::expect(r, ok, ok ? "criterion matches measurements" : "disagreement",
                      "u(1)-component test agrees with sampled cohomogeneity");
    });
  }
}

}  // namespace

std::vector<std::pair<std::string, std::string>> suite_catalog() {
  return {
      {"roots-so2n",
       "restricted roots of so(2,n): B2 pattern, multiplicities, explicit spans, Killing form"},
      {"roots-su1n", "restricted roots of su(1,n): {a, 2a} pattern and Iwasawa dimensions"},
      {"exp-closed-forms",
       "closed-form exponentials of the nilpotent and solvable factors against the series"},
      {"theorem-3-1",
       "cohomogeneity-one subgroups of U(1,n) on the odd-dimensional quadric: orbit "
       "dimensions, slices, fibers, tubes, reductions"},
      {"prop-4-1", "orbits of the nilpotent Iwasawa factor of SO0(2,n): dimension split and "
                   "slice solvers"},
      {"remark-4-2", "lines over the nilpotent factor: cohomogeneity dichotomy and leaves"},
      {"prop-4-3", "parabolic subgroups of SO0(2,n): transitivity, singular dims, foliations"},
      {"kaehler", "constant-angle subspaces of C^(n-1) and their trigonometric bases"},
      {"parabolic-structure", "Langlands splits q = l + n and nilpotency degrees"},
  };
}

std::vector<int> suite_default_n(const std::string& suite) {
  if (suite == "roots-su1n") return {2, 3, 4};
  if (suite == "theorem-3-1") return {2, 3, 4};
  if (suite == "exp-closed-forms") return {2, 3, 4, 5};
  if (suite == "kaehler") return {3, 4, 5, 6};
  if (suite == "remark-4-2") return {3, 4, 5};
  return {3, 4, 5, 6};
}

Report run_suite(const SuiteConfig& config) {
  SuiteConfig cfg = config;
  if (cfg.n_range.empty()) cfg.n_range = suite_default_n(cfg.suite);
  if (cfg.samples < 1) throw UsageError("run_suite: samples must be >= 1");

  Checker ck{cfg, {}};
  if (cfg.suite == "roots-so2n") suite_roots_so2n(cfg, ck);
  else if (cfg.suite == "roots-su1n") suite_roots_su1n(cfg, ck);
  else if (cfg.suite == "exp-closed-forms") suite_exp_closed_forms(cfg, ck);
  else if (cfg.suite == "theorem-3-1") suite_theorem_3_1(cfg, ck);
  else if (cfg.suite == "prop-4-1") suite_prop_4_1(cfg, ck);
  else if (cfg.suite == "remark-4-2") suite_remark_4_2(cfg, ck);
  else if (cfg.suite == "prop-4-3") suite_prop_4_3(cfg, ck);
  else if (cfg.suite == "kaehler") suite_kaehler(cfg, ck);
  else if (cfg.suite == "parabolic-structure") suite_parabolic(cfg, ck);
  else throw UsageError("run_suite: unknown suite '" + cfg.suite + "'");

  if (ck.results.empty())
    throw UsageError("run_suite: no supported n in the requested range for '" +
                     cfg.suite + "'");

  Report report;
  report.config = cfg;
  report.checks = std::move(ck.results);
  return report;
}

}  // namespace adslie
