#include <doctest.h>

#include "adslie/roots.hpp"

using namespace adslie;

TEST_CASE("maximal flats") {
  const auto so_flat = maximal_flat(AlgebraTag::SO2n, 4);
  CHECK(so_flat.size() == 2);
  const auto su_flat = maximal_flat(AlgebraTag::SU1n, 3);
  CHECK(su_flat.size() == 1);
  for (const auto& flat : {so_flat, su_flat})
    for (size_t i = 0; i < flat.size(); ++i)
      for (size_t j = 0; j < flat.size(); ++j)
        CHECK(flatten(bracket(flat[i], flat[j]).mat).norm() <= 1e-14);
  CHECK_THROWS_AS(maximal_flat(AlgebraTag::U1n, 3), TagError);
}

TEST_CASE("flat element acts with the stated covector values") {
  // alpha1(H_{a,b}) = -a+b on the long root generator
  const int n = 4;
  const AlgebraElement h = so2n_flat_element(0.3, 1.1, n);
  const auto a1 = closed_form_root_space(AlgebraTag::SO2n, n, so_alpha1());
  const auto br = bracket(h, a1[0]);
  CHECK((br.mat - (-0.3 + 1.1) * a1[0].mat).cwiseAbs().maxCoeff() <= 1e-12);
  const auto a2 = closed_form_root_space(AlgebraTag::SO2n, n, so_alpha2());
  CHECK((bracket(h, a2[1]).mat - 0.3 * a2[1].mat).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("so(2,3) decomposition: eight roots of multiplicity one") {
  const RootDecomposition& dec = root_decomposition(AlgebraTag::SO2n, 3);
  CHECK(dec.spaces.size() == 8);
  for (const RootSpace& s : dec.spaces) CHECK(s.multiplicity() == 1);
  CHECK(dec.zero_dim() == 2);
  CHECK(dec.k0.empty());
}

TEST_CASE("so(2,5): short roots have multiplicity three") {
  const RootDecomposition& dec = root_decomposition(AlgebraTag::SO2n, 5);
  CHECK(dec.space(so_alpha2()).multiplicity() == 3);
  CHECK(dec.space(so_alpha1_plus_alpha2()).multiplicity() == 3);
  CHECK(dec.space(so_alpha1()).multiplicity() == 1);
}

TEST_CASE("su(1,2): real multiplicities 2 and 1") {
  const RootDecomposition& dec = root_decomposition(AlgebraTag::SU1n, 2);
  CHECK(dec.space(su_alpha()).multiplicity() == 2);
  CHECK(dec.space(su_2alpha()).multiplicity() == 1);
}

TEST_CASE("bracket of root spaces lands in the sum root space") {
  const int n = 4;
  const RootDecomposition& dec = root_decomposition(AlgebraTag::SO2n, n);
  const auto& a2 = dec.space(so_alpha2());
  const auto& a12 = dec.space(so_alpha1_plus_alpha2());
  // [g_alpha2, g_{alpha1+alpha2}] lies in g_{alpha1+2alpha2}
  const auto& target = dec.space(so_alpha1_plus_2alpha2());
  Eigen::MatrixXd span(flatten(target.basis[0].mat).size(), target.multiplicity());
  for (int j = 0; j < target.multiplicity(); ++j) span.col(j) = flatten(target.basis[j].mat);
  for (const AlgebraElement& x : a2.basis)
    for (const AlgebraElement& y : a12.basis) {
      const AlgebraElement b = bracket(x, y);
      CHECK(span_residual(span, flatten(b.mat), 1.0) <= 1e-9);
    }
}

TEST_CASE("iwasawa parts and their dimensions") {
  const RootDecomposition& so = root_decomposition(AlgebraTag::SO2n, 3);
  const IwasawaParts sop = iwasawa_parts(so);
  CHECK(sop.a.dim() == 2);
  CHECK(sop.n.dim() == 4);
  CHECK(sop.k0.dim() == 0);

  const RootDecomposition& su = root_decomposition(AlgebraTag::SU1n, 3);
  const IwasawaParts sup = iwasawa_parts(su);
  CHECK(sup.n.dim() == 2 * 3 - 1);
  CHECK(sup.k0.dim() == 4);

  // k0 of so(2,n) is so(n-2)
  for (int n = 4; n <= 6; ++n) {
    const IwasawaParts p = iwasawa_parts(root_decomposition(AlgebraTag::SO2n, n));
    CHECK(p.k0.dim() == (n - 2) * (n - 3) / 2);
  }
}

TEST_CASE("dimension bookkeeping across the decomposition") {
  for (int n = 3; n <= 6; ++n) {
    const RootDecomposition& dec = root_decomposition(AlgebraTag::SO2n, n);
    int total = dec.zero_dim();
    for (const RootSpace& s : dec.spaces) total += s.multiplicity();
    CHECK(total == (n + 2) * (n + 1) / 2);
  }
  for (int n = 2; n <= 5; ++n) {
    const RootDecomposition& dec = root_decomposition(AlgebraTag::SU1n, n);
    int total = dec.zero_dim();
    for (const RootSpace& s : dec.spaces) total += s.multiplicity();
    CHECK(total == (n + 1) * (n + 1) - 1);
  }
}

TEST_CASE("closed-form root spaces match the computed ones") {
  for (int n = 3; n <= 6; ++n) {
    const RootDecomposition& dec = root_decomposition(AlgebraTag::SO2n, n);
    for (const RootSpace& s : dec.spaces) {
      const auto closed = closed_form_root_space(AlgebraTag::SO2n, n, s.label);
      REQUIRE(static_cast<int>(closed.size()) == s.multiplicity());
      Eigen::MatrixXd joint(flatten(closed[0].mat).size(), 2 * s.multiplicity());
      int col = 0;
      for (const auto& x : s.basis) joint.col(col++) = flatten(x.mat);
      for (const auto& x : closed) joint.col(col++) = flatten(x.mat);
      CHECK(numerical_rank(joint) == s.multiplicity());
    }
  }
  CHECK_THROWS_AS(closed_form_root_space(AlgebraTag::SO2n, 4, RootLabel{2, 1}),
                  ArgumentError);
}

TEST_CASE("nilpotency degrees") {
  CHECK(nilpotency_degree(iwasawa_parts(root_decomposition(AlgebraTag::SO2n, 4)).n) == 3);
  CHECK(nilpotency_degree(iwasawa_parts(root_decomposition(AlgebraTag::SU1n, 3)).n) == 2);
  CHECK(nilpotency_degree(Subalgebra(AlgebraTag::SO2n, 4,
                                     maximal_flat(AlgebraTag::SO2n, 4))) == 1);
  // a non-nilpotent algebra is flagged
  const RootDecomposition& dec = root_decomposition(AlgebraTag::SO2n, 3);
  std::vector<AlgebraElement> q = dec.flat;
  for (const auto& s : dec.spaces)
    for (const auto& x : s.basis)
      if (s.label.c1 >= 0 && (s.label.c1 > 0 || s.label.c2 > 0)) q.push_back(x);
  CHECK_THROWS_AS(nilpotency_degree(Subalgebra(AlgebraTag::SO2n, 3, q)),
                  NotNilpotentError);
}

TEST_CASE("subalgebra closure validation") {
  const int n = 3;
  const RootDecomposition& dec = root_decomposition(AlgebraTag::SO2n, n);
  // g_alpha1 + g_alpha2 alone is not closed: the bracket escapes
  std::vector<AlgebraElement> open_set;
  for (const auto& x : dec.space(so_alpha1()).basis) open_set.push_back(x);
  for (const auto& x : dec.space(so_alpha2()).basis) open_set.push_back(x);
  CHECK_THROWS_AS(Subalgebra(AlgebraTag::SO2n, n, open_set), ArgumentError);
}
