#include <gtest/gtest.h>

#include "cdga/models.hpp"
#include "cdga/random_cdga.hpp"

using namespace cdga;

namespace {

std::vector<std::size_t> betti_through(const CohomologyRing& h, int top) {
  std::vector<std::size_t> b;
  for (int k = 0; k <= top; ++k) b.push_back(h.betti(k));
  return b;
}

Element mono(const AlgebraSpec& alg, std::vector<std::string> m, CycScalar c = CycScalar(1)) {
  return make_element(alg, {Term{std::move(c), std::move(m)}});
}

// Gysin oracle for a circle bundle over a base with zero differential:
// b_k = dim coker(e: B^{k-2} -> B^k) + dim ker(e: B^{k-1} -> B^{k+1}).
// Multiplication by e is assembled from the base's monomial basis only.
std::vector<std::size_t> gysin_betti(const AlgebraPtr& base, const Element& e, int top) {
  auto mult = [&](int k) {
    Matrix<CycScalar> m(base->dim(k), k + 2 <= base->degree_cap() ? base->dim(k + 2) : 0, base->zero_scalar());
    if (m.cols() == 0) return m;
    const auto& bs = base->slice(k).standard;
    for (std::size_t i = 0; i < bs.size(); ++i)
      m.set_row(i, base->coords(monomial_element(*base, bs[i], base->one_scalar()) * e));
    return m;
  };
  auto dim_at = [&](int k) -> std::size_t { return k < 0 || k > base->degree_cap() ? 0 : base->dim(k); };
  std::vector<std::size_t> out;
  for (int k = 0; k <= top; ++k) {
    const std::size_t coker = dim_at(k) - (k >= 2 ? rank(mult(k - 2)) : 0);
    const std::size_t ker = k >= 1 ? dim_at(k - 1) - rank(mult(k - 1)) : 0;
    out.push_back(coker + ker);
  }
  return out;
}

}  // namespace

TEST(Cohomology, HeisenbergSixBetti) {
  const CohomologyRing h = bundle_cohomology(preset("HEIS6"));
  EXPECT_EQ(betti_through(h, 6), (std::vector<std::size_t>{1, 4, 8, 10, 8, 4, 1}));
  EXPECT_TRUE(h.pairing_ok(6));
}

TEST(Cohomology, HeisenbergEightSecondBettiMatchesListedBasis) {
  const CohomologyRing h = bundle_cohomology(preset("HEIS8"));
  EXPECT_EQ(h.betti(2), 17u);
  EXPECT_TRUE(h.pairing_ok(8));
}

TEST(Cohomology, TorusIsBinomial) {
  const CohomologyRing h = bundle_cohomology(preset("T6"));
  EXPECT_EQ(betti_through(h, 6), (std::vector<std::size_t>{1, 6, 15, 20, 15, 6, 1}));
}

TEST(Cohomology, EulerCharacteristicMatchesCochains) {
  CdgaGenerator gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    // Odd-only algebras with the default cap are complete complexes.
    AlgebraSpecData d = gen.sullivan(5, 5).algebra->data();
    bool odd = true;
    for (const auto& g : d.generators) odd = odd && g.degree % 2 == 1;
    if (!odd) continue;
    d.degree_cap.reset();
    const AlgebraPtr a = validate(d);
    const CohomologyRing h = cohomology(a, a->degree_cap() - 1);
    long chi_c = 0, chi_h = 0;
    for (int k = 0; k < a->degree_cap(); ++k) {
      chi_c += (k % 2 ? -1 : 1) * static_cast<long>(a->dim(k));
      chi_h += (k % 2 ? -1 : 1) * static_cast<long>(h.betti(k));
    }
    EXPECT_EQ(chi_c, chi_h);
  }
}

TEST(Cohomology, GysinOracleOnSasakianBundles) {
  struct Case {
    std::string id;
    std::optional<int> param;
  };
  for (const Case& c : {Case{"SASAKI7_S2CUBE", {}}, Case{"SASAKI_S2N", 4}, Case{"SASAKI_S2N", 5},
                        Case{"SASAKI_CPN_S2", 3}, Case{"SASAKI_CPN_S2", 4}}) {
    const Bundle b = preset(c.id, c.param);
    AlgebraSpecData base_data = b.data;
    base_data.generators.pop_back();
    base_data.differential.clear();
    const AlgebraPtr base = validate(base_data);
    Element e = base->zero(2);
    for (const auto& t : b.data.differential.at("x")) e = e + mono(*base, t.monomial, t.coeff);
    const CohomologyRing h = bundle_cohomology(b);
    const int top = *b.poincare_dim;
    EXPECT_EQ(betti_through(h, top), gysin_betti(base, e, top)) << c.id;
    EXPECT_TRUE(h.pairing_ok(top)) << c.id;
  }
}

TEST(Cohomology, BruteForceExactnessOnHeisenbergThree) {
  // L(x, y, z) with dz = xy; classes checked against an exhaustive grid.
  AlgebraSpecData d;
  d.generators = {{"x", 1, {}}, {"y", 1, {}}, {"z", 1, {}}};
  d.differential["z"] = {Term{CycScalar(1), {"x", "y"}}};
  const AlgebraPtr a = validate(d);
  const CohomologyRing h = cohomology(a, 3);
  EXPECT_EQ(betti_through(h, 3), (std::vector<std::size_t>{1, 2, 2, 1}));
  for (int k = 1; k <= 3; ++k) {
    const auto& bs = basis(*a, k);
    const auto& prev = basis(*a, k - 1);
    // All coboundaries d(b) with b in {-1,0,1}^{prev}.
    std::vector<Element> bounds;
    std::vector<int> c(prev.size(), -1);
    while (true) {
      Element b = a->zero(k - 1);
      for (std::size_t i = 0; i < prev.size(); ++i) b = b + CycScalar(static_cast<long>(c[i])) * monomial_element(*a, prev[i], 1);
      bounds.push_back(elem_d(b));
      std::size_t i = 0;
      while (i < c.size() && c[i] == 1) c[i++] = -1;
      if (i == c.size()) break;
      ++c[i];
    }
    std::vector<int> z(bs.size(), -1);
    while (true) {
      Element e = a->zero(k);
      for (std::size_t i = 0; i < bs.size(); ++i) e = e + CycScalar(static_cast<long>(z[i])) * monomial_element(*a, bs[i], 1);
      if (elem_d(e).is_zero()) {
        const bool grid_exact = std::find(bounds.begin(), bounds.end(), e) != bounds.end();
        const bool zero_class = h.class_of(e).is_zero();
        if (grid_exact) EXPECT_TRUE(zero_class) << to_string(e);
        if (zero_class) {
          auto p = h.primitive(e);
          ASSERT_TRUE(p.has_value());
          EXPECT_EQ(elem_d(*p), e);
        }
      } else {
        EXPECT_THROW(h.class_of(e), Error);
      }
      std::size_t i = 0;
      while (i < z.size() && z[i] == 1) z[i++] = -1;
      if (i == z.size()) break;
      ++z[i];
    }
  }
}

TEST(Cohomology, KunnethForTensorProducts) {
  CdgaGenerator gen(11);
  for (int trial = 0; trial < 60; ++trial) {
    const AlgebraPtr a = gen.sullivan(3, 4).algebra, b = gen.sullivan(3, 4).algebra;
    const AlgebraPtr t = tensor(a, b);
    const CohomologyRing ha = cohomology(a, 3), hb = cohomology(b, 3), ht = cohomology(t, 3);
    for (int k = 0; k <= 3; ++k) {
      std::size_t expect = 0;
      for (int i = 0; i <= k; ++i) expect += ha.betti(i) * hb.betti(k - i);
      EXPECT_EQ(ht.betti(k), expect) << "degree " << k;
    }
  }
}

TEST(Cohomology, OmegaPowersFollowTheMultinomialCount) {
  // omega = -i mu mubar + nu theta + nubar thetabar: the three 2-forms
  // commute, so omega^3 = 3! (-i) (mu mubar)(nu theta)(nubar thetabar), and
  // reordering to declaration order swaps theta past nubar once.
  const Bundle b6 = preset("HEIS6");
  const AlgebraSpec& a6 = *b6.algebra;
  const CycScalar i = CycScalar::zeta(12, 3);
  EXPECT_EQ(power(b6.cls("omega"), 3), mono(a6, {"mu", "mubar", "nu", "nubar", "theta", "thetabar"}, CycScalar(6) * i));
  // omega = i mu mubar + nu theta + nubar thetabar + i eta etabar:
  // 4! * i * i * (-1) = 24.
  const Bundle b8 = preset("HEIS8");
  EXPECT_EQ(power(b8.cls("omega"), 4),
            mono(*b8.algebra, {"mu", "mubar", "nu", "nubar", "theta", "thetabar", "eta", "etabar"}, CycScalar(24)));
}

TEST(Cohomology, CupIsGradedCommutative) {
  const CohomologyRing h = bundle_cohomology(preset("HEIS6"));
  for (std::size_t i = 0; i < h.betti(1); ++i)
    for (std::size_t j = 0; j < h.betti(2); ++j) {
      const auto u = h.basis_class(1, i), v = h.basis_class(2, j);
      EXPECT_EQ(h.cup(u, v).coords, h.cup(v, u).coords);
    }
  for (std::size_t i = 0; i < h.betti(1); ++i)
    for (std::size_t j = 0; j < h.betti(1); ++j) {
      auto uv = h.cup(h.basis_class(1, i), h.basis_class(1, j)).coords;
      auto vu = h.cup(h.basis_class(1, j), h.basis_class(1, i)).coords;
      for (auto& c : vu) c = -c;
      EXPECT_EQ(uv, vu);
    }
}

TEST(Cohomology, Errors) {
  const Bundle b = preset("SASAKI7_S2CUBE");
  EXPECT_THROW(cohomology(b.algebra, b.algebra->degree_cap()), Error);
  const CohomologyRing h = cohomology(b.algebra, 7);
  try {
    h.class_of(b.algebra->generator_element("x"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotClosed);
  }
  try {
    h.cup(h.basis_class(5, 0), h.basis_class(5, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeOverflow);
  }
  try {
    h.integrate(h.basis_class(7, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoTopDeclared);
  }
}

TEST(Cohomology, IntegrationUsesTheGroupOrderFactor) {
  const Bundle b = preset("T6_Z2");
  const CohomologyRing h = bundle_cohomology(b);
  EXPECT_EQ(h.group_order(), 2);
  const auto top = h.class_of(power(b.cls("omega"), 3));
  // omega = x1x2 + x3x4 + x5x6: omega^3 = 6 x1..x6, times |G| = 2.
  EXPECT_EQ(h.integrate(top), CycScalar(12));
  EXPECT_EQ(h.integrate(top, 1), CycScalar(6));
}

TEST(Cohomology, SphereHasTruncatedCohomology) {
  const Bundle b = preset("SPHERE2");
  const CohomologyRing h = bundle_cohomology(b);
  EXPECT_EQ(h.betti(0), 1u);
  EXPECT_EQ(h.betti(2), 1u);
  for (int k = 3; k <= h.max_degree(); ++k) EXPECT_EQ(h.betti(k), 0u);
}
