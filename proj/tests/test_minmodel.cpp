#include <gtest/gtest.h>

#include "cdga/minmodel.hpp"
#include "cdga/models.hpp"

using namespace cdga;

namespace {

// Rank of H^k(psi) assembled from the model's cohomology and the target's
// class map.
std::size_t induced_rank(const MinimalModel& mm, const CohomologyRing& hm, int k) {
  Matrix<CycScalar> m(0, mm.target.betti(k), mm.model->zero_scalar());
  for (const auto& r : hm.reps(k)) m.append_row(mm.target.class_of(mm.apply_psi(r)).coords);
  return rank(m);
}

void expect_quasi_iso(const MinimalModel& mm, const std::string& label) {
  const AlgebraSpec& a = *mm.model;
  // psi is a multiplicative chain map.
  for (std::size_t g = 0; g < a.num_generators(); ++g)
    EXPECT_EQ(mm.apply_psi(elem_d(a.generator_element(g))), elem_d(mm.psi[g])) << label << " generator " << g;
  // Minimality: no linear part in any differential.
  for (std::size_t g = 0; g < a.num_generators(); ++g)
    for (const auto& [mono, c] : a.differential_of(g).terms) {
      int length = 0;
      for (auto e : mono) length += e;
      EXPECT_GE(length, 2) << label;
    }
  const CohomologyRing hm = cohomology(mm.model, mm.bound + 1);
  for (int k = 0; k <= mm.bound; ++k) {
    EXPECT_EQ(hm.betti(k), mm.target.betti(k)) << label << " degree " << k;
    EXPECT_EQ(induced_rank(mm, hm, k), mm.target.betti(k)) << label << " degree " << k;
  }
  EXPECT_EQ(induced_rank(mm, hm, mm.bound + 1), hm.betti(mm.bound + 1)) << label << " injective at D+1";
}

}  // namespace

TEST(MinimalModel, FormalSasakianBundleGenerators) {
  const Bundle b = preset("SASAKI_CPN_S2", 4);
  const CohomologyRing h = bundle_cohomology(b);
  const MinimalModel mm = build_minimal_model(h, 7, 10);
  const AlgebraSpec& a = *mm.model;
  ASSERT_EQ(a.num_generators(), 3u);
  EXPECT_EQ(a.generator_degree(0), 2);
  EXPECT_EQ(a.generator_degree(1), 3);
  EXPECT_EQ(a.generator_degree(2), 7);
  // Frozen builder output: db = a^2, dz = 0.
  const Element x = a.generator_element(0);
  EXPECT_TRUE(a.differential_of(0).is_zero());
  EXPECT_EQ(a.differential_of(1), x * x);
  EXPECT_TRUE(a.differential_of(2).is_zero());
  EXPECT_EQ(mm.n_dim(3), 1u);
  EXPECT_EQ(mm.n_dim(2), 0u);
  expect_quasi_iso(mm, "SASAKI_CPN_S2(4)");
}

TEST(MinimalModel, QuasiIsomorphismOnSeveralTargets) {
  struct Case {
    std::string id;
    std::optional<int> param;
    int bound;
  };
  for (const Case& c : {Case{"CPN", 3, 6}, Case{"SPHERE2", {}, 5}, Case{"SASAKI7_S2CUBE", {}, 6},
                        Case{"SASAKI_CPN_S2", 3, 6}, Case{"T6_Z2", {}, 2}, Case{"SASAKI_S2N", 4, 5}}) {
    const Bundle b = preset(c.id, c.param);
    const CohomologyRing h = bundle_cohomology(b);
    const MinimalModel mm = build_minimal_model(h, c.bound);
    expect_quasi_iso(mm, c.id);
  }
}

TEST(MinimalModel, AlreadyMinimalInputIsItsOwnModel) {
  const Bundle t = preset("T6");
  const MinimalModel mm = build_minimal_model(bundle_cohomology(t), 3);
  EXPECT_TRUE(mm.identity);
  EXPECT_EQ(mm.model, t.algebra);
  EXPECT_EQ(mm.n_dim(1), 0u);
  const Bundle h = preset("HEIS6");
  const MinimalModel mh = build_minimal_model(bundle_cohomology(h), 3);
  EXPECT_TRUE(mh.identity);
  // theta and thetabar are not closed, so N^1 has dimension 2.
  EXPECT_EQ(mh.n_dim(1), 2u);
  EXPECT_EQ(mh.closed_part.at(1).size(), 4u);
}

TEST(MinimalModel, Errors) {
  // Invariant target with H^1 != 0 and no shortcut: a sign action on T2.
  AlgebraSpecData d;
  d.generators = {{"x", 1, {}}, {"y", 1, {}}, {"z", 1, {}}};
  const AlgebraPtr a = validate(d);
  GroupActionData act{2, {{"z", {Term{CycScalar(-1), {"z"}}}}}};
  const CohomologyRing h = invariant_cohomology(validate_action(a, act), 3);
  try {
    build_minimal_model(h, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotOneConnected);
  }
  const Bundle s = preset("SASAKI7_S2CUBE");
  try {
    build_minimal_model(bundle_cohomology(s), 7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CapTooLow);
  }
}

TEST(MinimalModel, SFormalityRoutes) {
  // CP^2: model a, b with db = a^3, |b| = 5; N^{<=1} = 0.
  const Bundle cp = preset("CPN", 2);
  const MinimalModel mcp = build_minimal_model(bundle_cohomology(cp), 4, 5);
  const SFormalityResult r1 = s_formality_check(mcp, 1, 4);
  EXPECT_EQ(r1.status, SFormalStatus::Certified);
  EXPECT_EQ(r1.route, "NO_N");

  const Bundle f = preset("SASAKI_CPN_S2", 4);
  const MinimalModel mf = build_minimal_model(bundle_cohomology(f), 7, 10);
  for (int s : {3, 4}) {
    const SFormalityResult r = s_formality_check(mf, s, 9);
    EXPECT_EQ(r.status, SFormalStatus::Certified) << s;
    EXPECT_EQ(r.route, "IDEAL_CHECK") << s;
  }

  const Bundle n = preset("SASAKI7_S2CUBE");
  const MinimalModel mn = build_minimal_model(bundle_cohomology(n), 6);
  const SFormalityResult r3 = s_formality_check(mn, 3, 7);
  EXPECT_EQ(r3.status, SFormalStatus::Refuted);
  ASSERT_TRUE(r3.witness.has_value());
  EXPECT_TRUE(elem_d(*r3.witness).is_zero());
  EXPECT_FALSE(is_exact(mn.model, *r3.witness).has_value());

  // With the bound too small the non-exact witness sits beyond D + 1.
  const MinimalModel small = build_minimal_model(bundle_cohomology(n), 3, 8);
  EXPECT_EQ(s_formality_check(small, 3, 7).status, SFormalStatus::Inconclusive);
}

TEST(MinimalModel, FormalityVerdictRoutes) {
  struct Case {
    std::string id;
    std::optional<int> param;
    Formality verdict;
    std::string route;
  };
  for (const Case& c : {Case{"T6", {}, Formality::Formal, "ZERO_DIFFERENTIAL"},
                        Case{"T6_Z2", {}, Formality::Formal, "ZERO_DIFFERENTIAL"},
                        Case{"HEIS6_Z6", {}, Formality::Formal, "DIM_LE_6"},
                        Case{"HEIS8_Z3", {}, Formality::NotFormal, "MASSEY"},
                        Case{"HEIS6", {}, Formality::NotFormal, "MASSEY"},
                        Case{"SASAKI7_S2CUBE", {}, Formality::NotFormal, "MASSEY"},
                        Case{"P_OVER_T6Z2", {}, Formality::NotFormal, "MASSEY"},
                        Case{"SASAKI_CPN_S2", 4, Formality::Formal, "S_FORMAL"},
                        Case{"SASAKI_S2N", 4, Formality::NotFormal, "S_FORMAL"},
                        Case{"CPN", 3, Formality::Formal, "DIM_LE_6"}}) {
    const FormalityVerdict v = formality_verdict(preset(c.id, c.param), {});
    EXPECT_EQ(v.verdict, c.verdict) << c.id;
    EXPECT_EQ(v.route, c.route) << c.id;
  }
}
