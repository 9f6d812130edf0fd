#include <gtest/gtest.h>

#include "cdga/models.hpp"
#include "cdga/random_cdga.hpp"

using namespace cdga;

namespace {

ErrorCode action_error(const AlgebraPtr& a, const GroupActionData& d) {
  try {
    validate_action(a, d);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "action validated";
  return ErrorCode::InvalidArgument;
}

ElementExpr scaled(const std::string& g, CycScalar c) { return {Term{std::move(c), {g}}}; }

std::vector<std::size_t> betti_through(const CohomologyRing& h, int top) {
  std::vector<std::size_t> b;
  for (int k = 0; k <= top; ++k) b.push_back(h.betti(k));
  return b;
}

}  // namespace

TEST(Symmetry, OrbifoldSixBettiAndListedClasses) {
  const Bundle b = preset("HEIS6_Z6");
  const CohomologyRing h = bundle_cohomology(b);
  EXPECT_EQ(betti_through(h, 6), (std::vector<std::size_t>{1, 0, 4, 0, 4, 0, 1}));
  Matrix<CycScalar> m(0, 4, h.algebra()->zero_scalar());
  for (const char* n : {"mu_mubar", "nu_nubar", "nu_theta", "nubar_thetabar"}) m.append_row(h.class_of(b.cls(n)).coords);
  EXPECT_EQ(rank(m), 4u);
}

TEST(Symmetry, OrbifoldEightBetti) {
  const CohomologyRing h = bundle_cohomology(preset("HEIS8_Z3"));
  // Frozen from the Burnside oracle below; odd Betti numbers vanish.
  EXPECT_EQ(betti_through(h, 8), (std::vector<std::size_t>{1, 0, 13, 0, 26, 0, 13, 0, 1}));
}

TEST(Symmetry, BurnsideTraceOracleOnCohomology) {
  for (const char* id : {"HEIS6_Z6", "HEIS8_Z3", "T6_Z2"}) {
    const Bundle b = preset(id);
    const int top = *b.poincare_dim;
    const CohomologyRing full = cohomology(b.algebra, top);
    const CohomologyRing inv = bundle_cohomology(b);
    for (int k = 0; k <= top; ++k) {
      CycScalar tr = CycScalar::zero(b.algebra->modulus());
      for (int j = 0; j < b.action->order; ++j) {
        const Morphism pj = action_power(*b.action, j);
        for (std::size_t i = 0; i < full.betti(k); ++i) tr += full.class_of(apply(pj, full.reps(k)[i])).coords[i];
      }
      EXPECT_EQ(tr, CycScalar(static_cast<long>(inv.betti(k) * static_cast<std::size_t>(b.action->order))))
          << id << " degree " << k;
    }
  }
}

TEST(Symmetry, DiagonalWeightCountsGiveInvariantCochains) {
  // For g -> zeta^{w_g} g the invariant cochains are spanned by monomials of
  // total weight 0 mod m; counted without any linear algebra.
  CdgaGenerator gen(3);
  int checked = 0;
  while (checked < 100) {
    const RandomCdga r = gen.sullivan();
    if (!r.action) continue;
    ++checked;
    const CochainSpace inv = invariant_complex(*r.action);
    for (int k = 0; k <= r.algebra->degree_cap(); ++k) {
      std::size_t count = 0;
      for (const auto& m : basis(*r.algebra, k)) {
        long w = 0;
        for (std::size_t i = 0; i < m.size(); ++i) w += static_cast<long>(m[i]) * r.weights[i];
        if (w % r.modulus == 0) ++count;
      }
      EXPECT_EQ(inv.dim(k), count);
    }
  }
}

TEST(Symmetry, TorusSignActionKeepsEvenSlices) {
  const CohomologyRing h = bundle_cohomology(preset("T6_Z2"));
  EXPECT_EQ(betti_through(h, 6), (std::vector<std::size_t>{1, 0, 15, 0, 15, 0, 1}));
}

TEST(Symmetry, OmegaIsInvariant) {
  for (const char* id : {"HEIS6_Z6", "HEIS8_Z3", "T6_Z2"}) {
    const Bundle b = preset(id);
    EXPECT_EQ(apply(b.action->rho, b.cls("omega")), b.cls("omega")) << id;
  }
}

TEST(Symmetry, ValidationErrors) {
  const Bundle heis = preset("HEIS6");
  const AlgebraPtr& a = heis.algebra;
  // Scaling mu alone breaks d(theta) = mu nu.
  GroupActionData not_chain{2, {{"mu", scaled("mu", CycScalar(-1))}, {"mubar", scaled("mubar", CycScalar(-1))}}};
  EXPECT_EQ(action_error(a, not_chain), ErrorCode::NotChainMap);
  // Identity declared with order 2.
  EXPECT_EQ(action_error(a, GroupActionData{2, {}}), ErrorCode::OrderMismatch);
  // A non-conjugate weight on mubar.
  const CycScalar z = CycScalar::zeta(12, 4);
  GroupActionData broken{3,
                         {{"mu", scaled("mu", z)},
                          {"mubar", scaled("mubar", z)},
                          {"theta", scaled("theta", z)},
                          {"thetabar", scaled("thetabar", z)}}};
  EXPECT_EQ(action_error(a, broken), ErrorCode::ConjugationBroken);
  GroupActionData unknown{1, {{"nope", scaled("mu", CycScalar(1))}}};
  EXPECT_EQ(action_error(a, unknown), ErrorCode::InvalidArgument);

  // Swapping a1 and a2 does not preserve the relation a1^3 = 0.
  AlgebraSpecData d;
  d.degree_cap = 6;
  d.generators = {{"a1", 2, {}}, {"a2", 2, {}}};
  d.relations = {{Term{CycScalar(1), {"a1", "a1", "a1"}}}, {Term{CycScalar(1), {"a2", "a2"}}}};
  const AlgebraPtr s = validate(d);
  GroupActionData swap{2, {{"a1", scaled("a2", CycScalar(1))}, {"a2", scaled("a1", CycScalar(1))}}};
  EXPECT_EQ(action_error(s, swap), ErrorCode::RelationsNotPreserved);
}

TEST(Symmetry, ProjectorIsIdempotentAndCommutesWithD) {
  const Bundle b = preset("HEIS6_Z6");
  const CochainSpace full(b.algebra);
  for (int k = 0; k < 6; ++k) {
    const auto p = projector_matrix(*b.action, k), p1 = projector_matrix(*b.action, k + 1);
    EXPECT_TRUE(p * p == p);
    const auto dk = differential_matrix(full, k);
    EXPECT_TRUE(p * dk == dk * p1);
  }
}
