#pragma once

// The preset acceptance suite run by `cdga verify-paper` and by the
// acceptance test binary. Every check is exact: comparisons are equalities
// of exact cyclotomic values, with zero tolerance.

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cdga/lefschetz.hpp"
#include "cdga/massey.hpp"
#include "cdga/minmodel.hpp"
#include "cdga/models.hpp"
#include "cdga/properties.hpp"
#include "cdga/report.hpp"

namespace cdga {

struct CriterionResult {
  int id = 0;
  std::string reference;
  bool pass = false;
  std::string detail;
  /// Sub-claims that cannot hold mathematically; reported, never counted
  /// as passing. See ERRATA.md.
  std::vector<std::string> unattainable;

  /// PASS, FAIL, or DEVIATION (every checkable claim holds and the
  /// remaining ones are shown false).
  std::string status() const { return !pass ? "FAIL" : unattainable.empty() ? "PASS" : "DEVIATION"; }
};

namespace acceptance_detail {

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass_ = false;
      failures_.push_back(what);
    }
  }
  void note(const std::string& s) { notes_.push_back(s); }
  CriterionResult finish(int id, std::string ref) const {
    std::string detail;
    for (const auto& f : failures_) detail += (detail.empty() ? "" : "; ") + std::string("FAILED: ") + f;
    for (const auto& n : notes_) detail += (detail.empty() ? "" : "; ") + n;
    return {id, std::move(ref), pass_, detail, {}};
  }

 private:
  bool pass_ = true;
  std::vector<std::string> failures_, notes_;
};

inline std::vector<std::size_t> betti_prefix(const CohomologyRing& h, int top) {
  std::vector<std::size_t> b;
  for (int k = 0; k <= top; ++k) b.push_back(h.betti(k));
  return b;
}

inline std::size_t class_rank(const CohomologyRing& h, const std::vector<Element>& els, int k) {
  Matrix<CycScalar> m(0, h.betti(k), h.algebra()->zero_scalar());
  for (const auto& e : els) m.append_row(h.class_of(e).coords);
  return rank(m);
}

inline bool in_class_span(const CohomologyRing& h, const std::vector<CycScalar>& v,
                          const std::vector<std::vector<CycScalar>>& rows) {
  return detail::in_span(v, rows, h.algebra()->zero_scalar());
}

/// Burnside: dim H^k(M)^G = (1/m) sum_j tr(rho^j on H^k(M)).
inline std::vector<std::size_t> burnside_betti(const GroupAction& act, const CohomologyRing& h, int top) {
  std::vector<std::size_t> out;
  for (int k = 0; k <= top; ++k) {
    CycScalar tr = CycScalar::zero(act.parent->modulus());
    for (int j = 0; j < act.order; ++j) {
      const Morphism pj = action_power(act, j);
      for (std::size_t i = 0; i < h.betti(k); ++i) tr += h.class_of(apply(pj, h.reps(k)[i])).coords[i];
    }
    tr = tr * CycScalar(Rational(1, act.order));
    out.push_back(tr.is_rational() ? tr.coeffs()[0].get_num().get_ui() : static_cast<std::size_t>(-1));
  }
  return out;
}

}  // namespace acceptance_detail

inline CriterionResult criterion_1() {
  acceptance_detail::Checker c;
  const CohomologyRing h = bundle_cohomology(preset("HEIS6"));
  const auto b = acceptance_detail::betti_prefix(h, 6);
  c.expect(b == std::vector<std::size_t>{1, 4, 8, 10, 8, 4, 1}, "Betti(HEIS6) = " + betti_string(b));
  c.note("Betti " + betti_string(b));
  return c.finish(1, "Nomizu table, 6-dim nilmanifold");
}

inline CriterionResult criterion_2() {
  acceptance_detail::Checker c;
  const Bundle b = preset("HEIS6_Z6");
  const CohomologyRing h = bundle_cohomology(b);
  const auto bt = acceptance_detail::betti_prefix(h, 6);
  c.expect(bt == std::vector<std::size_t>{1, 0, 4, 0, 4, 0, 1}, "invariant Betti = " + betti_string(bt));
  std::vector<Element> listed;
  for (const char* n : {"mu_mubar", "nu_nubar", "nu_theta", "nubar_thetabar"}) listed.push_back(b.cls(n));
  const std::size_t r = acceptance_detail::class_rank(h, listed, 2);
  c.expect(r == 4, "listed degree-2 classes span rank " + std::to_string(r));
  const CohomologyRing full = cohomology(b.algebra, 6);
  const auto burn = acceptance_detail::burnside_betti(*b.action, full, 6);
  c.expect(burn == bt, "Burnside trace oracle gives " + betti_string(burn));
  c.note("Betti " + betti_string(bt) + ", Burnside " + betti_string(burn));
  return c.finish(2, "Orbifold cohomology of the Z6 quotient");
}

inline CriterionResult criterion_3() {
  acceptance_detail::Checker c;
  for (auto [id, n] : {std::pair<const char*, int>{"HEIS6_Z6", 3}, {"HEIS8_Z3", 4}}) {
    const Bundle b = preset(id);
    const Element& w = b.cls("omega");
    const std::string tag = std::string(id) + ": ";
    c.expect(elem_d(w).is_zero(), tag + "d(omega) != 0");
    const Element top = power(w, n);
    c.expect(!top.is_zero(), tag + "omega^" + std::to_string(n) + " = 0");
    c.expect(apply(b.action->rho, w) == w, tag + "omega is not invariant");
    const CohomologyRing h = bundle_cohomology(b);
    const CycScalar vol = h.integrate(h.class_of(top));
    c.expect(!vol.is_zero(), tag + "integral of omega^n vanishes");
    c.note(tag + "omega^" + std::to_string(n) + " = " + to_string(top));
  }
  return c.finish(3, "Symplectic forms: closed, non-degenerate, invariant");
}

inline CriterionResult criterion_4() {
  acceptance_detail::Checker c;
  const Bundle b = preset("HEIS6_Z6");
  const CohomologyRing h = bundle_cohomology(b);
  const auto w = universal_lefschetz_witnesses(h, 2, 3);
  const auto nn = h.class_of(b.cls("nu_nubar"));
  c.expect(!nn.is_zero() && acceptance_detail::in_class_span(h, nn.coords, w), "[nu nubar] not in the k=2 witness space");
  const LefschetzReport lr = lefschetz_test(h, h.class_of(b.cls("omega")), 3);
  c.expect(!lr.per_degree[2].iso, "L_omega: H^2 -> H^4 is an isomorphism");
  c.note("witness space dim " + std::to_string(w.size()) + ", rank of L_omega on H^2 " +
         std::to_string(lr.per_degree[2].rank));
  return c.finish(4, "Universal hard Lefschetz failure on X6");
}

inline CriterionResult criterion_5() {
  acceptance_detail::Checker c;
  const Bundle b = preset("HEIS8_Z3");
  const CohomologyRing h = bundle_cohomology(b);
  c.expect(h.betti(3) == 0, "H^3(X8) has dimension " + std::to_string(h.betti(3)));
  const MasseyReport r = a_massey(h, b.cls("alpha"), {b.cls("beta1"), b.cls("beta2"), b.cls("beta3")}, {});
  c.expect(r.defined && r.verdict == Verdict::Nonzero, "a-Massey verdict " + std::string(to_string(r.verdict)));
  if (r.defined) {
    c.expect(r.degree == 8 && h.betti(8) == 1, "representative not in the top degree");
    const CycScalar integral = h.integrate(r.representative);
    c.expect(!integral.is_zero() && integral.is_rational(), "integral " + integral.str() + " not a nonzero rational");
    c.note("representative = " + r.representative.coords[0].str() + " * [top class], integral " + integral.str());
  }
  return c.finish(5, "8-dim non-formality via a-Massey product");
}

inline CriterionResult criterion_6() {
  acceptance_detail::Checker c;
  const Bundle b = preset("SASAKI7_S2CUBE");
  const CohomologyRing h = bundle_cohomology(b);
  const AlgebraSpec& alg = *b.algebra;
  c.expect(h.betti(3) == 0, "H^3 has dimension " + std::to_string(h.betti(3)));
  const MasseyReport r = triple_massey(h, b.cls("a1"), b.cls("a1"), b.cls("a2"));
  c.expect(r.defined && r.verdict == Verdict::Nonzero, "verdict " + std::string(to_string(r.verdict)));
  c.expect(r.indeterminacy.empty(), "indeterminacy dimension " + std::to_string(r.indeterminacy.size()));
  const Element expected =
      CycScalar(Rational(1, 2)) * (make_element(alg, {Term{1, {"a1", "a2", "x"}}}) - make_element(alg, {Term{1, {"a1", "a3", "x"}}}));
  c.expect(r.representative_element && *r.representative_element == expected,
           "representative " + (r.representative_element ? to_string(*r.representative_element) : "-"));
  if (r.representative_element) c.note("representative " + to_string(*r.representative_element));
  return c.finish(6, "Sasakian 7-manifold triple Massey product");
}

inline CriterionResult criterion_7() {
  acceptance_detail::Checker c;
  std::vector<std::string> unattainable;
  for (int n : {4, 5}) {
    const Bundle b = preset("SASAKI_S2N", n);
    const AlgebraSpec& alg = *b.algebra;
    const CohomologyRing h = bundle_cohomology(b);
    const std::string mid = "a2_to_a" + std::to_string(n - 1);
    const MasseyReport r = triple_massey(h, b.cls("a1"), b.cls("a1"), b.cls(mid));
    const std::string tag = "n=" + std::to_string(n) + ": ";
    c.expect(r.defined, tag + "product undefined: " + r.obstruction);
    if (!r.defined) continue;
    auto prod = [&](int lo, int hi, std::vector<std::string> extra) {
      std::vector<std::string> m;
      for (int i = lo; i <= hi; ++i) m.push_back("a" + std::to_string(i));
      for (auto& e : extra) m.push_back(e);
      return make_element(alg, {Term{1, m}});
    };
    // Displayed primitive of a1 a2 ... a_{n-1} and the representative it
    // produces (a1 a1 = 0, so the other primitive is 0).
    const Element prim = CycScalar(Rational(1, 2)) *
                         (prod(1, n - 2, {"x"}) + prod(2, n - 1, {"x"}) - prod(2, n - 2, {"a" + std::to_string(n), "x"}));
    c.expect(elem_d(prim) == prod(1, n - 1, {}), tag + "displayed primitive does not bound a1...a_{n-1}");
    const Element shown = prod(1, n - 1, {"x"}) - prod(1, n - 2, {"a" + std::to_string(n), "x"});
    c.expect(b.cls("a1") * prim == CycScalar(Rational(1, 2)) * shown, tag + "displayed representative mismatch");
    const CohomologyClass shown_class = h.class_of(shown);
    c.expect(!shown_class.is_zero(), tag + "displayed representative is exact");
    if (r.verdict == Verdict::Nonzero) continue;
    // The set of values contains 0: the displayed class lies in a1 H^{2n-3}.
    const bool in_ind = acceptance_detail::in_class_span(h, shown_class.coords, r.indeterminacy);
    c.expect(r.verdict == Verdict::Zero && in_ind && !r.indeterminacy.empty(),
             tag + "verdict " + std::string(to_string(r.verdict)));
    unattainable.push_back(tag + "NONZERO verdict: the displayed class lies in the indeterminacy a1 H^" +
                           std::to_string(2 * n - 3) + " (dimension " + std::to_string(r.indeterminacy.size()) +
                           "), so the product contains 0 (see ERRATA.md)");
    FormalityOptions fo;
    const FormalityVerdict fv = formality_verdict(b, fo);
    c.expect(fv.verdict == Formality::NotFormal, tag + "formality verdict " + std::string(to_string(fv.verdict)));
    c.note(tag + "non-formal via " + fv.route + " (" + fv.certificate + ")");
  }
  CriterionResult res = c.finish(7, "General-n Sasakian triple Massey product (n = 4, 5)");
  res.unattainable = std::move(unattainable);
  return res;
}

inline CriterionResult criterion_8() {
  acceptance_detail::Checker c;
  const int n = 4;
  const Bundle b = preset("SASAKI_CPN_S2", n);
  const CohomologyRing h = bundle_cohomology(b);
  const MinimalModel mm = build_minimal_model(h, 2 * n - 1, 2 * n + 2);
  const AlgebraSpec& m = *mm.model;
  std::vector<int> degs;
  for (std::size_t g = 0; g < m.num_generators(); ++g) degs.push_back(m.generator_degree(g));
  c.expect(degs == std::vector<int>{2, 3, 2 * n - 1}, "generator degrees differ from (2, 3, 7)");
  if (degs.size() == 3) {
    const Element a = m.generator_element(0);
    c.expect(m.differential_of(0).is_zero(), "d(a) != 0");
    c.expect(m.differential_of(1) == a * a, "d(b) = " + to_string(m.differential_of(1)));
    c.expect(m.differential_of(2).is_zero(), "d(z) = " + to_string(m.differential_of(2)));
  }
  const SFormalityResult sf = s_formality_check(mm, n - 1, 2 * n + 1);
  c.expect(sf.status == SFormalStatus::Certified, "s-formality for s = n-1: " + std::string(to_string(sf.status)));
  const FormalityVerdict v = formality_verdict(b, {});
  c.expect(v.verdict == Formality::Formal && v.route == "S_FORMAL", "formality verdict " + std::string(to_string(v.verdict)));
  std::ostringstream os;
  os << "model: ";
  for (std::size_t g = 0; g < m.num_generators(); ++g)
    os << (g ? ", " : "") << m.generator(g).name << "|" << m.generator_degree(g) << "| d=" << to_string(m.differential_of(g));
  os << "; s=" << n - 1 << " " << to_string(sf.status) << " via " << sf.route << "; verdict " << to_string(v.verdict)
     << " (" << v.certificate << ")";
  c.note(os.str());
  CriterionResult res = c.finish(8, "Formal Sasakian bundle and its minimal model (n = 4)");
  if (sf.route != "NO_N")
    res.unattainable.push_back("certificate route N^{<=s} = 0: N^3 is spanned by the degree-3 generator b with db = a^2 != 0, "
                               "so the certificate goes through the ideal check (see ERRATA.md)");
  return res;
}

inline CriterionResult criterion_9() {
  acceptance_detail::Checker c;
  const CohomologyRing hx = bundle_cohomology(preset("T6_Z2"));
  const auto bx = acceptance_detail::betti_prefix(hx, 6);
  c.expect(bx == std::vector<std::size_t>{1, 0, 15, 0, 15, 0, 1}, "Betti(T6/Z2) = " + betti_string(bx));
  const Bundle p = preset("P_OVER_T6Z2");
  const AlgebraSpec& alg = *p.algebra;
  const CohomologyRing h = bundle_cohomology(p);
  c.expect(h.betti(3) == 0, "H^3(P) has dimension " + std::to_string(h.betti(3)));
  const MasseyReport r = triple_massey(h, p.cls("a1"), p.cls("a1"), p.cls("a2"));
  c.expect(r.defined && r.verdict == Verdict::Nonzero, "verdict " + std::string(to_string(r.verdict)));
  c.expect(r.indeterminacy.empty(), "indeterminacy dimension " + std::to_string(r.indeterminacy.size()));
  auto mono = [&](std::vector<std::string> m) { return make_element(alg, {Term{1, std::move(m)}}); };
  const Element a1 = mono({"x1", "x2"}), a2 = mono({"x3", "x4"}), a3 = mono({"x5", "x6"}), eta = mono({"eta"});
  const Element shown = CycScalar(Rational(1, 2)) * ((a1 * a2 - a1 * a3) * eta);
  c.expect(h.class_of(*r.representative_element).coords == h.class_of(shown).coords,
           "product differs from [1/2 (a1a2 - a1a3) eta]");
  c.note("Betti(X) " + betti_string(bx) + "; representative " + to_string(*r.representative_element));
  return c.finish(9, "Quasi-regular Sasakian example over T6/Z2");
}

inline CriterionResult criterion_10(std::size_t cases = 1000, std::uint64_t seed = 20240601) {
  acceptance_detail::Checker c;
  for (const auto& r : run_property_suite(seed, cases)) {
    c.expect(r.ok() && r.cases >= cases, r.name + " (" + std::to_string(r.failures) + " of " + std::to_string(r.cases) +
                                             " failed: " + r.first_failure + ")");
    if (r.ok()) c.note(r.name + " " + std::to_string(r.cases) + " cases");
  }
  return c.finish(10, "Property suites");
}

inline std::vector<std::function<CriterionResult()>> acceptance_suite() {
  return {criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
          criterion_6, criterion_7, criterion_8, criterion_9, [] { return criterion_10(); }};
}

/// Runs a criterion, turning an exception into a failure.
inline CriterionResult run_criterion(const std::function<CriterionResult()>& f, int id) {
  try {
    return f();
  } catch (const std::exception& e) {
    return {id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what(), {}};
  }
}

}  // namespace cdga
