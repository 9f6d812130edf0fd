#pragma once

// Randomized invariant checks shared by the unit tests and `verify-paper`.
// Each check draws `cases` inputs from a seeded generator and counts
// failures; the first failure is described for diagnostics.

#include <cstdint>
#include <string>
#include <vector>

#include "cdga/lefschetz.hpp"
#include "cdga/massey.hpp"
#include "cdga/minmodel.hpp"
#include "cdga/random_cdga.hpp"

namespace cdga {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0; }
  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

namespace detail {

/// Mix of random Sullivan algebras and fixed presets with relations.
inline AlgebraPtr random_algebra(CdgaGenerator& gen) {
  static const std::vector<AlgebraPtr> fixed = [] {
    std::vector<AlgebraPtr> v;
    v.push_back(preset("SASAKI7_S2CUBE").algebra);
    v.push_back(preset("CPN", 3).algebra);
    v.push_back(preset("HEIS6").algebra);
    v.push_back(preset("SASAKI_CPN_S2", 3).algebra);
    return v;
  }();
  if (gen.coin(0.25)) return fixed[static_cast<std::size_t>(gen.uniform(0, static_cast<int>(fixed.size()) - 1))];
  return gen.sullivan().algebra;
}

inline int parity_sign(int e) { return e % 2 ? -1 : 1; }

inline bool in_span(std::vector<CycScalar> v, const std::vector<std::vector<CycScalar>>& rows, const CycScalar& zero) {
  const auto e = span_of(rows, v.size(), zero);
  reduce_against(v, e.rows, e.pivots);
  return is_zero_vector(v);
}

inline CohomologyClass random_class(CdgaGenerator& gen, const CohomologyRing& h, int k) {
  CohomologyClass c = h.zero_class(k);
  for (auto& x : c.coords) x = gen.scalar(h.algebra()->modulus());
  return c;
}

}  // namespace detail

inline PropertyResult check_koszul(std::uint64_t seed, std::size_t cases) {
  PropertyResult res{"Koszul sign law", 0, 0, {}};
  CdgaGenerator gen(seed);
  while (res.cases < cases) {
    const AlgebraPtr alg = detail::random_algebra(gen);
    const int cap = alg->degree_cap();
    const int p = gen.uniform(0, cap), q = gen.uniform(0, cap - p);
    const Element x = gen.element(*alg, p), y = gen.element(*alg, q);
    ++res.cases;
    if (x * y != CycScalar(static_cast<long>(detail::parity_sign(p * q))) * (y * x))
      res.fail("xy != (-1)^{pq} yx for x = " + to_string(x) + ", y = " + to_string(y));
  }
  return res;
}

inline PropertyResult check_leibniz(std::uint64_t seed, std::size_t cases) {
  PropertyResult res{"Leibniz rule", 0, 0, {}};
  CdgaGenerator gen(seed);
  while (res.cases < cases) {
    const AlgebraPtr alg = detail::random_algebra(gen);
    const int cap = alg->degree_cap();
    const int p = gen.uniform(0, cap - 1), q = gen.uniform(0, cap - 1 - p);
    const Element x = gen.element(*alg, p), y = gen.element(*alg, q);
    ++res.cases;
    const Element lhs = elem_d(x * y);
    const Element rhs = elem_d(x) * y + CycScalar(static_cast<long>(detail::parity_sign(p))) * (x * elem_d(y));
    if (lhs != rhs) res.fail("d(xy) mismatch for x = " + to_string(x) + ", y = " + to_string(y));
  }
  return res;
}

inline PropertyResult check_d_squared(std::uint64_t seed, std::size_t cases) {
  PropertyResult res{"d^2 = 0", 0, 0, {}};
  CdgaGenerator gen(seed);
  while (res.cases < cases) {
    const AlgebraPtr alg = detail::random_algebra(gen);
    const int p = gen.uniform(0, alg->degree_cap() - 2);
    const Element x = gen.element(*alg, p);
    ++res.cases;
    if (!elem_d(elem_d(x)).is_zero()) res.fail("d^2 x != 0 for x = " + to_string(x));
  }
  return res;
}

/// [(z1 + d b1)(z2 + d b2)] = [z1][z2].
inline PropertyResult check_cup_well_defined(std::uint64_t seed, std::size_t cases) {
  PropertyResult res{"cup product independent of representatives", 0, 0, {}};
  CdgaGenerator gen(seed);
  while (res.cases < cases) {
    const AlgebraPtr alg = detail::random_algebra(gen);
    const CohomologyRing h = cohomology(alg, alg->degree_cap() - 1);
    const int top = h.max_degree();
    for (int rep = 0; rep < 8 && res.cases < cases; ++rep) {
      const int p = gen.uniform(0, top), q = gen.uniform(0, top - p);
      const CohomologyClass u = detail::random_class(gen, h, p), v = detail::random_class(gen, h, q);
      Element z1 = h.representative(u), z2 = h.representative(v);
      if (p > 0) z1 = z1 + elem_d(gen.element(*alg, p - 1));
      if (q > 0) z2 = z2 + elem_d(gen.element(*alg, q - 1));
      ++res.cases;
      if (h.class_of(z1 * z2).coords != h.cup(u, v).coords)
        res.fail("cup depends on representatives in degrees " + std::to_string(p) + ", " + std::to_string(q));
    }
  }
  return res;
}

/// P^2 = P and P d = d P for the averaging projector.
inline PropertyResult check_projector(std::uint64_t seed, std::size_t cases) {
  PropertyResult res{"projector identities P^2 = P, Pd = dP", 0, 0, {}};
  CdgaGenerator gen(seed);
  while (res.cases < cases) {
    const RandomCdga r = gen.sullivan();
    if (!r.action) continue;
    const CochainSpace full(r.algebra);
    const int cap = r.algebra->degree_cap();
    const int k = gen.uniform(0, cap - 1);
    const Matrix<CycScalar> pk = projector_matrix(*r.action, k), pk1 = projector_matrix(*r.action, k + 1);
    const Matrix<CycScalar> dk = differential_matrix(full, k);
    ++res.cases;
    if (!(pk * pk == pk)) res.fail("P^2 != P in degree " + std::to_string(k));
    else if (!(pk * dk == dk * pk1)) res.fail("Pd != dP in degree " + std::to_string(k));
  }
  return res;
}

/// dim H^k(A^G) equals the rank of the averaged induced action on H^k(A).
inline PropertyResult check_invariant_cohomology(std::uint64_t seed, std::size_t cases) {
  PropertyResult res{"dim H(A^G) = dim H(A)^G", 0, 0, {}};
  CdgaGenerator gen(seed);
  while (res.cases < cases) {
    const RandomCdga r = gen.sullivan();
    if (!r.action) continue;
    const int md = r.algebra->degree_cap() - 1;
    const CohomologyRing h = cohomology(r.algebra, md);
    const CohomologyRing hg = invariant_cohomology(*r.action, md);
    ++res.cases;
    for (int k = 0; k <= md; ++k) {
      const std::size_t b = h.betti(k);
      const CycScalar zero = r.algebra->zero_scalar();
      Matrix<CycScalar> avg(b, b, zero);
      for (int j = 0; j < r.action->order; ++j) {
        const Morphism pj = action_power(*r.action, j);
        for (std::size_t i = 0; i < b; ++i) {
          const auto c = h.class_of(apply(pj, h.reps(k)[i])).coords;
          for (std::size_t q = 0; q < b; ++q) avg(i, q) += c[q];
        }
      }
      if (rank(avg) != hg.betti(k)) {
        res.fail("degree " + std::to_string(k) + ": invariant rank " + std::to_string(rank(avg)) + " vs " +
                 std::to_string(hg.betti(k)));
        break;
      }
    }
  }
  return res;
}

/// Changing cocycles by coboundaries and primitives by cocycles moves a
/// triple Massey representative only within the indeterminacy.
inline PropertyResult check_massey_stability(std::uint64_t seed, std::size_t cases) {
  PropertyResult res{"triple Massey stable modulo indeterminacy", 0, 0, {}};
  CdgaGenerator gen(seed);
  static const std::vector<Bundle> fixed = {preset("HEIS6"), preset("SASAKI7_S2CUBE"), preset("P_OVER_T6Z2"),
                                            preset("SASAKI_S2N", 4)};
  std::size_t attempts = 0;
  while (res.cases < cases && attempts < 200 * cases) {
    ++attempts;
    const bool use_fixed = gen.coin(0.3);
    const Bundle* fb = use_fixed ? &fixed[static_cast<std::size_t>(gen.uniform(0, 3))] : nullptr;
    const AlgebraPtr alg = fb ? fb->algebra : gen.sullivan(5, 6).algebra;
    const CohomologyRing h = fb ? bundle_cohomology(*fb) : cohomology(alg, alg->degree_cap() - 1);
    for (int rep = 0; rep < 10 && res.cases < cases; ++rep) {
      int p[3];
      bool ok = true;
      for (int& x : p) {
        x = gen.uniform(1, 2);
        ok = ok && h.betti(x) > 0;
      }
      if (!ok || p[0] + p[1] + p[2] - 1 > h.max_degree()) continue;
      Element a[3] = {h.representative(detail::random_class(gen, h, p[0])),
                      h.representative(detail::random_class(gen, h, p[1])),
                      h.representative(detail::random_class(gen, h, p[2]))};
      const MasseyReport r = triple_massey(h, a[0], a[1], a[2]);
      if (!r.defined) continue;
      ++res.cases;
      const CycScalar zero = alg->zero_scalar();
      // Cocycles changed by coboundaries.
      Element b[3];
      for (int i = 0; i < 3; ++i)
        b[i] = a[i] + (h.space().is_full() ? elem_d(gen.element(*alg, p[i] - 1)) : alg->zero(p[i]));
      const MasseyReport r2 = triple_massey(h, b[0], b[1], b[2]);
      // Primitives changed by cocycles.
      Element a12 = r.certificate[0].second, a23 = r.certificate[1].second;
      const int d12 = p[0] + p[1] - 1, d23 = p[1] + p[2] - 1;
      for (const auto& z : h.reps(d12)) a12 = a12 + gen.scalar(alg->modulus()) * z;
      for (const auto& z : h.reps(d23)) a23 = a23 + gen.scalar(alg->modulus()) * z;
      const Element alt = a[0] * a23 + CycScalar(static_cast<long>(detail::parity_sign(p[0] + 1))) * (a12 * a[2]);
      auto diff = [&](const CohomologyClass& c) {
        std::vector<CycScalar> v = c.coords;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= r.representative.coords[i];
        return v;
      };
      if (!r2.defined || !detail::in_span(diff(r2.representative), r.indeterminacy, zero))
        res.fail("coboundary change moved the product outside the indeterminacy");
      else if (!detail::in_span(diff(h.class_of(alt)), r.indeterminacy, zero))
        res.fail("primitive change moved the product outside the indeterminacy");
    }
  }
  if (res.cases < cases) res.fail("only " + std::to_string(res.cases) + " defined products generated");
  return res;
}

/// Random nonzero u in H^k pairs nontrivially with some class of H^{n-k}.
inline PropertyResult check_poincare_pairing(std::uint64_t seed, std::size_t cases) {
  PropertyResult res{"Poincare pairing non-degenerate on HEIS6, HEIS8", 0, 0, {}};
  CdgaGenerator gen(seed);
  for (const char* id : {"HEIS6", "HEIS8"}) {
    const Bundle b = preset(id);
    const CohomologyRing h = bundle_cohomology(b);
    const int n = *b.poincare_dim;
    if (!h.pairing_ok(n)) res.fail(std::string(id) + ": pairing matrix is singular");
    std::vector<Matrix<CycScalar>> pair;
    for (int k = 0; k <= n; ++k) {
      Matrix<CycScalar> m(h.betti(k), h.betti(n - k), h.algebra()->zero_scalar());
      for (std::size_t i = 0; i < h.betti(k); ++i)
        for (std::size_t j = 0; j < h.betti(n - k); ++j)
          m(i, j) = h.integrate(h.cup(h.basis_class(k, i), h.basis_class(n - k, j)));
      pair.push_back(std::move(m));
    }
    const std::size_t target = res.cases + cases / 2 + (std::string(id) == "HEIS8" ? cases % 2 : 0);
    while (res.cases < target) {
      const int k = gen.uniform(0, n);
      const CohomologyClass u = detail::random_class(gen, h, k);
      if (u.is_zero()) continue;
      ++res.cases;
      Matrix<CycScalar> row(1, u.coords.size(), h.algebra()->zero_scalar());
      row.set_row(0, u.coords);
      const Matrix<CycScalar> prod = row * pair[static_cast<std::size_t>(k)];
      if (is_zero_vector(prod.row(0))) res.fail(std::string(id) + ": a degree-" + std::to_string(k) + " class pairs to zero");
    }
  }
  return res;
}

/// No FORMAL verdict coexists with a NONZERO Massey product.
inline PropertyResult check_formality_consistency(std::uint64_t seed, std::size_t cases) {
  PropertyResult res{"no FORMAL verdict with a NONZERO Massey product", 0, 0, {}};
  CdgaGenerator gen(seed);
  FormalityOptions opt;
  opt.scan_budget = 20;
  while (res.cases < cases) {
    Bundle b;
    b.algebra = gen.sullivan(5, 6).algebra;
    b.data = b.algebra->data();
    const CohomologyRing h = bundle_cohomology(b);
    const FormalityVerdict v = formality_verdict(b, opt);
    ++res.cases;
    if (v.verdict != Formality::Formal) continue;
    for (int t = 0; t < 6; ++t) {
      int p[3];
      bool ok = true;
      for (int& x : p) {
        x = gen.uniform(1, 2);
        ok = ok && h.betti(x) > 0;
      }
      if (!ok || p[0] + p[1] + p[2] - 1 > h.max_degree()) continue;
      const MasseyReport r = triple_massey(h, h.representative(detail::random_class(gen, h, p[0])),
                                           h.representative(detail::random_class(gen, h, p[1])),
                                           h.representative(detail::random_class(gen, h, p[2])));
      if (r.defined && r.verdict == Verdict::Nonzero) {
        res.fail("FORMAL (" + v.route + ") but a triple Massey product is nonzero");
        break;
      }
    }
  }
  return res;
}

inline std::vector<PropertyResult> run_property_suite(std::uint64_t seed, std::size_t cases) {
  return {check_koszul(seed, cases),
          check_leibniz(seed + 1, cases),
          check_d_squared(seed + 2, cases),
          check_cup_well_defined(seed + 3, cases),
          check_projector(seed + 4, cases),
          check_invariant_cohomology(seed + 5, cases),
          check_massey_stability(seed + 6, cases),
          check_poincare_pairing(seed + 7, cases),
          check_formality_consistency(seed + 8, cases)};
}

}  // namespace cdga
