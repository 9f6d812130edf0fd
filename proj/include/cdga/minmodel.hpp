#pragma once

// Degree-bounded Sullivan minimal models, s-formality and formality
// verdicts.
//
// Construction for a cohomologically 1-connected target T, degree by
// degree for k = 2..D:
//   (a) closed generators c with psi(c) = canonical representatives of the
//       target classes outside the image of H^k(psi);
//   (b) generators v of degree k with dv = z for a basis [z] of the kernel
//       of H^{k+1}(psi), and psi(v) = canonical primitive of psi(z).
// Because there are no generators of degree 1, step (b) adds no new
// cochains in degree k+1, so H^k(psi) is an isomorphism for k <= D and
// injective for k = D+1 once the loop ends.

#include <optional>
#include <string>
#include <vector>

#include "cdga/json_io.hpp"
#include "cdga/massey.hpp"
#include "cdga/morphism.hpp"

namespace cdga {

struct MinimalModel {
  CohomologyRing target;
  int bound = 0;
  AlgebraPtr model;
  /// psi as elements of the target algebra, one per model generator.
  std::vector<Element> psi;
  /// Per degree: C^i as combinations of generators (model elements) and the
  /// generators spanning N^i.
  std::map<int, std::vector<Element>> closed_part;
  std::map<int, std::vector<std::size_t>> n_generators;
  /// True when the target was already a minimal algebra and is returned as
  /// its own model.
  bool identity = false;

  Element apply_psi(const Element& e) const { return apply(Morphism{model, target.algebra(), psi}, e); }

  std::size_t n_dim(int i) const {
    auto it = n_generators.find(i);
    return it == n_generators.end() ? 0 : it->second.size();
  }
};

namespace detail {

/// Sullivan condition by declaration order: d(g_i) only involves g_j, j < i.
inline bool is_ordered_minimal(const AlgebraSpec& alg) {
  if (alg.has_relations() || !alg.flags().is_minimal) return false;
  for (std::size_t i = 0; i < alg.num_generators(); ++i)
    for (const auto& [m, c] : alg.differential_of(i).terms)
      for (std::size_t j = i; j < m.size(); ++j)
        if (m[j]) return false;
  return true;
}

/// C^i = kernel of d on V^i, N^i = generators at non-pivot positions.
inline void split_cn(MinimalModel& mm) {
  const AlgebraSpec& alg = *mm.model;
  std::map<int, std::vector<std::size_t>> by_degree;
  for (std::size_t g = 0; g < alg.num_generators(); ++g) by_degree[alg.generator_degree(g)].push_back(g);
  for (const auto& [deg, gens] : by_degree) {
    const int tgt = deg + 1;
    std::vector<std::vector<CycScalar>> rows;
    std::size_t width = tgt <= alg.degree_cap() ? alg.dim(tgt) : 0;
    for (auto g : gens) {
      if (width == 0) {
        rows.emplace_back();
        continue;
      }
      rows.push_back(alg.coords(alg.differential_of(g)));
    }
    Matrix<CycScalar> m(gens.size(), width, alg.zero_scalar());
    for (std::size_t r = 0; r < gens.size(); ++r)
      if (width) m.set_row(r, rows[r]);
    const Matrix<CycScalar> ker = kernel(m);
    const auto e = row_reduce(ker);
    std::vector<bool> pivot(gens.size(), false);
    for (auto p : e.pivots) pivot[p] = true;
    auto& cl = mm.closed_part[deg];
    for (std::size_t r = 0; r < e.rank(); ++r) {
      Element c = alg.zero(deg);
      for (std::size_t q = 0; q < gens.size(); ++q)
        if (!e.rows(r, q).is_zero()) c = c + e.rows(r, q) * alg.generator_element(gens[q]);
      cl.push_back(c);
    }
    for (std::size_t q = 0; q < gens.size(); ++q)
      if (!pivot[q]) mm.n_generators[deg].push_back(gens[q]);
  }
}

}  // namespace detail

/// build_minimal_model for the ring's underlying complex (full algebra or
/// invariant subcomplex). Needs target.max_degree() >= D + 1.
inline MinimalModel build_minimal_model(const CohomologyRing& target, int D, std::optional<int> extra_cap = std::nullopt) {
  const AlgebraPtr& talg = target.algebra();
  MinimalModel mm{target, D, nullptr, {}, {}, {}, false};

  if (target.space().is_full() && detail::is_ordered_minimal(*talg)) {
    mm.model = talg;
    mm.identity = true;
    for (std::size_t g = 0; g < talg->num_generators(); ++g) mm.psi.push_back(talg->generator_element(g));
    detail::split_cn(mm);
    return mm;
  }
  if (D < 1) throw Error(ErrorCode::InvalidArgument, "bound must be positive");
  if (target.max_degree() < D + 1)
    throw Error(ErrorCode::CapTooLow, "target cohomology needed through degree " + std::to_string(D + 1) +
                                          "; raise the degree cap to at least " + std::to_string(D + 2));
  if (target.betti(0) != 1 || target.betti(1) != 0)
    throw Error(ErrorCode::NotOneConnected, "H^0 has dimension " + std::to_string(target.betti(0)) +
                                                " and H^1 has dimension " + std::to_string(target.betti(1)));

  const int cap = std::max(D + 2, extra_cap.value_or(0));
  AlgebraSpecData data;
  data.zeta = talg->modulus();
  data.degree_cap = cap;
  std::vector<ElementExpr> psi_exprs;
  auto rebuild = [&] { mm.model = validate(data); };
  rebuild();

  auto psi_matrix = [&](const CohomologyRing& hm, int k) {
    Matrix<CycScalar> m(hm.betti(k), target.betti(k), talg->zero_scalar());
    for (std::size_t i = 0; i < hm.betti(k); ++i)
      m.set_row(i, target.class_of(mm.apply_psi(hm.reps(k)[i])).coords);
    return m;
  };

  for (int k = 2; k <= D; ++k) {
    // (a) closed generators for the cokernel of H^k(psi).
    {
      const CohomologyRing hm = cohomology(mm.model, k);
      const Matrix<CycScalar> m = psi_matrix(hm, k);
      Matrix<CycScalar> span = m;
      std::size_t r = rank(span);
      int count = 0;
      for (std::size_t i = 0; i < target.betti(k); ++i) {
        Matrix<CycScalar> trial = span;
        trial.append_row(target.basis_class(k, i).coords);
        const std::size_t tr = rank(trial);
        if (tr == r) continue;
        span = std::move(trial);
        r = tr;
        const std::string name = "c" + std::to_string(k) + "_" + std::to_string(++count);
        data.generators.push_back({name, k, std::nullopt});
        mm.psi.push_back(target.reps(k)[i]);
      }
      if (count) rebuild();
    }
    // (b) generators killing the kernel of H^{k+1}(psi).
    {
      const CohomologyRing hm = cohomology(mm.model, k + 1);
      const Matrix<CycScalar> m = psi_matrix(hm, k + 1);
      const Matrix<CycScalar> ker = kernel(m);
      int count = 0;
      std::vector<std::pair<std::string, Element>> added;
      for (std::size_t r = 0; r < ker.rows(); ++r) {
        Element z = mm.model->zero(k + 1);
        for (std::size_t i = 0; i < ker.cols(); ++i)
          if (!ker(r, i).is_zero()) z = z + ker(r, i) * hm.reps(k + 1)[i];
        auto prim = target.primitive(mm.apply_psi(z));
        if (!prim) throw Error(ErrorCode::InvalidArgument, "internal: kernel class maps to a non-exact element");
        const std::string name = "n" + std::to_string(k) + "_" + std::to_string(++count);
        data.generators.push_back({name, k, std::nullopt});
        data.differential[name] = to_expr(z);
        added.emplace_back(name, *prim);
      }
      for (auto& [name, img] : added) mm.psi.push_back(img);
      if (count) rebuild();
    }
  }
  detail::split_cn(mm);
  return mm;
}

// ---------------------------------------------------------------------------
// s-formality

enum class SFormalStatus { Certified, Refuted, Inconclusive };

constexpr std::string_view to_string(SFormalStatus s) {
  switch (s) {
    case SFormalStatus::Certified: return "CERTIFIED";
    case SFormalStatus::Refuted: return "REFUTED";
    case SFormalStatus::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

struct SFormalityResult {
  SFormalStatus status = SFormalStatus::Inconclusive;
  int s = 0;
  /// "NO_N" when N^i = 0 for i <= s, "IDEAL_CHECK" otherwise.
  std::string route;
  std::optional<Element> witness;
  int checked_through = 0;
  std::string note;
};

/// s_formality_check. Closed elements of I_s are examined degree by degree
/// up to `top` (a Poincare dimension: above it every closed element is
/// exact), or up to the top degree of L(V^{<=s}) when that is finite.
/// Exactness in the truncated model is conclusive through degree bound + 1.
inline SFormalityResult s_formality_check(const MinimalModel& mm, int s, std::optional<int> top = std::nullopt) {
  SFormalityResult res;
  res.s = s;
  if (s > mm.bound && !mm.identity)
    throw Error(ErrorCode::InvalidArgument, "s exceeds the model bound");
  bool any_n = false;
  for (int i = 1; i <= s; ++i) any_n = any_n || mm.n_dim(i) > 0;
  if (!any_n) {
    res.status = SFormalStatus::Certified;
    res.route = "NO_N";
    res.note = "N^i = 0 for i <= " + std::to_string(s);
    return res;
  }
  res.route = "IDEAL_CHECK";
  const AlgebraSpec& alg = *mm.model;

  // Generators of degree <= s, and which of them lie in N.
  std::vector<bool> low(alg.num_generators(), false), in_n(alg.num_generators(), false);
  bool low_has_even = false;
  int low_odd_total = 0;
  for (std::size_t g = 0; g < alg.num_generators(); ++g) {
    const int d = alg.generator_degree(g);
    if (d > s) continue;
    low[g] = true;
    if (d % 2 == 0)
      low_has_even = true;
    else
      low_odd_total += d;
  }
  for (const auto& [deg, gens] : mm.n_generators)
    if (deg <= s)
      for (auto g : gens) in_n[g] = true;

  std::optional<int> limit = top;
  if (!low_has_even) limit = limit ? std::min(*limit, low_odd_total) : low_odd_total;
  const int conclusive = mm.identity ? alg.degree_cap() - 1 : mm.bound + 1;
  int last = limit ? *limit : conclusive;
  last = std::min(last, alg.degree_cap() - 1);
  const CohomologyRing hm = cohomology(mm.model, std::max(0, std::min(last, alg.degree_cap() - 1)));

  bool inconclusive = !limit || last < *limit;
  for (int k = 1; k <= last; ++k) {
    // Span of monomials in V^{<=s} containing an N generator.
    std::vector<Monomial> ideal;
    for (const auto& m : basis(alg, k)) {
      bool ok = true, has_n = false;
      for (std::size_t g = 0; g < m.size(); ++g) {
        if (!m[g]) continue;
        if (!low[g]) ok = false;
        if (in_n[g]) has_n = true;
      }
      if (ok && has_n) ideal.push_back(m);
    }
    if (ideal.empty()) continue;
    Matrix<CycScalar> dm(ideal.size(), alg.dim(k + 1), alg.zero_scalar());
    for (std::size_t i = 0; i < ideal.size(); ++i)
      dm.set_row(i, alg.coords(elem_d(monomial_element(alg, ideal[i], alg.one_scalar()))));
    const Matrix<CycScalar> closed = kernel(dm);
    for (std::size_t r = 0; r < closed.rows(); ++r) {
      Element z = alg.zero(k);
      for (std::size_t i = 0; i < ideal.size(); ++i)
        if (!closed(r, i).is_zero()) z = z + closed(r, i) * monomial_element(alg, ideal[i], alg.one_scalar());
      if (hm.class_of(z).is_zero()) continue;
      if (k <= conclusive) {
        res.status = SFormalStatus::Refuted;
        res.witness = z;
        res.checked_through = k;
        res.note = "closed element of I_s that is not exact";
        return res;
      }
      inconclusive = true;
    }
    res.checked_through = k;
  }
  if (inconclusive) {
    res.note = "ideal checked through degree " + std::to_string(res.checked_through) + " only";
    return res;
  }
  res.status = SFormalStatus::Certified;
  res.note = "every closed element of I_s is exact through degree " + std::to_string(res.checked_through);
  return res;
}

// ---------------------------------------------------------------------------
// Formality verdict

enum class Formality { Formal, NotFormal, Unknown };

constexpr std::string_view to_string(Formality f) {
  switch (f) {
    case Formality::Formal: return "FORMAL";
    case Formality::NotFormal: return "NOT_FORMAL";
    case Formality::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

struct FormalityOptions {
  std::optional<int> poincare_dim;
  bool simply_connected = false;
  /// Maximum number of basis Massey products scanned.
  std::size_t scan_budget = 200;
  MasseyOptions massey;
};

struct FormalityVerdict {
  Formality verdict = Formality::Unknown;
  /// Short machine-readable route, e.g. "MASSEY", "S_FORMAL", "DIM_LE_6",
  /// "ZERO_DIFFERENTIAL".
  std::string route;
  std::string certificate;
  std::optional<MasseyReport> massey_witness;
  std::optional<SFormalityResult> s_formality;
  std::optional<MinimalModel> model;
  std::size_t products_scanned = 0;
};

namespace detail {

inline std::optional<MasseyReport> scan_candidates(const Bundle& b, const CohomologyRing& h, const MasseyOptions& mo) {
  for (const auto& c : b.candidates) {
    std::vector<Element> els;
    for (const auto& n : c.classes) els.push_back(b.cls(n));
    MasseyReport r;
    if (c.kind == "triple" && els.size() == 3)
      r = triple_massey(h, els[0], els[1], els[2]);
    else if (c.kind == "amassey" && els.size() >= 2)
      r = a_massey(h, els[0], std::vector<Element>(els.begin() + 1, els.end()), mo);
    else if (c.kind == "higher" && els.size() >= 4)
      r = higher_massey(h, els, mo);
    else
      throw Error(ErrorCode::InvalidArgument, "bad candidate of kind '" + c.kind + "'");
    if (r.defined && r.verdict == Verdict::Nonzero) return r;
  }
  return std::nullopt;
}

/// Triple products of basis representatives, then two-term a-Massey
/// products, in increasing degree order.
inline std::optional<MasseyReport> scan_basis(const CohomologyRing& h, std::size_t budget, std::size_t& scanned,
                                              const MasseyOptions& mo) {
  const int top = h.max_degree();
  for (int total = 3; total <= top + 1; ++total)
    for (int p = 1; p < total; ++p)
      for (int q = 1; p + q < total; ++q) {
        const int r = total - p - q;
        if (h.betti(p) == 0 || h.betti(q) == 0 || h.betti(r) == 0) continue;
        for (std::size_t i = 0; i < h.betti(p); ++i)
          for (std::size_t j = 0; j < h.betti(q); ++j)
            for (std::size_t l = 0; l < h.betti(r); ++l) {
              if (scanned >= budget) return std::nullopt;
              ++scanned;
              auto rep = triple_massey(h, h.reps(p)[i], h.reps(q)[j], h.reps(r)[l]);
              if (rep.defined && rep.verdict == Verdict::Nonzero) return rep;
            }
      }
  for (int pa = 2; pa <= top; pa += 2)
    for (std::size_t ia = 0; ia < h.betti(pa); ++ia)
      for (int p1 = 1; p1 <= top; ++p1)
        for (int p2 = p1; p2 <= top; ++p2) {
          if (p1 + p2 + pa - 1 > top) continue;
          for (std::size_t i = 0; i < h.betti(p1); ++i)
            for (std::size_t j = 0; j < h.betti(p2); ++j) {
              if (scanned >= budget) return std::nullopt;
              ++scanned;
              auto rep = a_massey(h, h.reps(pa)[ia], {h.reps(p1)[i], h.reps(p2)[j]}, mo);
              if (rep.defined && rep.verdict == Verdict::Nonzero) return rep;
            }
        }
  return std::nullopt;
}

inline bool zero_differential(const AlgebraSpec& alg) {
  for (std::size_t g = 0; g < alg.num_generators(); ++g)
    if (!alg.differential_of(g).is_zero()) return false;
  return true;
}

}  // namespace detail

/// formality_verdict. Order of checks: Massey products (preset candidates,
/// then a budgeted basis scan); the dimension <= 6 rule for simply
/// connected spaces; zero differential; s-formality of the minimal model
/// with s = ceil(dim/2) - 1 when a Poincare dimension is known.
inline FormalityVerdict formality_verdict(const Bundle& b, const FormalityOptions& opt) {
  FormalityVerdict v;
  const CohomologyRing h = bundle_cohomology(b);
  if (auto w = detail::scan_candidates(b, h, opt.massey)) {
    v.verdict = Formality::NotFormal;
    v.route = "MASSEY";
    v.certificate = "nonzero " + w->kind + " Massey product";
    v.massey_witness = w;
    return v;
  }
  if (auto w = detail::scan_basis(h, opt.scan_budget, v.products_scanned, opt.massey)) {
    v.verdict = Formality::NotFormal;
    v.route = "MASSEY";
    v.certificate = "nonzero " + w->kind + " Massey product of basis classes";
    v.massey_witness = w;
    return v;
  }
  const std::optional<int> dim = opt.poincare_dim ? opt.poincare_dim : b.poincare_dim;
  const bool sc = opt.simply_connected || b.simply_connected;
  if (sc && dim && *dim <= 6) {
    v.verdict = Formality::Formal;
    v.route = "DIM_LE_6";
    v.certificate = "simply connected of dimension " + std::to_string(*dim) + " <= 6";
    return v;
  }
  if (detail::zero_differential(*b.algebra)) {
    v.verdict = Formality::Formal;
    v.route = "ZERO_DIFFERENTIAL";
    v.certificate = "the algebra is its own cohomology";
    return v;
  }
  if (dim && h.betti(0) == 1 && h.betti(1) == 0) {
    const int s = (*dim + 1) / 2 - 1;
    const int D = std::min(*dim - 1, h.max_degree() - 1);
    if (D >= std::max(s, 2)) {
      MinimalModel mm = build_minimal_model(h, D, *dim + 1);
      SFormalityResult sf = s_formality_check(mm, s, *dim);
      v.s_formality = sf;
      v.model = mm;
      if (sf.status == SFormalStatus::Certified) {
        v.verdict = Formality::Formal;
        v.route = "S_FORMAL";
        v.certificate = std::to_string(s) + "-formal (" + sf.route + ") and Poincare dimension " +
                        std::to_string(*dim);
        return v;
      }
      if (sf.status == SFormalStatus::Refuted) {
        v.verdict = Formality::NotFormal;
        v.route = "S_FORMAL";
        v.certificate = "not " + std::to_string(s) + "-formal";
        return v;
      }
    }
  }
  v.route = "NONE";
  return v;
}

}  // namespace cdga
