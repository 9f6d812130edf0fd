#pragma once

// Triple, higher and a-Massey products.
//
// Inputs are closed elements (cocycles), not classes, so that defining
// systems are built from exactly the cocycles given. Primitives always come
// from CohomologyRing::primitive, which makes every representative
// reproducible. Sign conventions are those written in CONVENTIONS.md.
//
// Changing any entry of a defining system by an exact element changes the
// resulting value by an exact element, so only closed-modulo-exact
// variations (coefficients on cohomology representatives) are explored.

#include <optional>
#include <string>
#include <vector>

#include "cdga/cohomology.hpp"

namespace cdga {

enum class Verdict { Nonzero, Zero, Inconclusive };

constexpr std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Nonzero: return "NONZERO";
    case Verdict::Zero: return "ZERO";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

struct MasseyOptions {
  /// Bound on explored parameter directions (a-Massey) and on branches
  /// (higher products).
  std::size_t budget = 64;
};

struct MasseyReport {
  std::string kind;  // "triple", "higher", "amassey"
  int order = 3;
  bool defined = false;
  /// Set when undefined: what failed, plus the offending class if any.
  std::string obstruction;
  std::optional<CohomologyClass> witness;
  int degree = 0;
  std::optional<Element> representative_element;
  CohomologyClass representative;
  /// Basis (class coordinates, reduced echelon) of the indeterminacy.
  std::vector<std::vector<CycScalar>> indeterminacy;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<std::pair<std::string, Element>> certificate;
  std::string note;
};

namespace detail {


inline Element signed_(int exponent, const Element& e) { return exponent % 2 ? -e : e; }

/// Reduced echelon basis of the span of class vectors.
inline Echelon<CycScalar> span_of(const std::vector<std::vector<CycScalar>>& vs, std::size_t dim,
                                  const CycScalar& zero) {
  Matrix<CycScalar> m(0, dim, zero);
  for (const auto& v : vs) m.append_row(v);
  return row_reduce(m);
}

inline std::vector<std::vector<CycScalar>> rows_of(const Echelon<CycScalar>& e) {
  std::vector<std::vector<CycScalar>> out;
  for (std::size_t i = 0; i < e.rank(); ++i) out.push_back(e.rows.row(i));
  return out;
}

/// Solve base + sum t_k dirs[k] = 0; returns t when solvable.
inline std::optional<std::vector<CycScalar>> solve_affine_zero(const std::vector<CycScalar>& base,
                                                               const std::vector<std::vector<CycScalar>>& dirs,
                                                               const CycScalar& zero) {
  if (is_zero_vector(base)) return std::vector<CycScalar>(dirs.size(), zero);
  if (dirs.empty()) return std::nullopt;
  Matrix<CycScalar> m(0, base.size(), zero);
  for (const auto& d : dirs) m.append_row(d);
  std::vector<CycScalar> rhs;
  for (const auto& b : base) rhs.push_back(-b);
  return solve_left(m, rhs);
}

inline std::string entry_name(std::size_t i, std::size_t j) {
  return "a_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}";
}

}  // namespace detail

/// triple_massey: <[a1],[a2],[a3]> = [a1 a23 + (-1)^{p1+1} a12 a3].
inline MasseyReport triple_massey(const CohomologyRing& h, const Element& a1, const Element& a2, const Element& a3) {
  MasseyReport r;
  r.kind = "triple";
  r.order = 3;
  const auto& alg = *h.algebra();
  for (const Element* e : {&a1, &a2, &a3}) h.require_closed(*e);
  const int p1 = a1.degree, p2 = a2.degree, p3 = a3.degree;
  r.degree = p1 + p2 + p3 - 1;
  if (r.degree > h.max_degree())
    throw Error(ErrorCode::DegreeOverflow, "triple product lands in degree " + std::to_string(r.degree));
  auto a12 = h.primitive(a1 * a2);
  if (!a12) {
    r.obstruction = "[a1][a2] != 0";
    r.witness = h.class_of(a1 * a2);
    return r;
  }
  auto a23 = h.primitive(a2 * a3);
  if (!a23) {
    r.obstruction = "[a2][a3] != 0";
    r.witness = h.class_of(a2 * a3);
    return r;
  }
  r.defined = true;
  r.certificate = {{"a_{1,2}", *a12}, {"a_{2,3}", *a23}};
  Element rep = a1 * *a23 + detail::signed_(p1 + 1, *a12 * a3);
  r.representative_element = rep;
  r.representative = h.class_of(rep);

  std::vector<std::vector<CycScalar>> ind;
  const CohomologyClass u = h.class_of(a1), w = h.class_of(a3);
  for (std::size_t i = 0; i < h.betti(p2 + p3 - 1); ++i)
    ind.push_back(h.cup(u, h.basis_class(p2 + p3 - 1, i)).coords);
  for (std::size_t i = 0; i < h.betti(p1 + p2 - 1); ++i)
    ind.push_back(h.cup(h.basis_class(p1 + p2 - 1, i), w).coords);
  const auto span = detail::span_of(ind, h.betti(r.degree), alg.zero_scalar());
  r.indeterminacy = detail::rows_of(span);
  auto v = r.representative.coords;
  reduce_against(v, span.rows, span.pivots);
  r.verdict = is_zero_vector(v) ? Verdict::Zero : Verdict::Nonzero;
  return r;
}

inline MasseyReport triple_massey(const CohomologyRing& h, const CohomologyClass& u, const CohomologyClass& v,
                                  const CohomologyClass& w) {
  return triple_massey(h, h.representative(u), h.representative(v), h.representative(w));
}

namespace detail {

/// sum_i (-1)^{|xi_1|+...+|xi_{i-1}|} xi_1...xi_{i-1} b_i xi_{i+1}...xi_n.
inline Element amassey_value(const AlgebraSpec& alg, const std::vector<Element>& xi, const std::vector<Element>& bs,
                             int degree) {
  Element sum = alg.zero(degree);
  int before = 0;
  for (std::size_t i = 0; i < bs.size(); ++i) {
    Element term = alg.one();
    for (std::size_t j = 0; j < bs.size(); ++j) term = term * (j == i ? bs[j] : xi[j]);
    sum = sum + signed_(before, term);
    before += xi[i].degree;
  }
  return sum;
}

}  // namespace detail

/// a_massey: <a; b_1, ..., b_n>.
///
/// ZERO or NONZERO is definitive when the class of the canonical value is
/// zero, when every H^{|xi_i|} vanishes, or when n <= 2 (the value is then
/// affine in the choices). Otherwise the single-xi affine families are
/// searched for zero within the budget and the result is INCONCLUSIVE if
/// none contains it.
inline MasseyReport a_massey(const CohomologyRing& h, const Element& a, const std::vector<Element>& bs,
                             const MasseyOptions& opt = {}) {
  MasseyReport r;
  r.kind = "amassey";
  r.order = static_cast<int>(bs.size());
  const auto& alg = *h.algebra();
  if (a.degree % 2) throw Error(ErrorCode::OddADegree, "a has degree " + std::to_string(a.degree));
  if (bs.empty()) throw Error(ErrorCode::InvalidArgument, "a-Massey product needs at least one b");
  h.require_closed(a);
  for (const auto& b : bs) h.require_closed(b);

  std::vector<Element> xi;
  for (std::size_t i = 0; i < bs.size(); ++i) {
    auto p = h.primitive(a * bs[i]);
    if (!p) {
      r.obstruction = "[a][b" + std::to_string(i + 1) + "] != 0";
      r.witness = h.class_of(a * bs[i]);
      return r;
    }
    if (p->degree < 0) p = alg.zero(a.degree + bs[i].degree - 1);
    xi.push_back(*p);
    r.certificate.emplace_back("xi_" + std::to_string(i + 1), *p);
  }
  r.defined = true;
  r.degree = 1 - a.degree;
  for (const auto& x : xi) r.degree += x.degree;
  if (r.degree > h.max_degree())
    throw Error(ErrorCode::DegreeOverflow, "a-Massey product lands in degree " + std::to_string(r.degree));
  const Element rep = detail::amassey_value(alg, xi, bs, r.degree);
  r.representative_element = rep;
  r.representative = h.class_of(rep);

  // First-order variations xi_i -> xi_i + c, c a representative of H^{|xi_i|}.
  std::vector<std::vector<std::vector<CycScalar>>> dirs(bs.size());
  std::size_t total = 0;
  for (std::size_t i = 0; i < bs.size(); ++i) {
    const int k = xi[i].degree;
    for (std::size_t c = 0; c < h.betti(k); ++c) {
      auto varied = xi;
      varied[i] = xi[i] + h.reps(k)[c];
      const Element delta = detail::amassey_value(alg, varied, bs, r.degree) - rep;
      dirs[i].push_back(h.class_of(delta).coords);
      ++total;
    }
  }
  std::vector<std::vector<CycScalar>> all;
  for (const auto& d : dirs) all.insert(all.end(), d.begin(), d.end());
  r.indeterminacy = detail::rows_of(detail::span_of(all, h.betti(r.degree), alg.zero_scalar()));

  if (r.representative.is_zero()) {
    r.verdict = Verdict::Zero;
    return r;
  }
  if (total == 0) {
    r.verdict = Verdict::Nonzero;
    r.note = "no indeterminacy: every H^{|xi_i|} vanishes";
    return r;
  }
  if (bs.size() <= 2) {
    r.verdict = detail::solve_affine_zero(r.representative.coords, all, alg.zero_scalar()) ? Verdict::Zero
                                                                                            : Verdict::Nonzero;
    r.note = "value is affine in the choices";
    return r;
  }
  if (total > opt.budget) {
    r.note = "parameter count " + std::to_string(total) + " exceeds budget";
    return r;
  }
  for (const auto& d : dirs)
    if (detail::solve_affine_zero(r.representative.coords, d, alg.zero_scalar())) {
      r.verdict = Verdict::Zero;
      r.note = "zero reached by varying a single xi";
      return r;
    }
  r.note = "no single-xi variation reaches zero";
  return r;
}

// ---------------------------------------------------------------------------
// Higher Massey products

namespace detail {

/// Staged search for defining systems of <a_1, ..., a_t>.
///
/// Entries a_{i,j} of length l = j - i are fixed at stage l as canonical
/// primitive plus a combination of cohomology representatives. The
/// exactness conditions for the entries of length l + 1 are affine in the
/// stage-l coefficients, so each stage is an exact linear solve; the final
/// value is affine in the last-stage coefficients.
class HigherMasseySearch {
 public:
  HigherMasseySearch(const CohomologyRing& h, std::vector<Element> a, const MasseyOptions& opt)
      : h_(h), alg_(*h.algebra()), t_(a.size()), opt_(opt) {
    entries_.assign(t_, std::vector<std::optional<Element>>(t_));
    for (std::size_t i = 0; i < t_; ++i) entries_[i][i] = std::move(a[i]);
    target_degree_ = 2 - static_cast<int>(t_);
    for (std::size_t i = 0; i < t_; ++i) target_degree_ += entries_[i][i]->degree;
  }

  struct Outcome {
    bool any_defined = false;
    bool zero_found = false;
    bool definitive = true;
    bool budget_exhausted = false;
    std::optional<std::vector<CycScalar>> base;
    std::vector<std::vector<CycScalar>> family;
    std::vector<std::pair<std::string, Element>> certificate;
    std::optional<Element> representative;
    std::string undefined_reason;
    std::optional<CohomologyClass> undefined_witness;
  };

  int target_degree() const { return target_degree_; }

  Outcome run() {
    Outcome out;
    branches_ = 0;
    search(1, entries_, out);
    return out;
  }

 private:
  using Table = std::vector<std::vector<std::optional<Element>>>;

  int entry_degree(std::size_t i, std::size_t j) const {
    int d = -static_cast<int>(j - i);
    for (std::size_t k = i; k <= j; ++k) d += entries_[k][k]->degree;
    return d;
  }

  // Right-hand side of d a_{i,j} (also the final value for (0, t-1)).
  Element rhs(const Table& tab, std::size_t i, std::size_t j) const {
    Element sum = alg_.zero(entry_degree(i, j) + 1);
    for (std::size_t k = i; k < j; ++k) {
      const Element& left = *tab[i][k];
      sum = sum + signed_(left.degree, left * *tab[k + 1][j]);
    }
    return sum;
  }

  // Entries of length `len` in the table, excluding (0, t-1).
  std::vector<std::pair<std::size_t, std::size_t>> entries_of_length(std::size_t len) const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i + len < t_; ++i)
      if (!(i == 0 && i + len == t_ - 1)) out.emplace_back(i, i + len);
    return out;
  }

  // Stage `len`: the entries of length len are placed (their rhs must be
  // exact), then the coefficients on representatives are solved for so
  // that the rhs of all length len+1 entries are exact.
  void search(std::size_t len, Table tab, Outcome& out) {
    const auto cur = entries_of_length(len);
    // Base entries: canonical primitives.
    for (auto [i, j] : cur) {
      const Element s = rhs(tab, i, j);
      auto p = h_.primitive(s);
      if (!p) {
        // Only reachable for len = 1, where nothing was chosen yet.
        out.undefined_reason = "[" + std::string("a_") + std::to_string(i + 1) + "][a_" + std::to_string(j + 1) + "] != 0";
        out.undefined_witness = h_.class_of(s);
        return;
      }
      tab[i][j] = *p;
    }
    // Parameters: one coefficient per (entry of length len, representative).
    struct Param {
      std::size_t i, j;
      Element rep;
    };
    std::vector<Param> params;
    for (auto [i, j] : cur) {
      const int k = entry_degree(i, j);
      for (const auto& rep : h_.reps(k)) params.push_back({i, j, rep});
    }
    const bool last = len + 1 == t_ - 1;
    const auto next = last ? std::vector<std::pair<std::size_t, std::size_t>>{{0, t_ - 1}} : entries_of_length(len + 1);

    // Class of each next-stage rhs at the base point, and its derivative in
    // each parameter (affine since stage-len entries meet only fixed ones).
    std::vector<CycScalar> base;
    std::vector<std::vector<CycScalar>> dirs(params.size());
    for (auto [i, j] : next) {
      const Element s0 = rhs(tab, i, j);
      const auto c0 = h_.class_of(s0).coords;
      base.insert(base.end(), c0.begin(), c0.end());
      for (std::size_t p = 0; p < params.size(); ++p) {
        Table varied = tab;
        *varied[params[p].i][params[p].j] = *varied[params[p].i][params[p].j] + params[p].rep;
        const auto c = h_.class_of(rhs(varied, i, j) - s0).coords;
        dirs[p].insert(dirs[p].end(), c.begin(), c.end());
      }
    }

    if (last) {
      out.any_defined = true;
      const auto cert = certificate_of(tab);
      auto sol = solve_affine_zero(base, dirs, alg_.zero_scalar());
      if (!out.base) {
        out.base = base;
        out.family = dirs;
        out.certificate = cert;
        out.representative = rhs(tab, 0, t_ - 1);
      }
      if (sol) {
        out.zero_found = true;
        out.base = base;
        out.family = dirs;
        out.certificate = cert;
        out.representative = rhs(tab, 0, t_ - 1);
      }
      return;
    }

    // Solve for parameters making every next-stage rhs exact.
    const CycScalar zero = alg_.zero_scalar();
    std::optional<std::vector<CycScalar>> particular = solve_affine_zero(base, dirs, zero);
    if (!particular) {
      if (!out.any_defined && out.undefined_reason.empty()) {
        out.undefined_reason = "no defining system through stage " + std::to_string(len + 1);
      }
      return;
    }
    Matrix<CycScalar> dm(0, base.size(), zero);
    for (const auto& d : dirs) dm.append_row(d);
    const Matrix<CycScalar> ker = params.empty() ? Matrix<CycScalar>(0, 0, zero) : kernel(dm);
    std::vector<std::vector<CycScalar>> choices{*particular};
    if (ker.rows() > 0) {
      out.definitive = false;
      for (std::size_t r = 0; r < ker.rows(); ++r) {
        auto c = *particular;
        for (std::size_t p = 0; p < c.size(); ++p) c[p] += ker(r, p);
        choices.push_back(std::move(c));
      }
    }
    for (const auto& choice : choices) {
      if (out.zero_found) return;
      if (++branches_ > opt_.budget) {
        out.budget_exhausted = true;
        out.definitive = false;
        return;
      }
      Table next_tab = tab;
      for (std::size_t p = 0; p < params.size(); ++p)
        if (!choice[p].is_zero())
          *next_tab[params[p].i][params[p].j] = *next_tab[params[p].i][params[p].j] + choice[p] * params[p].rep;
      search(len + 1, next_tab, out);
    }
  }

  std::vector<std::pair<std::string, Element>> certificate_of(const Table& tab) const {
    std::vector<std::pair<std::string, Element>> out;
    for (std::size_t len = 1; len + 1 < t_; ++len)
      for (auto [i, j] : entries_of_length(len)) out.emplace_back(entry_name(i, j), *tab[i][j]);
    return out;
  }

  const CohomologyRing& h_;
  const AlgebraSpec& alg_;
  std::size_t t_;
  MasseyOptions opt_;
  Table entries_;
  int target_degree_ = 0;
  std::size_t branches_ = 0;
};

}  // namespace detail

/// higher_massey: <a_1, ..., a_t> for 4 <= t <= 6 (t = 3 defers to the
/// triple product).
inline MasseyReport higher_massey(const CohomologyRing& h, const std::vector<Element>& a,
                                  const MasseyOptions& opt = {}) {
  const std::size_t t = a.size();
  if (t > 6) throw Error(ErrorCode::OrderUnsupported, "order " + std::to_string(t) + " exceeds 6");
  if (t < 3) throw Error(ErrorCode::InvalidArgument, "Massey products need at least three classes");
  if (t == 3) return triple_massey(h, a[0], a[1], a[2]);
  for (const auto& e : a) h.require_closed(e);

  MasseyReport r;
  r.kind = "higher";
  r.order = static_cast<int>(t);
  const auto& alg = *h.algebra();

  // Consecutive sub-products of order 3..t-1 must be defined and zero.
  bool sub_inconclusive = false;
  for (std::size_t p = 3; p < t; ++p)
    for (std::size_t i = 0; i + p <= t; ++i) {
      std::vector<Element> sub(a.begin() + static_cast<std::ptrdiff_t>(i),
                               a.begin() + static_cast<std::ptrdiff_t>(i + p));
      MasseyReport s = higher_massey(h, sub, opt);
      const std::string label = "<a_" + std::to_string(i + 1) + ",...,a_" + std::to_string(i + p) + ">";
      if (!s.defined && s.obstruction.find("inconclusive") == std::string::npos) {
        r.obstruction = label + " undefined: " + s.obstruction;
        r.witness = s.witness;
        return r;
      }
      if (s.verdict == Verdict::Nonzero) {
        r.obstruction = label + " is nonzero";
        r.witness = s.representative;
        return r;
      }
      if (s.verdict == Verdict::Inconclusive) sub_inconclusive = true;
    }

  detail::HigherMasseySearch search(h, a, opt);
  r.degree = search.target_degree();
  if (r.degree > h.max_degree())
    throw Error(ErrorCode::DegreeOverflow, "product lands in degree " + std::to_string(r.degree));
  auto out = search.run();
  if (!out.any_defined) {
    if (out.definitive && !sub_inconclusive) {
      r.obstruction = out.undefined_reason;
      r.witness = out.undefined_witness;
    } else {
      r.obstruction = "inconclusive: " + (out.undefined_reason.empty() ? "budget exhausted" : out.undefined_reason);
    }
    return r;
  }
  r.defined = true;
  r.certificate = out.certificate;
  r.representative_element = out.representative;
  r.representative = {r.degree, *out.base};
  r.indeterminacy = detail::rows_of(detail::span_of(out.family, h.betti(r.degree), alg.zero_scalar()));
  if (out.zero_found) {
    r.verdict = Verdict::Zero;
  } else if (out.definitive && !out.budget_exhausted) {
    r.verdict = Verdict::Nonzero;
  } else {
    r.verdict = Verdict::Inconclusive;
    r.note = out.budget_exhausted ? "branch budget exhausted" : "defining systems not unique; partial search";
  }
  return r;
}

}  // namespace cdga
