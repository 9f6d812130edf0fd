#pragma once

// Finitely presented graded-commutative differential algebras.
//
// An algebra is described by an AlgebraSpecData (plain data, names only) and
// turned into an immutable AlgebraSpec by validate(). Monomials are exponent
// vectors indexed by generator declaration order; the ordered product
// g_0^e_0 g_1^e_1 ... is the normal form, and Koszul signs come from moving
// odd generators past each other. Relations are handled per degree by row
// reduction of the ideal slice: the monomials that are not pivots of the
// reduced ideal form the standard basis, and every Element is stored in
// terms of standard monomials only.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cdga/error.hpp"
#include "cdga/linalg.hpp"
#include "cdga/scalar.hpp"

namespace cdga {

struct GeneratorDecl {
  std::string name;
  int degree = 1;
  std::optional<std::string> conjugate_of;
};

/// One summand of an element expression: coeff * (product of named
/// generators in the listed order).
struct Term {
  CycScalar coeff;
  std::vector<std::string> monomial;
};
using ElementExpr = std::vector<Term>;

struct AlgebraSpecData {
  int zeta = 1;
  std::optional<int> degree_cap;
  std::vector<GeneratorDecl> generators;
  std::map<std::string, ElementExpr> differential;
  std::vector<ElementExpr> relations;
};

using Monomial = std::vector<std::uint16_t>;

class AlgebraSpec;
using AlgebraPtr = std::shared_ptr<const AlgebraSpec>;

/// Homogeneous element; terms only ever hold standard monomials with nonzero
/// coefficients.
struct Element {
  AlgebraPtr parent;
  int degree = 0;
  std::map<Monomial, CycScalar> terms;
  /// Set when a product or differential overflowed the degree cap; such an
  /// element is a placeholder zero and downstream operations refuse it.
  bool truncated = false;

  bool is_zero() const { return terms.empty(); }
};

struct AlgebraFlags {
  bool is_minimal = false;
  bool is_connected = true;
  bool has_odd_only_generators = false;
};

class AlgebraSpec : public std::enable_shared_from_this<AlgebraSpec> {
 public:
  struct Slice {
    std::vector<Monomial> free_monomials;
    std::map<Monomial, std::size_t> free_index;
    // Ideal slice in reduced echelon form over free_monomials.
    Echelon<CycScalar> ideal;
    std::vector<Monomial> standard;
    std::map<Monomial, std::size_t> standard_index;
  };

  int modulus() const { return zeta_; }
  int degree_cap() const { return cap_; }
  std::size_t num_generators() const { return gens_.size(); }
  const std::vector<GeneratorDecl>& generators() const { return gens_; }
  const GeneratorDecl& generator(std::size_t i) const { return gens_[i]; }
  int generator_degree(std::size_t i) const { return gens_[i].degree; }
  bool is_odd(std::size_t i) const { return gens_[i].degree % 2 != 0; }
  std::optional<std::size_t> conjugate_index(std::size_t i) const {
    if (conj_[i] < 0) return std::nullopt;
    return static_cast<std::size_t>(conj_[i]);
  }
  std::optional<std::size_t> find_generator(const std::string& name) const {
    auto it = name_index_.find(name);
    if (it == name_index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t generator_index(const std::string& name) const {
    auto idx = find_generator(name);
    if (!idx) throw Error(ErrorCode::InvalidArgument, "unknown generator '" + name + "'");
    return *idx;
  }
  const Element& differential_of(std::size_t gen) const { return diffs_[gen]; }
  const std::vector<Element>& relations() const { return relations_; }
  const AlgebraFlags& flags() const { return flags_; }
  bool has_relations() const { return !relations_.empty(); }
  /// The plain data this spec was validated from (with the cap filled in).
  const AlgebraSpecData& data() const { return data_; }

  const Slice& slice(int k) const {
    if (k < 0 || k > cap_)
      throw Error(ErrorCode::CapExceeded,
                  "degree " + std::to_string(k) + " exceeds degree cap " + std::to_string(cap_));
    return slices_[static_cast<std::size_t>(k)];
  }
  std::size_t dim(int k) const { return slice(k).standard.size(); }

  CycScalar zero_scalar() const { return CycScalar::zero(zeta_); }
  CycScalar one_scalar() const { return CycScalar::one(zeta_); }

  int monomial_degree(const Monomial& m) const {
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * gens_[i].degree;
    return d;
  }

  /// Product of monomials in the free algebra with its Koszul sign; nullopt
  /// when an odd generator would appear twice.
  std::optional<std::pair<Monomial, int>> multiply_monomials(const Monomial& a,
                                                             const Monomial& b) const {
    const std::size_t n = gens_.size();
    Monomial out(n, 0);
    int swaps = 0;
    int odd_in_a_after = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] && is_odd(i)) ++odd_in_a_after;
    for (std::size_t j = 0; j < n; ++j) {
      if (a[j] && is_odd(j)) --odd_in_a_after;
      if (b[j] && is_odd(j)) {
        if (a[j]) return std::nullopt;
        swaps += odd_in_a_after;
      }
      out[j] = static_cast<std::uint16_t>(a[j] + b[j]);
    }
    return std::make_pair(std::move(out), swaps % 2 ? -1 : 1);
  }

  Element zero(int degree) const { return Element{self(), degree, {}, false}; }
  Element one() const {
    Element e{self(), 0, {}, false};
    e.terms.emplace(Monomial(gens_.size(), 0), one_scalar());
    return e;
  }
  Element generator_element(std::size_t i) const {
    Monomial m(gens_.size(), 0);
    m[i] = 1;
    return reduce_free(gens_[i].degree, {{m, one_scalar()}});
  }
  Element generator_element(const std::string& name) const {
    return generator_element(generator_index(name));
  }

  /// Reduce a free-algebra combination of monomials of one degree modulo the
  /// relation ideal.
  Element reduce_free(int degree, std::map<Monomial, CycScalar> terms) const {
    Element e{self(), degree, {}, false};
    if (degree > cap_) {
      e.truncated = true;
      return e;
    }
    const Slice& s = slices_[static_cast<std::size_t>(degree)];
    if (s.ideal.rank() == 0) {
      for (auto& [m, c] : terms)
        if (!c.is_zero()) e.terms.emplace(m, std::move(c));
      return e;
    }
    std::vector<CycScalar> v(s.free_monomials.size(), zero_scalar());
    for (auto& [m, c] : terms) v[s.free_index.at(m)] += c;
    reduce_against(v, s.ideal.rows, s.ideal.pivots);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) e.terms.emplace(s.free_monomials[i], std::move(v[i]));
    return e;
  }

  std::vector<CycScalar> coords(const Element& e) const {
    check_parent(e);
    const Slice& s = slice(e.degree);
    std::vector<CycScalar> v(s.standard.size(), zero_scalar());
    for (const auto& [m, c] : e.terms) v[s.standard_index.at(m)] = c;
    return v;
  }
  Element from_coords(int degree, const std::vector<CycScalar>& v) const {
    const Slice& s = slice(degree);
    Element e{self(), degree, {}, false};
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) e.terms.emplace(s.standard[i], v[i]);
    return e;
  }

  void check_parent(const Element& e) const {
    if (e.parent.get() != this) throw Error(ErrorCode::ParentMismatch, "element belongs to another algebra");
    if (e.truncated) throw Error(ErrorCode::TruncatedInput, "element was truncated at the degree cap");
  }

  std::string monomial_string(const Monomial& m) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (!first) os << "*";
      first = false;
      os << gens_[i].name;
      if (m[i] > 1) os << "^" << m[i];
    }
    if (first) os << "1";
    return os.str();
  }

  friend AlgebraPtr validate(const AlgebraSpecData& data);

  // Constructed only through validate(); public for make_shared.
  struct Token {};
  explicit AlgebraSpec(Token) {}

 private:
  AlgebraPtr self() const { return shared_from_this(); }

  int zeta_ = 1;
  int cap_ = 0;
  std::vector<GeneratorDecl> gens_;
  std::map<std::string, std::size_t> name_index_;
  std::vector<int> conj_;
  std::vector<Element> diffs_;
  std::vector<Element> relations_;
  std::vector<Slice> slices_;
  AlgebraFlags flags_;
  AlgebraSpecData data_;
};

// ---------------------------------------------------------------------------
// Element arithmetic

inline void check_same_parent(const Element& a, const Element& b) {
  if (a.parent != b.parent) throw Error(ErrorCode::ParentMismatch, "elements belong to different algebras");
  if (a.truncated || b.truncated)
    throw Error(ErrorCode::TruncatedInput, "element was truncated at the degree cap");
}

inline Element operator+(const Element& a, const Element& b) {
  check_same_parent(a, b);
  if (a.degree != b.degree && !a.is_zero() && !b.is_zero())
    throw Error(ErrorCode::InvalidArgument, "adding elements of different degrees");
  Element out = a.is_zero() ? b : a;
  const Element& other = a.is_zero() ? a : b;
  for (const auto& [m, c] : other.terms) {
    auto it = out.terms.find(m);
    if (it == out.terms.end()) {
      out.terms.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) out.terms.erase(it);
    }
  }
  return out;
}

inline Element operator*(const CycScalar& s, const Element& a) {
  Element out{a.parent, a.degree, {}, a.truncated};
  if (s.is_zero()) return out;
  for (const auto& [m, c] : a.terms) out.terms.emplace(m, s * c);
  return out;
}

inline Element operator-(const Element& a) { return CycScalar(-1) * a; }
inline Element operator-(const Element& a, const Element& b) { return a + (-b); }

/// Graded-commutative product (elem_mul), reduced modulo the relations.
inline Element operator*(const Element& a, const Element& b) {
  check_same_parent(a, b);
  const AlgebraSpec& alg = *a.parent;
  const int deg = a.degree + b.degree;
  if (deg > alg.degree_cap()) {
    Element out = alg.zero(deg);
    out.truncated = true;
    return out;
  }
  std::map<Monomial, CycScalar> acc;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      auto prod = alg.multiply_monomials(ma, mb);
      if (!prod) continue;
      CycScalar c = ca * cb;
      if (prod->second < 0) c = -c;
      auto it = acc.find(prod->first);
      if (it == acc.end())
        acc.emplace(std::move(prod->first), std::move(c));
      else
        it->second += c;
    }
  return alg.reduce_free(deg, std::move(acc));
}

inline bool operator==(const Element& a, const Element& b) {
  if (a.parent != b.parent) return false;
  if (a.is_zero() && b.is_zero()) return true;
  return a.degree == b.degree && a.terms == b.terms;
}
inline bool operator!=(const Element& a, const Element& b) { return !(a == b); }

inline Element elem_mul(const Element& a, const Element& b) { return a * b; }

inline Element power(const Element& a, int k) {
  Element out = a.parent->one();
  for (int i = 0; i < k; ++i) out = out * a;
  return out;
}

/// Element of a single monomial of the free algebra (reduced).
inline Element monomial_element(const AlgebraSpec& alg, const Monomial& m, const CycScalar& c) {
  return alg.reduce_free(alg.monomial_degree(m), {{m, c}});
}

/// Differential (elem_d), the derivation extension of the generator
/// differentials.
inline Element elem_d(const Element& a) {
  const AlgebraSpec& alg = *a.parent;
  alg.check_parent(a);
  Element out = alg.zero(a.degree + 1);
  if (a.degree + 1 > alg.degree_cap()) {
    // Only sound when d vanishes on this slice; detect and flag otherwise.
    for (std::size_t g = 0; g < alg.num_generators(); ++g)
      if (!alg.differential_of(g).is_zero()) {
        out.truncated = !a.is_zero();
        break;
      }
    return out;
  }
  const std::size_t n = alg.num_generators();
  for (const auto& [m, c] : a.terms) {
    // d(before * g^e * after) summed over generator positions.
    int prefix_deg = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!m[i]) continue;
      const Element& dg = alg.differential_of(i);
      if (!dg.is_zero()) {
        Monomial before(n, 0), after(n, 0);
        for (std::size_t j = 0; j < n; ++j) (j < i ? before : after)[j] = m[j];
        after[i] = 0;
        Monomial lower(n, 0);
        lower[i] = static_cast<std::uint16_t>(m[i] - 1);
        Element piece = monomial_element(alg, before, alg.one_scalar()) *
                        monomial_element(alg, lower, CycScalar::rational(alg.modulus(), m[i])) * dg *
                        monomial_element(alg, after, alg.one_scalar());
        if (prefix_deg % 2) piece = -piece;
        out = out + c * piece;
      }
      prefix_deg += m[i] * alg.generator_degree(i);
    }
  }
  return out;
}

/// Ordered standard-monomial basis of the degree-k slice of the quotient.
inline const std::vector<Monomial>& basis(const AlgebraSpec& alg, int k) {
  return alg.slice(k).standard;
}

/// Swap every generator with its declared partner and conjugate coefficients.
inline Element conj_elem(const Element& a) {
  const AlgebraSpec& alg = *a.parent;
  alg.check_parent(a);
  Element out = alg.zero(a.degree);
  for (const auto& [m, c] : a.terms) {
    Element t = alg.one();
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      auto partner = alg.conjugate_index(i);
      if (!partner) throw Error(ErrorCode::NoConjugateDeclared, alg.generator(i).name);
      Element g = alg.generator_element(*partner);
      for (int e = 0; e < m[i]; ++e) t = t * g;
    }
    out = out + c.conj() * t;
  }
  return out;
}

/// Evaluate an element expression (names) in a validated algebra.
inline Element make_element(const AlgebraSpec& alg, const ElementExpr& expr,
                            std::optional<int> degree = std::nullopt) {
  std::optional<Element> acc;
  for (const auto& term : expr) {
    Element t = alg.one();
    for (const auto& name : term.monomial) t = t * alg.generator_element(name);
    if (t.truncated) throw Error(ErrorCode::CapExceeded, "term exceeds the degree cap");
    if (degree && t.degree != *degree)
      throw Error(ErrorCode::InvalidArgument, "term of degree " + std::to_string(t.degree) +
                                                  " where degree " + std::to_string(*degree) +
                                                  " was expected");
    t = term.coeff.embed(alg.modulus()) * t;
    if (acc && acc->degree != t.degree) throw Error(ErrorCode::InhomogeneousRelation, "inhomogeneous element");
    acc = acc ? *acc + t : t;
  }
  if (!acc) {
    if (!degree) throw Error(ErrorCode::InvalidArgument, "empty element expression without a degree");
    return alg.zero(*degree);
  }
  if (degree && acc->degree != *degree) return alg.zero(*degree);
  return *acc;
}

/// Inverse of make_element: standard monomials as ordered generator lists.
inline ElementExpr to_expr(const Element& e) {
  ElementExpr out;
  const AlgebraSpec& alg = *e.parent;
  for (const auto& [m, c] : e.terms) {
    Term t{c, {}};
    for (std::size_t i = 0; i < m.size(); ++i)
      for (int k = 0; k < m[i]; ++k) t.monomial.push_back(alg.generator(i).name);
    out.push_back(std::move(t));
  }
  return out;
}

inline std::string to_string(const Element& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : e.terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << e.parent->monomial_string(m);
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Validation

namespace detail {

inline void enumerate_monomials(const std::vector<GeneratorDecl>& gens, int degree, std::size_t idx,
                                Monomial& cur, std::vector<Monomial>& out) {
  if (idx == gens.size()) {
    if (degree == 0) out.push_back(cur);
    return;
  }
  const int gd = gens[idx].degree;
  int max_e = degree / gd;
  if (gd % 2) max_e = std::min(max_e, 1);
  for (int e = max_e; e >= 0; --e) {
    cur[idx] = static_cast<std::uint16_t>(e);
    enumerate_monomials(gens, degree - e * gd, idx + 1, cur, out);
  }
  cur[idx] = 0;
}

}  // namespace detail

inline AlgebraPtr validate(const AlgebraSpecData& data) {
  auto alg = std::make_shared<AlgebraSpec>(AlgebraSpec::Token{});
  if (data.zeta < 1) throw Error(ErrorCode::InvalidArgument, "zeta must be positive");
  alg->zeta_ = data.zeta;
  alg->gens_ = data.generators;
  const std::size_t n = data.generators.size();

  bool any_even = false;
  int odd_total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& g = data.generators[i];
    if (g.degree < 1) throw Error(ErrorCode::InvalidArgument, "generator '" + g.name + "' must have positive degree");
    if (g.name.empty()) throw Error(ErrorCode::InvalidArgument, "empty generator name");
    if (!alg->name_index_.emplace(g.name, i).second)
      throw Error(ErrorCode::InvalidArgument, "duplicate generator '" + g.name + "'");
    if (g.degree % 2 == 0)
      any_even = true;
    else
      odd_total += g.degree;
  }
  if (data.degree_cap) {
    if (*data.degree_cap < 1) throw Error(ErrorCode::InvalidArgument, "degree_cap must be positive");
    alg->cap_ = *data.degree_cap;
  } else {
    if (any_even) throw Error(ErrorCode::InvalidArgument, "degree_cap is required when even generators are present");
    alg->cap_ = odd_total + 1;
  }
  alg->data_ = data;
  alg->data_.degree_cap = alg->cap_;

  alg->conj_.assign(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& g = data.generators[i];
    if (!g.conjugate_of) continue;
    auto it = alg->name_index_.find(*g.conjugate_of);
    if (it == alg->name_index_.end())
      throw Error(ErrorCode::InvalidArgument, "conjugate of '" + g.name + "' is unknown generator '" + *g.conjugate_of + "'");
    if (it->second == i) throw Error(ErrorCode::InvalidArgument, "generator '" + g.name + "' cannot be its own conjugate");
    if (data.generators[it->second].degree != g.degree)
      throw Error(ErrorCode::InvalidArgument, "conjugate pair '" + g.name + "' has unequal degrees");
    alg->conj_[i] = static_cast<int>(it->second);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const int j = alg->conj_[i];
    if (j < 0) continue;
    const int back = alg->conj_[static_cast<std::size_t>(j)];
    if (back >= 0 && back != static_cast<int>(i))
      throw Error(ErrorCode::InvalidArgument, "conjugation is not an involution at '" + data.generators[i].name + "'");
    alg->conj_[static_cast<std::size_t>(j)] = static_cast<int>(i);
  }

  // Free slices first, with no relations, so relation elements can be formed.
  alg->slices_.resize(static_cast<std::size_t>(alg->cap_) + 1);
  for (int k = 0; k <= alg->cap_; ++k) {
    auto& s = alg->slices_[static_cast<std::size_t>(k)];
    Monomial cur(n, 0);
    detail::enumerate_monomials(data.generators, k, 0, cur, s.free_monomials);
    for (std::size_t i = 0; i < s.free_monomials.size(); ++i) s.free_index.emplace(s.free_monomials[i], i);
    s.ideal.rows = Matrix<CycScalar>(0, s.free_monomials.size(), alg->zero_scalar());
    s.standard = s.free_monomials;
    s.standard_index = s.free_index;
  }

  std::vector<Element> free_relations;
  for (const auto& expr : data.relations) {
    Element r = [&] {
      try {
        return make_element(*alg, expr);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::InhomogeneousRelation) throw;
        if (e.code() == ErrorCode::InvalidArgument && e.detail() == "empty element expression without a degree")
          throw Error(ErrorCode::InvalidArgument, "empty relation");
        throw;
      }
    }();
    free_relations.push_back(std::move(r));
  }

  // Ideal slices: relation * free monomial of complementary degree.
  if (!free_relations.empty()) {
    for (int k = 0; k <= alg->cap_; ++k) {
      auto& s = alg->slices_[static_cast<std::size_t>(k)];
      Matrix<CycScalar> rows(0, s.free_monomials.size(), alg->zero_scalar());
      for (const auto& r : free_relations) {
        if (r.degree > k) continue;
        for (const auto& m : alg->slices_[static_cast<std::size_t>(k - r.degree)].free_monomials) {
          std::vector<CycScalar> row(s.free_monomials.size(), alg->zero_scalar());
          bool nonzero = false;
          for (const auto& [rm, rc] : r.terms) {
            auto prod = alg->multiply_monomials(rm, m);
            if (!prod) continue;
            row[s.free_index.at(prod->first)] += prod->second > 0 ? rc : -rc;
            nonzero = true;
          }
          if (nonzero && !is_zero_vector(row)) rows.append_row(row);
        }
      }
      if (rows.rows() == 0) continue;
      s.ideal = row_reduce(rows);
      std::vector<bool> pivot(s.free_monomials.size(), false);
      for (auto p : s.ideal.pivots) pivot[p] = true;
      s.standard.clear();
      s.standard_index.clear();
      for (std::size_t i = 0; i < s.free_monomials.size(); ++i)
        if (!pivot[i]) {
          s.standard_index.emplace(s.free_monomials[i], s.standard.size());
          s.standard.push_back(s.free_monomials[i]);
        }
    }
  }

  // Differentials of generators.
  alg->diffs_.clear();
  for (std::size_t i = 0; i < n; ++i) alg->diffs_.push_back(alg->zero(data.generators[i].degree + 1));
  for (const auto& [name, expr] : data.differential) {
    auto idx = alg->find_generator(name);
    if (!idx) throw Error(ErrorCode::InvalidArgument, "differential given for unknown generator '" + name + "'");
    const int target = data.generators[*idx].degree + 1;
    if (target > alg->cap_) {
      if (!expr.empty()) throw Error(ErrorCode::CapTooLow, "d(" + name + ") exceeds the degree cap");
      continue;
    }
    alg->diffs_[*idx] = make_element(*alg, expr, target);
  }

  // d on the free algebra for relation stability, then d^2 on generators.
  for (std::size_t r = 0; r < free_relations.size(); ++r) {
    const Element& rel = free_relations[r];
    if (rel.degree + 1 > alg->cap_) continue;
    // d(rel) computed term by term on free monomials, then reduced.
    Element dr = alg->zero(rel.degree + 1);
    for (const auto& [m, c] : rel.terms) {
      Element mono{alg, rel.degree, {{m, c}}, false};
      dr = dr + elem_d(mono);
    }
    if (!dr.is_zero())
      throw Error(ErrorCode::IdealNotStable,
                  "d of relation #" + std::to_string(r) + " is not in the ideal (degree " +
                      std::to_string(rel.degree + 1) + "): " + to_string(dr));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Element& dg = alg->diffs_[i];
    if (dg.is_zero() || dg.degree + 1 > alg->cap_) continue;
    Element dd = elem_d(dg);
    if (!dd.is_zero())
      throw Error(ErrorCode::D2Nonzero, "d(d(" + data.generators[i].name + ")) = " + to_string(dd));
  }
  alg->relations_ = std::move(free_relations);

  AlgebraFlags f;
  f.is_minimal = true;
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [m, c] : alg->diffs_[i].terms) {
      int total = 0;
      for (auto e : m) total += e;
      if (total == 1) f.is_minimal = false;
    }
  f.has_odd_only_generators = !any_even;
  f.is_connected = true;
  alg->flags_ = f;
  return alg;
}

}  // namespace cdga
