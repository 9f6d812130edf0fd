#pragma once

// Model constructors and the named presets.

#include <numeric>
#include <string>
#include <vector>

#include "cdga/json_io.hpp"
#include "cdga/preset_data.hpp"

namespace cdga {

/// Chevalley-Eilenberg algebra: degree-1 generators with quadratic d.
inline AlgebraPtr ce_complex(int zeta, std::vector<GeneratorDecl> generators,
                             std::map<std::string, ElementExpr> structure) {
  for (const auto& g : generators)
    if (g.degree != 1) throw Error(ErrorCode::InvalidArgument, "CE generator '" + g.name + "' must have degree 1");
  for (const auto& [name, expr] : structure)
    for (const auto& t : expr)
      if (t.monomial.size() != 2)
        throw Error(ErrorCode::InvalidArgument, "d(" + name + ") must be quadratic in the generators");
  AlgebraSpecData d;
  d.zeta = zeta;
  d.generators = std::move(generators);
  d.differential = std::move(structure);
  return validate(d);
}

/// Gysin model A (x) L(x), |x| = 1, dx = euler. The cap grows by one.
inline AlgebraPtr circle_bundle(const AlgebraPtr& base, const Element& euler, const std::string& name = "x") {
  base->check_parent(euler);
  if (euler.degree != 2) throw Error(ErrorCode::EulerBadDegree, "euler class has degree " + std::to_string(euler.degree));
  if (!elem_d(euler).is_zero()) throw Error(ErrorCode::EulerNotClosed, "d(euler) = " + to_string(elem_d(euler)));
  AlgebraSpecData d = base->data();
  std::string fresh = name;
  while (base->find_generator(fresh)) fresh += "'";
  d.generators.push_back({fresh, 1, std::nullopt});
  d.differential[fresh] = to_expr(euler);
  d.degree_cap = base->degree_cap() + 1;
  return validate(d);
}

/// Graded tensor product; clashing generator names of B get a trailing "'".
inline AlgebraPtr tensor(const AlgebraPtr& a, const AlgebraPtr& b) {
  AlgebraSpecData d = a->data();
  d.zeta = std::lcm(a->modulus(), b->modulus());
  std::map<std::string, std::string> rename;
  for (const auto& g : b->generators()) {
    std::string n = g.name;
    while (a->find_generator(n) || std::any_of(d.generators.begin(), d.generators.end(),
                                               [&](const GeneratorDecl& x) { return x.name == n; }))
      n += "'";
    rename[g.name] = n;
  }
  auto rn = [&](ElementExpr e) {
    for (auto& t : e)
      for (auto& m : t.monomial) m = rename.at(m);
    return e;
  };
  for (const auto& g : b->generators()) {
    GeneratorDecl ng{rename.at(g.name), g.degree, std::nullopt};
    if (g.conjugate_of) ng.conjugate_of = rename.at(*g.conjugate_of);
    d.generators.push_back(ng);
  }
  for (const auto& [name, expr] : b->data().differential) d.differential[rename.at(name)] = rn(expr);
  for (const auto& r : b->data().relations) d.relations.push_back(rn(r));
  d.degree_cap = a->degree_cap() + b->degree_cap();
  return validate(d);
}

/// Q[a]/(a^height), |a| = degree.
inline AlgebraSpecData truncated_polynomial_data(const std::string& name, int degree, int height, int cap) {
  AlgebraSpecData d;
  d.degree_cap = cap;
  d.generators = {{name, degree, std::nullopt}};
  d.relations = {{Term{CycScalar(1), std::vector<std::string>(static_cast<std::size_t>(height), name)}}};
  return d;
}

// ---------------------------------------------------------------------------
// Presets

inline std::vector<std::string> preset_ids() {
  std::vector<std::string> ids;
  for (const auto& [name, doc] : preset_data::documents()) ids.push_back(name);
  ids.push_back("CPN");
  ids.push_back("SASAKI_CPN_S2");
  ids.push_back("SASAKI_S2N");
  return ids;
}

namespace detail {

inline ElementExpr mono(std::vector<std::string> gens, CycScalar c = CycScalar(1)) {
  return {Term{std::move(c), std::move(gens)}};
}

inline Json named(const std::string& name, const ElementExpr& e) {
  return Json{{"name", name}, {"element", expr_to_json(e)}};
}

/// CP^m: Q[a]/(a^{m+1}).
inline Json cpn_document(int m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "CPN needs m >= 1");
  Json doc = algebra_to_json(truncated_polynomial_data("a", 2, m + 1, 2 * m + 2));
  doc["id"] = "CPN";
  doc["classes"] = Json::array({named("a", mono({"a"}))});
  doc["volume"] = std::vector<std::string>(static_cast<std::size_t>(m), "a");
  doc["poincare_dim"] = 2 * m;
  doc["simply_connected"] = true;
  return doc;
}

/// Circle bundle over CP^{n-1} x S^2 with euler class a1 + a2.
inline Json sasaki_cpn_s2_document(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "SASAKI_CPN_S2 needs n >= 2");
  AlgebraSpecData d;
  d.degree_cap = 2 * n + 2;
  d.generators = {{"a1", 2, std::nullopt}, {"a2", 2, std::nullopt}, {"x", 1, std::nullopt}};
  d.relations = {mono(std::vector<std::string>(static_cast<std::size_t>(n), "a1")), mono({"a2", "a2"})};
  d.differential["x"] = {Term{CycScalar(1), {"a1"}}, Term{CycScalar(1), {"a2"}}};
  Json doc = algebra_to_json(d);
  doc["id"] = "SASAKI_CPN_S2";
  doc["classes"] = Json::array({named("a1", mono({"a1"})), named("a2", mono({"a2"}))});
  std::vector<std::string> vol(static_cast<std::size_t>(n - 1), "a1");
  vol.push_back("a2");
  vol.push_back("x");
  doc["volume"] = vol;
  doc["poincare_dim"] = 2 * n + 1;
  doc["simply_connected"] = true;
  return doc;
}

/// Circle bundle over (S^2)^n with euler class a1 + ... + an.
inline Json sasaki_s2n_document(int n) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "SASAKI_S2N needs n >= 3");
  AlgebraSpecData d;
  d.degree_cap = 2 * n + 2;
  ElementExpr dx;
  Json classes = Json::array();
  std::vector<std::string> vol;
  for (int i = 1; i <= n; ++i) {
    const std::string a = "a" + std::to_string(i);
    d.generators.push_back({a, 2, std::nullopt});
    d.relations.push_back(mono({a, a}));
    dx.push_back(Term{CycScalar(1), {a}});
    classes.push_back(named(a, mono({a})));
    vol.push_back(a);
  }
  d.generators.push_back({"x", 1, std::nullopt});
  d.differential["x"] = dx;
  std::vector<std::string> middle;
  for (int i = 2; i <= n - 1; ++i) middle.push_back("a" + std::to_string(i));
  classes.push_back(named("a2_to_a" + std::to_string(n - 1), mono(middle)));
  vol.push_back("x");
  Json doc = algebra_to_json(d);
  doc["id"] = "SASAKI_S2N";
  doc["classes"] = classes;
  doc["volume"] = vol;
  doc["poincare_dim"] = 2 * n + 1;
  doc["simply_connected"] = true;
  doc["candidates"] = Json::array(
      {Json{{"kind", "triple"}, {"classes", {"a1", "a1", "a2_to_a" + std::to_string(n - 1)}}}});
  return doc;
}

}  // namespace detail

/// Preset document; parameterized ids take `param` (CPN: m, default 2;
/// SASAKI_CPN_S2 and SASAKI_S2N: n, defaults 4 and 3).
inline Json preset_document(const std::string& id, std::optional<int> param = std::nullopt) {
  if (id == "CPN") return detail::cpn_document(param.value_or(2));
  if (id == "SASAKI_CPN_S2") return detail::sasaki_cpn_s2_document(param.value_or(4));
  if (id == "SASAKI_S2N") return detail::sasaki_s2n_document(param.value_or(3));
  const auto& docs = preset_data::documents();
  auto it = docs.find(id);
  if (it == docs.end()) throw Error(ErrorCode::UnknownPreset, id);
  if (param) throw Error(ErrorCode::InvalidArgument, "preset " + id + " takes no parameter");
  return Json::parse(it->second);
}

inline Bundle preset(const std::string& id, std::optional<int> param = std::nullopt) {
  return bundle_from_json(preset_document(id, param));
}

}  // namespace cdga
