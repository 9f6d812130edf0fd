#pragma once

// JSON documents.
//
// Scalar literal: "p/q" (or "p") for rationals, {"zeta": N, "poly": [...]}
// otherwise, with poly the canonical coefficients in zeta_N. Element
// expression: [{"coeff": scalar, "monomial": ["gen", ...]}, ...].
//
// An algebra document holds zeta, degree_cap, generators, differential and
// relations. The same document may carry an action {"order", "images"} and
// the bundle annotations used by presets: id, classes, volume, poincare_dim,
// simply_connected and candidates.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cdga/symmetry.hpp"

namespace cdga {

using Json = nlohmann::json;

inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

inline Json scalar_to_json(const CycScalar& s) {
  if (s.is_rational()) return rational_to_string(s.coeffs()[0]);
  Json poly = Json::array();
  for (const auto& q : s.coeffs()) poly.push_back(rational_to_string(q));
  return Json{{"zeta", s.modulus()}, {"poly", poly}};
}

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw Error(ErrorCode::ParseError, "expected a rational, got " + j.dump());
}

inline CycScalar scalar_from_json(const Json& j) {
  if (j.is_string() || j.is_number_integer()) return CycScalar(rational_from_json(j));
  if (!j.is_object() || !j.contains("zeta") || !j.contains("poly"))
    throw Error(ErrorCode::ParseError, "bad scalar literal " + j.dump());
  const int n = j.at("zeta").get<int>();
  if (n < 1) throw Error(ErrorCode::ParseError, "zeta must be positive");
  std::vector<Rational> poly;
  for (const auto& c : j.at("poly")) poly.push_back(rational_from_json(c));
  return cyc_new(n, poly);
}

inline Json expr_to_json(const ElementExpr& e) {
  Json out = Json::array();
  for (const auto& t : e) out.push_back(Json{{"coeff", scalar_to_json(t.coeff)}, {"monomial", t.monomial}});
  return out;
}

inline ElementExpr expr_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "element expression must be an array");
  ElementExpr out;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("monomial")) throw Error(ErrorCode::ParseError, "bad term " + t.dump());
    Term term{t.contains("coeff") ? scalar_from_json(t.at("coeff")) : CycScalar(1), {}};
    for (const auto& g : t.at("monomial")) term.monomial.push_back(g.get<std::string>());
    out.push_back(std::move(term));
  }
  return out;
}

inline Json element_to_json(const Element& e) { return expr_to_json(to_expr(e)); }

inline Json algebra_to_json(const AlgebraSpecData& d) {
  Json gens = Json::array();
  for (const auto& g : d.generators) {
    Json jg{{"name", g.name}, {"degree", g.degree}};
    if (g.conjugate_of) jg["conjugate_of"] = *g.conjugate_of;
    gens.push_back(jg);
  }
  Json diff = Json::object();
  for (const auto& [name, expr] : d.differential) diff[name] = expr_to_json(expr);
  Json rels = Json::array();
  for (const auto& r : d.relations) rels.push_back(expr_to_json(r));
  Json out{{"zeta", d.zeta}, {"generators", gens}, {"differential", diff}, {"relations", rels}};
  if (d.degree_cap) out["degree_cap"] = *d.degree_cap;
  return out;
}

inline AlgebraSpecData algebra_from_json(const Json& j) {
  try {
    AlgebraSpecData d;
    d.zeta = j.value("zeta", 1);
    if (j.contains("degree_cap")) d.degree_cap = j.at("degree_cap").get<int>();
    for (const auto& g : j.at("generators")) {
      GeneratorDecl decl{g.at("name").get<std::string>(), g.at("degree").get<int>(), std::nullopt};
      if (g.contains("conjugate_of") && !g.at("conjugate_of").is_null())
        decl.conjugate_of = g.at("conjugate_of").get<std::string>();
      d.generators.push_back(std::move(decl));
    }
    if (j.contains("differential"))
      for (const auto& [name, expr] : j.at("differential").items()) d.differential[name] = expr_from_json(expr);
    if (j.contains("relations"))
      for (const auto& r : j.at("relations")) d.relations.push_back(expr_from_json(r));
    return d;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

inline Json action_to_json(const GroupActionData& a) {
  Json images = Json::object();
  for (const auto& [name, expr] : a.images) images[name] = expr_to_json(expr);
  return Json{{"order", a.order}, {"images", images}};
}

inline GroupActionData action_from_json(const Json& j) {
  try {
    GroupActionData a;
    a.order = j.at("order").get<int>();
    for (const auto& [name, expr] : j.at("images").items()) a.images[name] = expr_from_json(expr);
    return a;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

/// A product the formality scan should try first: kind "triple" or "amassey"
/// over named classes (for "amassey" the first name is the even class a).
struct MasseyCandidate {
  std::string kind;
  std::vector<std::string> classes;
};

/// A validated algebra with optional action and annotations.
struct Bundle {
  std::string id;
  AlgebraSpecData data;
  AlgebraPtr algebra;
  std::optional<GroupActionData> action_data;
  std::optional<GroupAction> action;
  std::vector<std::pair<std::string, Element>> classes;
  std::optional<std::vector<std::string>> volume;
  std::optional<int> poincare_dim;
  bool simply_connected = false;
  std::vector<MasseyCandidate> candidates;

  const Element& cls(const std::string& name) const {
    for (const auto& [n, e] : classes)
      if (n == name) return e;
    throw Error(ErrorCode::InvalidArgument, "no class named '" + name + "'");
  }
  bool has_class(const std::string& name) const {
    for (const auto& [n, e] : classes)
      if (n == name) return true;
    return false;
  }
};

inline std::optional<Monomial> volume_monomial(const Bundle& b) {
  if (!b.volume) return std::nullopt;
  ElementExpr e{Term{CycScalar(1), *b.volume}};
  Element v = make_element(*b.algebra, e);
  if (v.terms.size() != 1) throw Error(ErrorCode::InvalidArgument, "volume monomial is zero in the algebra");
  return v.terms.begin()->first;
}

inline Bundle bundle_from_json(const Json& j) {
  Bundle b;
  b.id = j.value("id", std::string());
  b.data = algebra_from_json(j);
  b.algebra = validate(b.data);
  try {
    if (j.contains("action")) {
      b.action_data = action_from_json(j.at("action"));
      b.action = validate_action(b.algebra, *b.action_data);
    }
    if (j.contains("classes"))
      for (const auto& c : j.at("classes"))
        b.classes.emplace_back(c.at("name").get<std::string>(), make_element(*b.algebra, expr_from_json(c.at("element"))));
    if (j.contains("volume")) b.volume = j.at("volume").get<std::vector<std::string>>();
    if (j.contains("poincare_dim")) b.poincare_dim = j.at("poincare_dim").get<int>();
    b.simply_connected = j.value("simply_connected", false);
    if (j.contains("candidates"))
      for (const auto& c : j.at("candidates"))
        b.candidates.push_back({c.at("kind").get<std::string>(), c.at("classes").get<std::vector<std::string>>()});
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return b;
}

inline Json bundle_to_json(const Bundle& b) {
  Json out = algebra_to_json(b.algebra ? b.algebra->data() : b.data);
  if (!b.id.empty()) out["id"] = b.id;
  if (b.action_data) out["action"] = action_to_json(*b.action_data);
  if (!b.classes.empty()) {
    Json cls = Json::array();
    for (const auto& [name, e] : b.classes) cls.push_back(Json{{"name", name}, {"element", element_to_json(e)}});
    out["classes"] = cls;
  }
  if (b.volume) out["volume"] = *b.volume;
  if (b.poincare_dim) out["poincare_dim"] = *b.poincare_dim;
  if (b.simply_connected) out["simply_connected"] = true;
  if (!b.candidates.empty()) {
    Json c = Json::array();
    for (const auto& m : b.candidates) c.push_back(Json{{"kind", m.kind}, {"classes", m.classes}});
    out["candidates"] = c;
  }
  return out;
}

inline Bundle bundle_from_string(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return bundle_from_json(j);
}

/// Cohomology of a bundle: invariant cohomology when an action is attached,
/// with the volume monomial as top class when declared.
inline CohomologyRing bundle_cohomology(const Bundle& b, std::optional<int> max_degree = std::nullopt) {
  const int md = max_degree ? *max_degree : b.algebra->degree_cap() - 1;
  CohomologyRing h = b.action ? invariant_cohomology(*b.action, md) : cohomology(b.algebra, md);
  if (auto vol = volume_monomial(b)) h.set_top({b.algebra->monomial_degree(*vol), *vol});
  return h;
}

}  // namespace cdga
