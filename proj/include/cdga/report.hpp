#pragma once

// JSON and text renderings of computed reports. Keys are emitted in a fixed
// order (nlohmann::json sorts object keys), so identical inputs give
// byte-identical output.

#include <sstream>
#include <string>

#include "cdga/json_io.hpp"
#include "cdga/lefschetz.hpp"
#include "cdga/massey.hpp"
#include "cdga/minmodel.hpp"

namespace cdga {

inline Json coords_to_json(const std::vector<CycScalar>& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(scalar_to_json(c));
  return out;
}

inline Json class_to_json(const CohomologyRing& h, const CohomologyClass& c) {
  return Json{{"degree", c.degree}, {"coords", coords_to_json(c.coords)},
              {"representative", element_to_json(h.representative(c))}};
}

inline std::string betti_string(const std::vector<std::size_t>& b) {
  std::string s = "(";
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
  return s + ")";
}

// ---------------------------------------------------------------------------
// Cohomology

/// {"betti", "reps", "pairing_ok"}; pairing_ok is evaluated at the top
/// class degree when one is declared, else at the highest nonzero degree.
inline Json cohomology_report(const CohomologyRing& h) {
  Json reps = Json::object();
  for (int k = 0; k <= h.max_degree(); ++k) {
    Json lst = Json::array();
    for (const auto& r : h.reps(k)) lst.push_back(element_to_json(r));
    reps[std::to_string(k)] = lst;
  }
  int n = h.top() ? h.top()->degree : 0;
  if (!h.top())
    for (int k = 0; k <= h.max_degree(); ++k)
      if (h.betti(k)) n = k;
  return Json{{"betti", h.betti()}, {"reps", reps}, {"pairing_ok", h.pairing_ok(n)}};
}

inline std::string cohomology_text(const CohomologyRing& h) {
  std::ostringstream os;
  os << "betti " << betti_string(h.betti()) << "\n";
  for (int k = 0; k <= h.max_degree(); ++k)
    for (std::size_t i = 0; i < h.betti(k); ++i) os << "H^" << k << "[" << i << "] = " << to_string(h.reps(k)[i]) << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Massey

inline Json massey_report_json(const CohomologyRing& h, const MasseyReport& r) {
  Json out{{"kind", r.kind}, {"order", r.order}, {"defined", r.defined}, {"degree", r.degree},
           {"verdict", std::string(to_string(r.verdict))}};
  if (!r.obstruction.empty()) out["obstruction"] = r.obstruction;
  if (r.witness) out["witness"] = class_to_json(h, *r.witness);
  if (r.representative_element) {
    out["representative"] = element_to_json(*r.representative_element);
    out["representative_class"] = coords_to_json(r.representative.coords);
  }
  Json ind = Json::array();
  for (const auto& row : r.indeterminacy) ind.push_back(coords_to_json(row));
  out["indeterminacy"] = ind;
  Json cert = Json::object();
  for (const auto& [name, e] : r.certificate) cert[name] = element_to_json(e);
  out["certificate"] = cert;
  if (!r.note.empty()) out["note"] = r.note;
  if (h.top() && r.defined && r.degree == h.top()->degree)
    out["integral"] = scalar_to_json(h.integrate(r.representative));
  return out;
}

inline std::string massey_text(const MasseyReport& r) {
  std::ostringstream os;
  os << r.kind << " Massey product (order " << r.order << "), degree " << r.degree << ": ";
  if (!r.defined) {
    os << "undefined, " << r.obstruction << "\n";
    return os.str();
  }
  os << to_string(r.verdict) << "\n";
  if (r.representative_element) os << "  representative: " << to_string(*r.representative_element) << "\n";
  os << "  indeterminacy dimension: " << r.indeterminacy.size() << "\n";
  for (const auto& [name, e] : r.certificate) os << "  " << name << " = " << to_string(e) << "\n";
  if (!r.note.empty()) os << "  note: " << r.note << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Lefschetz

inline Json lefschetz_report_json(const CohomologyRing& h, const LefschetzReport& r) {
  Json degs = Json::array();
  for (const auto& d : r.per_degree) {
    Json ker = Json::array();
    for (const auto& v : d.kernel) ker.push_back(coords_to_json(v));
    degs.push_back(Json{{"k", d.k}, {"source_dim", d.source_dim}, {"target_dim", d.target_dim}, {"rank", d.rank},
                        {"iso", d.iso}, {"kernel", ker}});
  }
  return Json{{"omega", class_to_json(h, r.omega)}, {"half_dim", r.half_dim}, {"per_degree", degs},
              {"overall", r.overall}};
}

inline std::string lefschetz_text(const LefschetzReport& r) {
  std::ostringstream os;
  os << "hard Lefschetz (n = " << r.half_dim << "): " << (r.overall ? "holds" : "fails") << "\n";
  for (const auto& d : r.per_degree)
    os << "  k=" << d.k << " rank " << d.rank << " of " << d.source_dim << "->" << d.target_dim
       << (d.iso ? " iso" : " NOT iso") << "\n";
  return os.str();
}

inline Json universal_report_json(const CohomologyRing& h, int k, int n,
                                  const std::vector<std::vector<CycScalar>>& witnesses) {
  Json w = Json::array();
  for (const auto& v : witnesses) {
    CohomologyClass c{k, v};
    w.push_back(class_to_json(h, c));
  }
  return Json{{"degree", k}, {"half_dim", n}, {"witnesses", w}, {"obstructed", !witnesses.empty()}};
}

// ---------------------------------------------------------------------------
// Minimal model

inline Json minimal_model_json(const MinimalModel& mm) {
  const AlgebraSpec& alg = *mm.model;
  Json gens = Json::array();
  for (std::size_t g = 0; g < alg.num_generators(); ++g)
    gens.push_back(Json{{"name", alg.generator(g).name},
                        {"degree", alg.generator_degree(g)},
                        {"differential", element_to_json(alg.differential_of(g))},
                        {"psi", element_to_json(mm.psi[g])}});
  Json c = Json::object(), n = Json::object();
  for (const auto& [deg, els] : mm.closed_part) {
    Json lst = Json::array();
    for (const auto& e : els) lst.push_back(element_to_json(e));
    c[std::to_string(deg)] = lst;
  }
  for (const auto& [deg, idx] : mm.n_generators) {
    Json lst = Json::array();
    for (auto g : idx) lst.push_back(alg.generator(g).name);
    n[std::to_string(deg)] = lst;
  }
  Json out{{"bound", mm.bound}, {"generators", gens}, {"C", c}, {"N", n}, {"identity", mm.identity},
           {"algebra", algebra_to_json(alg.data())}};
  return out;
}

inline std::string minimal_model_text(const MinimalModel& mm) {
  std::ostringstream os;
  const AlgebraSpec& alg = *mm.model;
  os << "minimal model through degree " << mm.bound << (mm.identity ? " (input is already minimal)" : "") << "\n";
  for (std::size_t g = 0; g < alg.num_generators(); ++g)
    os << "  " << alg.generator(g).name << " |" << alg.generator_degree(g) << "|  d = "
       << to_string(alg.differential_of(g)) << "  psi = " << to_string(mm.psi[g]) << "\n";
  return os.str();
}

inline Json s_formality_json(const SFormalityResult& r) {
  Json out{{"status", std::string(to_string(r.status))}, {"s", r.s}, {"route", r.route},
           {"checked_through", r.checked_through}, {"note", r.note}};
  if (r.witness) out["witness"] = element_to_json(*r.witness);
  return out;
}

inline Json formality_json(const CohomologyRing& h, const FormalityVerdict& v) {
  Json out{{"verdict", std::string(to_string(v.verdict))}, {"route", v.route}, {"certificate", v.certificate},
           {"products_scanned", v.products_scanned}};
  if (v.massey_witness) out["massey"] = massey_report_json(h, *v.massey_witness);
  if (v.s_formality) out["s_formality"] = s_formality_json(*v.s_formality);
  if (v.model) out["minimal_model"] = minimal_model_json(*v.model);
  return out;
}

inline std::string formality_text(const FormalityVerdict& v) {
  std::ostringstream os;
  os << to_string(v.verdict) << " (" << v.route << ")";
  if (!v.certificate.empty()) os << ": " << v.certificate;
  os << "\n";
  if (v.massey_witness) os << massey_text(*v.massey_witness);
  if (v.s_formality) os << "s-formality: " << to_string(v.s_formality->status) << " " << v.s_formality->note << "\n";
  return os.str();
}

}  // namespace cdga
