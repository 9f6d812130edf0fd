#pragma once

// Algebra morphisms given by generator images.

#include <string>
#include <vector>

#include "cdga/algebra.hpp"

namespace cdga {

struct Morphism {
  AlgebraPtr source;
  AlgebraPtr target;
  // images[i] is the image of source generator i; same degree.
  std::vector<Element> images;
};

/// Multiplicative extension of the generator images.
inline Element apply(const Morphism& f, const Element& a) {
  f.source->check_parent(a);
  const AlgebraSpec& tgt = *f.target;
  Element out = tgt.zero(a.degree);
  for (const auto& [m, c] : a.terms) {
    Element t = tgt.one();
    for (std::size_t i = 0; i < m.size(); ++i)
      for (int e = 0; e < m[i]; ++e) t = t * f.images[i];
    if (t.truncated) throw Error(ErrorCode::CapExceeded, "morphism image exceeds the target degree cap");
    out = out + c * t;
  }
  return out;
}

inline Morphism compose(const Morphism& g, const Morphism& f) {
  Morphism h{f.source, g.target, {}};
  for (const auto& img : f.images) h.images.push_back(apply(g, img));
  return h;
}

inline Morphism identity_morphism(const AlgebraPtr& alg) {
  Morphism id{alg, alg, {}};
  for (std::size_t i = 0; i < alg->num_generators(); ++i) id.images.push_back(alg->generator_element(i));
  return id;
}

/// First source generator where f fails to commute with d, if any.
inline std::optional<std::pair<std::size_t, Element>> chain_map_defect(const Morphism& f) {
  for (std::size_t i = 0; i < f.source->num_generators(); ++i) {
    const Element& dg = f.source->differential_of(i);
    if (dg.degree > f.source->degree_cap() || dg.degree > f.target->degree_cap()) continue;
    Element lhs = apply(f, dg);
    Element rhs = elem_d(f.images[i]);
    if (rhs.truncated) continue;
    Element diff = lhs - rhs;
    if (!diff.is_zero()) return std::make_pair(i, diff);
  }
  return std::nullopt;
}

/// Index of the first source relation not sent to zero, if any.
inline std::optional<std::size_t> relation_defect(const Morphism& f) {
  const auto& rels = f.source->relations();
  for (std::size_t r = 0; r < rels.size(); ++r) {
    // Relations are free-algebra elements; evaluate term by term.
    const Element& rel = rels[r];
    const AlgebraSpec& tgt = *f.target;
    if (rel.degree > tgt.degree_cap()) continue;
    Element out = tgt.zero(rel.degree);
    for (const auto& [m, c] : rel.terms) {
      Element t = tgt.one();
      for (std::size_t i = 0; i < m.size(); ++i)
        for (int e = 0; e < m[i]; ++e) t = t * f.images[i];
      out = out + c * t;
    }
    if (!out.is_zero()) return r;
  }
  return std::nullopt;
}

}  // namespace cdga
