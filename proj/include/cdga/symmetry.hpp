#pragma once

// Cyclic group actions by chain automorphisms and the invariant complex.

#include <map>
#include <string>
#include <vector>

#include "cdga/cohomology.hpp"
#include "cdga/morphism.hpp"

namespace cdga {

struct GroupActionData {
  int order = 1;
  std::map<std::string, ElementExpr> images;
};

/// A validated action of Z_m; rho.images are the images of the generator.
struct GroupAction {
  AlgebraPtr parent;
  int order = 1;
  Morphism rho;
};

/// Generator images of rho^j.
inline Morphism action_power(const GroupAction& act, int j) {
  Morphism p = identity_morphism(act.parent);
  for (int i = 0; i < j; ++i) p = compose(act.rho, p);
  return p;
}

namespace detail {

inline bool is_identity(const Morphism& f) {
  for (std::size_t i = 0; i < f.images.size(); ++i)
    if (f.images[i] != f.source->generator_element(i)) return false;
  return true;
}

}  // namespace detail

/// action_validate. The period search for ORDER_MISMATCH stops at
/// max(4m, 64); beyond that the diagnostic says so.
inline GroupAction validate_action(const AlgebraPtr& alg, const GroupActionData& data) {
  if (data.order < 1) throw Error(ErrorCode::InvalidArgument, "order must be positive");
  GroupAction act{alg, data.order, Morphism{alg, alg, {}}};
  for (std::size_t i = 0; i < alg->num_generators(); ++i) {
    const auto& g = alg->generator(i);
    auto it = data.images.find(g.name);
    if (it == data.images.end()) {
      act.rho.images.push_back(alg->generator_element(i));
      continue;
    }
    act.rho.images.push_back(make_element(*alg, it->second, g.degree));
  }
  for (const auto& [name, expr] : data.images)
    if (!alg->find_generator(name)) throw Error(ErrorCode::InvalidArgument, "image given for unknown generator '" + name + "'");

  if (auto defect = chain_map_defect(act.rho))
    throw Error(ErrorCode::NotChainMap, "generator '" + alg->generator(defect->first).name +
                                            "': rho(d g) - d(rho g) = " + to_string(defect->second));
  if (auto r = relation_defect(act.rho))
    throw Error(ErrorCode::RelationsNotPreserved, "relation #" + std::to_string(*r) + " is not sent into the ideal");
  for (std::size_t i = 0; i < alg->num_generators(); ++i) {
    auto j = alg->conjugate_index(i);
    if (!j) continue;
    if (act.rho.images[*j] != conj_elem(act.rho.images[i]))
      throw Error(ErrorCode::ConjugationBroken, "rho(" + alg->generator(*j).name + ") != conj(rho(" +
                                                    alg->generator(i).name + "))");
  }

  const int limit = std::max(4 * data.order, 64);
  Morphism p = identity_morphism(alg);
  for (int j = 1; j <= limit; ++j) {
    p = compose(act.rho, p);
    if (detail::is_identity(p)) {
      if (j != data.order)
        throw Error(ErrorCode::OrderMismatch, "smallest period is " + std::to_string(j) + ", declared order " +
                                                  std::to_string(data.order));
      return act;
    }
  }
  throw Error(ErrorCode::OrderMismatch, "no period up to " + std::to_string(limit) + ", declared order " +
                                            std::to_string(data.order));
}

/// Matrix of rho* on the degree-k slice (row-vector convention).
inline Matrix<CycScalar> action_matrix(const GroupAction& act, int k) {
  const AlgebraSpec& alg = *act.parent;
  const auto& b = basis(alg, k);
  Matrix<CycScalar> m(b.size(), b.size(), alg.zero_scalar());
  for (std::size_t i = 0; i < b.size(); ++i)
    m.set_row(i, alg.coords(apply(act.rho, monomial_element(alg, b[i], alg.one_scalar()))));
  return m;
}

/// Averaging projector (1/m) sum_j (rho*)^j on the degree-k slice.
inline Matrix<CycScalar> projector_matrix(const GroupAction& act, int k) {
  const AlgebraSpec& alg = *act.parent;
  const std::size_t n = alg.dim(k);
  const Matrix<CycScalar> r = action_matrix(act, k);
  Matrix<CycScalar> pw(n, n, alg.zero_scalar()), sum(n, n, alg.zero_scalar());
  for (std::size_t i = 0; i < n; ++i) pw(i, i) = alg.one_scalar();
  for (int j = 0; j < act.order; ++j) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (!pw(a, b).is_zero()) sum(a, b) += pw(a, b);
    pw = pw * r;
  }
  const CycScalar inv(Rational(1, act.order));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!sum(a, b).is_zero()) sum(a, b) = inv * sum(a, b);
  return sum;
}

/// invariant_complex: per-degree fixed subspaces as the row space of the
/// averaging projector.
inline CochainSpace invariant_complex(const GroupAction& act) {
  const AlgebraSpec& alg = *act.parent;
  std::vector<std::optional<Echelon<CycScalar>>> sub;
  for (int k = 0; k <= alg.degree_cap(); ++k) sub.emplace_back(row_reduce(projector_matrix(act, k)));
  return CochainSpace(act.parent, std::move(sub));
}

/// invariant_cohomology: cohomology of the invariant complex, carrying the
/// group order for integration.
inline CohomologyRing invariant_cohomology(const GroupAction& act, int max_degree) {
  return compute_cohomology(invariant_complex(act), max_degree, act.order);
}

}  // namespace cdga
