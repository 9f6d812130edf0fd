#pragma once

// Cohomology of a validated algebra, or of a graded subcomplex of it (the
// invariant complex of a group action).
//
// Conventions: cochains of degree k are coordinate vectors over a basis of
// the cochain space C^k. The boundary space B^k is kept in reduced echelon
// form together with the transform back to C^{k-1}, which yields canonical
// primitives. Representatives of H^k are the reduced echelon basis of the
// cycle space after reduction modulo B^k, so every representative vanishes
// at the pivots of B^k.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "cdga/algebra.hpp"

namespace cdga {

/// Graded subspace of an algebra; a degree with no subspace is the full slice.
class CochainSpace {
 public:
  CochainSpace() = default;
  explicit CochainSpace(AlgebraPtr alg) : alg_(std::move(alg)) {}
  CochainSpace(AlgebraPtr alg, std::vector<std::optional<Echelon<CycScalar>>> sub)
      : alg_(std::move(alg)), sub_(std::move(sub)) {}

  const AlgebraPtr& algebra() const { return alg_; }
  bool is_full() const { return sub_.empty(); }

  std::size_t dim(int k) const {
    const auto* s = subspace(k);
    return s ? s->rank() : alg_->dim(k);
  }

  /// Coordinates of an element of this space; throws if e lies outside it.
  std::vector<CycScalar> coords(const Element& e) const {
    std::vector<CycScalar> v = alg_->coords(e);
    const auto* s = subspace(e.degree);
    if (!s) return v;
    auto c = reduce_against(v, s->rows, s->pivots);
    if (!is_zero_vector(v))
      throw Error(ErrorCode::InvalidArgument, "element is not in the cochain subspace: " + to_string(e));
    return c;
  }

  Element element(int k, const std::vector<CycScalar>& c) const {
    const auto* s = subspace(k);
    if (!s) return alg_->from_coords(k, c);
    std::vector<CycScalar> v(alg_->dim(k), alg_->zero_scalar());
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i].is_zero()) continue;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (!s->rows(i, j).is_zero()) v[j] += c[i] * s->rows(i, j);
    }
    return alg_->from_coords(k, v);
  }

  Element basis_element(int k, std::size_t i) const {
    std::vector<CycScalar> c(dim(k), alg_->zero_scalar());
    c[i] = alg_->one_scalar();
    return element(k, c);
  }

 private:
  const Echelon<CycScalar>* subspace(int k) const {
    if (sub_.empty()) return nullptr;
    if (k < 0 || static_cast<std::size_t>(k) >= sub_.size())
      throw Error(ErrorCode::CapExceeded, "degree " + std::to_string(k) + " outside the cochain subspace");
    return sub_[static_cast<std::size_t>(k)] ? &*sub_[static_cast<std::size_t>(k)] : nullptr;
  }

  AlgebraPtr alg_;
  std::vector<std::optional<Echelon<CycScalar>>> sub_;
};

/// A cohomology class: coordinates in the representative basis of H^degree.
struct CohomologyClass {
  int degree = 0;
  std::vector<CycScalar> coords;

  bool is_zero() const { return is_zero_vector(coords); }
};

struct TopClass {
  int degree = 0;
  Monomial volume;
};

class CohomologyRing {
 public:
  struct Degree {
    // Matrix of d: C^{k-1} -> C^k, reduced, with transform rows in C^{k-1}.
    Echelon<CycScalar> boundaries;
    // Representatives in C^k coordinates, reduced echelon form.
    Echelon<CycScalar> reps;
    std::vector<Element> rep_elements;
  };

  const AlgebraPtr& algebra() const { return space_.algebra(); }
  const CochainSpace& space() const { return space_; }
  int max_degree() const { return max_degree_; }
  int group_order() const { return group_order_; }
  const std::optional<TopClass>& top() const { return top_; }
  void set_top(TopClass t) { top_ = std::move(t); }

  std::vector<std::size_t> betti() const {
    std::vector<std::size_t> b;
    for (int k = 0; k <= max_degree_; ++k) b.push_back(betti(k));
    return b;
  }
  std::size_t betti(int k) const {
    if (k < 0 || k > max_degree_) return 0;
    return degrees_[static_cast<std::size_t>(k)].reps.rank();
  }
  const std::vector<Element>& reps(int k) const { return deg(k).rep_elements; }

  CohomologyClass zero_class(int k) const {
    return {k, std::vector<CycScalar>(betti(k), algebra()->zero_scalar())};
  }
  CohomologyClass basis_class(int k, std::size_t i) const {
    CohomologyClass c = zero_class(k);
    c.coords.at(i) = algebra()->one_scalar();
    return c;
  }
  CohomologyClass unit() const { return basis_class(0, 0); }

  Element representative(const CohomologyClass& c) const {
    const auto& reps = deg(c.degree).rep_elements;
    Element out = algebra()->zero(c.degree);
    for (std::size_t i = 0; i < reps.size(); ++i)
      if (!c.coords[i].is_zero()) out = out + c.coords[i] * reps[i];
    return out;
  }

  void require_closed(const Element& z) const {
    Element dz = elem_d(z);
    if (dz.truncated) throw Error(ErrorCode::CapTooLow, "d of a degree " + std::to_string(z.degree) + " element exceeds the cap");
    if (!dz.is_zero()) throw Error(ErrorCode::NotClosed, "d z = " + to_string(dz));
  }

  /// class_of: coordinates of [z]; zero iff z is exact.
  CohomologyClass class_of(const Element& z) const {
    algebra()->check_parent(z);
    if (z.degree > max_degree_)
      throw Error(ErrorCode::DegreeOverflow, "degree " + std::to_string(z.degree) + " beyond max_degree");
    require_closed(z);
    const Degree& d = deg(z.degree);
    std::vector<CycScalar> v = space_.coords(z);
    reduce_against(v, d.boundaries.rows, d.boundaries.pivots);
    auto c = reduce_against(v, d.reps.rows, d.reps.pivots);
    if (!is_zero_vector(v)) throw Error(ErrorCode::NotClosed, "cycle not spanned by representatives");
    return {z.degree, std::move(c)};
  }

  /// Canonical primitive w with d w = z, or nullopt when [z] != 0.
  std::optional<Element> primitive(const Element& z) const {
    algebra()->check_parent(z);
    require_closed(z);
    if (z.degree == 0) {
      if (z.is_zero()) return algebra()->zero(-1);
      return std::nullopt;
    }
    if (z.degree > max_degree_ + 1)
      throw Error(ErrorCode::DegreeOverflow, "degree " + std::to_string(z.degree) + " beyond max_degree + 1");
    const Degree& d = deg(z.degree);
    std::vector<CycScalar> v = space_.coords(z);
    auto c = reduce_against(v, d.boundaries.rows, d.boundaries.pivots);
    if (!is_zero_vector(v)) return std::nullopt;
    const auto& t = *d.boundaries.transform;
    std::vector<CycScalar> w(t.cols(), algebra()->zero_scalar());
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i].is_zero()) continue;
      for (std::size_t j = 0; j < w.size(); ++j)
        if (!t(i, j).is_zero()) w[j] += c[i] * t(i, j);
    }
    return space_.element(z.degree - 1, w);
  }

  /// dim B^k.
  std::size_t boundary_rank(int k) const { return deg(k).boundaries.rank(); }

  CohomologyClass cup(const CohomologyClass& u, const CohomologyClass& v) const {
    if (u.degree + v.degree > max_degree_)
      throw Error(ErrorCode::DegreeOverflow, "cup product lands in degree " + std::to_string(u.degree + v.degree));
    return class_of(representative(u) * representative(v));
  }

  /// Evaluation against the declared volume monomial, scaled by group_order.
  CycScalar integrate(const CohomologyClass& z, int group_order) const {
    if (!top_) throw Error(ErrorCode::NoTopDeclared, "no top class declared");
    if (z.degree != top_->degree)
      throw Error(ErrorCode::InvalidArgument, "integrand has degree " + std::to_string(z.degree) +
                                                  ", top degree is " + std::to_string(top_->degree));
    const Element r = representative(z);
    auto it = r.terms.find(top_->volume);
    if (it == r.terms.end()) return algebra()->zero_scalar();
    return CycScalar(static_cast<long>(group_order)) * it->second;
  }
  CycScalar integrate(const CohomologyClass& z) const { return integrate(z, group_order_); }

  /// Poincare pairing H^k x H^{n-k} -> H^n is square and non-degenerate for
  /// every k; requires b_n = 1.
  bool pairing_ok(int n) const {
    if (n > max_degree_ || betti(n) != 1) return false;
    for (int k = 0; k <= n; ++k) {
      const std::size_t a = betti(k), b = betti(n - k);
      if (a != b) return false;
      if (a == 0) continue;
      Matrix<CycScalar> m(a, b, algebra()->zero_scalar());
      for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j)
          m(i, j) = cup(basis_class(k, i), basis_class(n - k, j)).coords[0];
      if (rank(m) != a) return false;
    }
    return true;
  }

  friend CohomologyRing compute_cohomology(CochainSpace space, int max_degree, int group_order);

 private:
  const Degree& deg(int k) const {
    if (k < 0 || k > max_degree_ + 1)
      throw Error(ErrorCode::DegreeOverflow, "degree " + std::to_string(k) + " outside the computed range");
    return degrees_[static_cast<std::size_t>(k)];
  }

  CochainSpace space_;
  int max_degree_ = 0;
  int group_order_ = 1;
  std::vector<Degree> degrees_;
  std::optional<TopClass> top_;
};

/// Matrix of d: C^{k} -> C^{k+1} in the row-vector convention.
inline Matrix<CycScalar> differential_matrix(const CochainSpace& space, int k) {
  const auto& alg = *space.algebra();
  const std::size_t rows = k < 0 ? 0 : space.dim(k);
  const std::size_t cols = space.dim(k + 1);
  Matrix<CycScalar> m(rows, cols, alg.zero_scalar());
  for (std::size_t i = 0; i < rows; ++i) {
    Element de = elem_d(space.basis_element(k, i));
    if (de.truncated) throw Error(ErrorCode::CapTooLow, "differential leaves the capped range");
    m.set_row(i, space.coords(de));
  }
  return m;
}

inline CohomologyRing compute_cohomology(CochainSpace space, int max_degree, int group_order) {
  const auto& alg = *space.algebra();
  if (max_degree < 0) throw Error(ErrorCode::InvalidArgument, "max_degree must be non-negative");
  if (max_degree > alg.degree_cap() - 1)
    throw Error(ErrorCode::CapTooLow, "max_degree " + std::to_string(max_degree) + " needs degree_cap >= " +
                                          std::to_string(max_degree + 1));
  CohomologyRing h;
  h.space_ = std::move(space);
  h.max_degree_ = max_degree;
  h.group_order_ = group_order;
  h.degrees_.resize(static_cast<std::size_t>(max_degree) + 2);
  const CochainSpace& sp = h.space_;

  // dmat[k] is d: C^k -> C^{k+1}; B^k is the row space of dmat[k-1].
  std::vector<Matrix<CycScalar>> dmat;
  for (int k = 0; k <= max_degree; ++k) dmat.push_back(differential_matrix(sp, k));
  for (int k = 0; k <= max_degree + 1; ++k) {
    auto& D = h.degrees_[static_cast<std::size_t>(k)];
    D.boundaries = row_reduce(k == 0 ? Matrix<CycScalar>(0, sp.dim(0), alg.zero_scalar())
                                     : dmat[static_cast<std::size_t>(k - 1)],
                              true);
    D.reps.rows = Matrix<CycScalar>(0, sp.dim(k), alg.zero_scalar());
  }
  for (int k = 0; k <= max_degree; ++k) {
    auto& D = h.degrees_[static_cast<std::size_t>(k)];
    Matrix<CycScalar> z = kernel(dmat[static_cast<std::size_t>(k)]);
    Matrix<CycScalar> reduced(0, sp.dim(k), alg.zero_scalar());
    for (std::size_t i = 0; i < z.rows(); ++i) {
      auto v = z.row(i);
      reduce_against(v, D.boundaries.rows, D.boundaries.pivots);
      if (!is_zero_vector(v)) reduced.append_row(v);
    }
    if (reduced.rows() > 0) {
      D.reps = row_reduce(reduced);
    } else {
      D.reps.rows = Matrix<CycScalar>(0, sp.dim(k), alg.zero_scalar());
    }
    for (std::size_t i = 0; i < D.reps.rank(); ++i) D.rep_elements.push_back(sp.element(k, D.reps.rows.row(i)));
  }
  return h;
}

/// cohomology(spec, k): H^0..H^k of the full algebra.
inline CohomologyRing cohomology(const AlgebraPtr& alg, int max_degree) {
  return compute_cohomology(CochainSpace(alg), max_degree, 1);
}

/// is_exact: canonical primitive in the full algebra, computed in a ring
/// sized just enough for the degree of z.
inline std::optional<Element> is_exact(const AlgebraPtr& alg, const Element& z) {
  const int k = std::max(z.degree - 1, 0);
  return cohomology(alg, std::min(k, alg->degree_cap() - 1)).primitive(z);
}

}  // namespace cdga
