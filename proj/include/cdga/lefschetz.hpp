#pragma once

// Hard Lefschetz tests on cohomology rings.

#include <optional>
#include <vector>

#include "cdga/cohomology.hpp"

namespace cdga {

struct LefschetzDegree {
  int k = 0;
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  std::size_t rank = 0;
  bool iso = false;
  /// Kernel of L^{n-k} (class coordinates in H^k) when not injective.
  std::vector<std::vector<CycScalar>> kernel;
};

struct LefschetzReport {
  CohomologyClass omega;
  int half_dim = 0;
  std::vector<LefschetzDegree> per_degree;
  bool overall = true;
};

/// Matrix of multiplication by the class m: H^k -> H^{k+|m|}.
inline Matrix<CycScalar> cup_matrix(const CohomologyRing& h, const CohomologyClass& m, int k) {
  const std::size_t rows = h.betti(k), cols = h.betti(k + m.degree);
  Matrix<CycScalar> out(rows, cols, h.algebra()->zero_scalar());
  for (std::size_t i = 0; i < rows; ++i) out.set_row(i, h.cup(h.basis_class(k, i), m).coords);
  return out;
}

inline CohomologyClass class_power(const CohomologyRing& h, const CohomologyClass& c, int e) {
  CohomologyClass p = h.unit();
  for (int i = 0; i < e; ++i) p = h.cup(p, c);
  return p;
}

/// lefschetz_test: ranks of L_omega^{n-k}: H^k -> H^{2n-k} for k = 0..n.
inline LefschetzReport lefschetz_test(const CohomologyRing& h, const CohomologyClass& omega, int n) {
  if (omega.degree != 2) throw Error(ErrorCode::BadOmegaDegree, "omega has degree " + std::to_string(omega.degree));
  if (n < 0 || 2 * n > h.max_degree() || h.betti(2 * n) == 0)
    throw Error(ErrorCode::NoTop, "no nonzero top cohomology in degree " + std::to_string(2 * n));
  LefschetzReport rep{omega, n, {}, true};
  for (int k = 0; k <= n; ++k) {
    const CohomologyClass lk = class_power(h, omega, n - k);
    const Matrix<CycScalar> m = cup_matrix(h, lk, k);
    LefschetzDegree d;
    d.k = k;
    d.source_dim = h.betti(k);
    d.target_dim = h.betti(2 * n - k);
    d.rank = rank(m);
    d.iso = d.source_dim == d.target_dim && d.rank == d.source_dim;
    if (d.rank < d.source_dim) {
      const Matrix<CycScalar> ker = kernel(m);
      for (std::size_t i = 0; i < ker.rows(); ++i) d.kernel.push_back(ker.row(i));
    }
    rep.overall = rep.overall && d.iso;
    rep.per_degree.push_back(std::move(d));
  }
  return rep;
}

/// universal_lefschetz_obstruction: classes in H^k killed by every
/// (n-k)-fold product of degree-2 classes, as a basis of that subspace.
/// Multilinearity reduces this to products of basis classes.
inline std::vector<std::vector<CycScalar>> universal_lefschetz_witnesses(const CohomologyRing& h, int k, int n) {
  if (n < k) throw Error(ErrorCode::InvalidArgument, "degree above half dimension");
  const int e = n - k;
  const std::size_t b2 = h.betti(2);
  const auto zero = h.algebra()->zero_scalar();
  const std::size_t src = h.betti(k);
  if (src == 0) return {};
  // Products over multisets of H^2 basis indices (cup is commutative on
  // even classes).
  std::vector<CohomologyClass> products;
  std::vector<std::size_t> idx(static_cast<std::size_t>(e), 0);
  if (e == 0) {
    products.push_back(h.unit());
  } else if (b2 > 0) {
    while (true) {
      CohomologyClass p = h.unit();
      for (auto i : idx) p = h.cup(p, h.basis_class(2, i));
      products.push_back(std::move(p));
      int pos = e - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == b2 - 1) --pos;
      if (pos < 0) break;
      const std::size_t v = idx[static_cast<std::size_t>(pos)] + 1;
      for (int q = pos; q < e; ++q) idx[static_cast<std::size_t>(q)] = v;
    }
  }
  // Stack the maps H^k -> H^{2n-k} side by side.
  const std::size_t tgt = h.betti(2 * n - k);
  Matrix<CycScalar> stacked(src, tgt * products.size(), zero);
  for (std::size_t p = 0; p < products.size(); ++p) {
    const Matrix<CycScalar> m = cup_matrix(h, products[p], k);
    for (std::size_t i = 0; i < src; ++i)
      for (std::size_t j = 0; j < tgt; ++j) stacked(i, p * tgt + j) = m(i, j);
  }
  const Matrix<CycScalar> ker = kernel(stacked);
  std::vector<std::vector<CycScalar>> out;
  for (std::size_t i = 0; i < ker.rows(); ++i) out.push_back(ker.row(i));
  return out;
}

/// Some witness class, or nullopt when hard Lefschetz in degree k is not
/// obstructed for every omega at once.
inline std::optional<CohomologyClass> universal_lefschetz_obstruction(const CohomologyRing& h, int k, int n) {
  auto w = universal_lefschetz_witnesses(h, k, n);
  if (w.empty()) return std::nullopt;
  return CohomologyClass{k, w.front()};
}

}  // namespace cdga
