#pragma once

// Dense exact linear algebra over an arbitrary field type.
//
// Row-vector convention throughout: a linear map V -> W is stored as a
// dim(V) x dim(W) matrix whose i-th row is the image of the i-th basis
// vector. Elimination always takes the leftmost nonzero column and the first
// available row, so every result here is a deterministic function of the
// input matrix.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cdga {

template <class F>
struct field_traits;

template <>
struct field_traits<mpq_class> {
  static bool is_zero(const mpq_class& x) { return sgn(x) == 0; }
  static mpq_class zero_like(const mpq_class&) { return mpq_class(0); }
  static mpq_class one_like(const mpq_class&) { return mpq_class(1); }
};

template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const F& zero)
      : rows_(rows), cols_(cols), zero_(zero), data_(rows * cols, zero) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const F& zero() const { return zero_; }

  F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<F> row(std::size_t r) const {
    return std::vector<F>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }
  void set_row(std::size_t r, const std::vector<F>& v) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
  }
  void append_row(const std::vector<F>& v) {
    if (rows_ == 0 && cols_ == 0) cols_ = v.size();
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, zero_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  static Matrix from_rows(const std::vector<std::vector<F>>& rows, std::size_t cols,
                          const F& zero) {
    Matrix m(rows.size(), cols, zero);
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  F zero_{};
  std::vector<F> data_;
};

template <class F>
Matrix<F> operator*(const Matrix<F>& a, const Matrix<F>& b) {
  using T = field_traits<F>;
  Matrix<F> out(a.rows(), b.cols(), a.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (T::is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!T::is_zero(b(k, j))) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

template <class F>
bool operator==(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

template <class F>
bool is_zero_vector(const std::vector<F>& v) {
  for (const auto& x : v)
    if (!field_traits<F>::is_zero(x)) return false;
  return true;
}

/// Result of Gauss-Jordan elimination. `rows` is the reduced matrix with its
/// zero rows dropped; `transform` (when tracked) expresses each surviving row
/// as a combination of the original rows.
template <class F>
struct Echelon {
  Matrix<F> rows;
  std::vector<std::size_t> pivots;
  std::optional<Matrix<F>> transform;

  std::size_t rank() const { return pivots.size(); }
};

template <class F>
Echelon<F> row_reduce(Matrix<F> m, bool track_transform = false) {
  using T = field_traits<F>;
  const std::size_t nr = m.rows(), nc = m.cols();
  Matrix<F> tr;
  if (track_transform) {
    tr = Matrix<F>(nr, nr, m.zero());
    for (std::size_t i = 0; i < nr; ++i) tr(i, i) = T::one_like(m.zero());
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  std::vector<std::size_t> nz;
  std::vector<std::size_t> tnz;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && T::is_zero(m(p, c))) ++p;
    if (p == nr) continue;
    m.swap_rows(p, r);
    if (track_transform) tr.swap_rows(p, r);
    const F inv = T::one_like(m.zero()) / m(r, c);
    nz.clear();
    for (std::size_t j = c; j < nc; ++j)
      if (!T::is_zero(m(r, j))) {
        m(r, j) *= inv;
        nz.push_back(j);
      }
    if (track_transform) {
      tnz.clear();
      for (std::size_t j = 0; j < nr; ++j)
        if (!T::is_zero(tr(r, j))) {
          tr(r, j) *= inv;
          tnz.push_back(j);
        }
    }
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == r || T::is_zero(m(i, c))) continue;
      const F f = m(i, c);
      for (std::size_t j : nz) m(i, j) -= f * m(r, j);
      if (track_transform)
        for (std::size_t j : tnz) tr(i, j) -= f * tr(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  Echelon<F> e;
  e.rows = Matrix<F>(r, nc, m.zero());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < nc; ++j) e.rows(i, j) = m(i, j);
  if (track_transform) {
    Matrix<F> t(r, nr, m.zero());
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < nr; ++j) t(i, j) = tr(i, j);
    e.transform = std::move(t);
  }
  e.pivots = std::move(pivots);
  return e;
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return row_reduce(m).rank();
}

/// Basis (as matrix rows) of { x : x * m = 0 }, i.e. the kernel of the map
/// represented by m in the row-vector convention.
template <class F>
Matrix<F> kernel(const Matrix<F>& m) {
  using T = field_traits<F>;
  // x * m = 0  <=>  m^T x^T = 0: null space of the transpose.
  const Matrix<F> mt = m.transpose();
  const auto e = row_reduce(mt);
  const std::size_t n = m.rows();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix<F> out(0, n, m.zero());
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(n, m.zero());
    v[free] = T::one_like(m.zero());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rows(i, free);
    out.append_row(v);
  }
  return out;
}

/// Reduce v against an echelon basis (rows with identity at `pivots`).
/// Returns the coefficients used and leaves the remainder in v.
template <class F>
std::vector<F> reduce_against(std::vector<F>& v, const Matrix<F>& rows,
                              const std::vector<std::size_t>& pivots) {
  using T = field_traits<F>;
  std::vector<F> coeffs(pivots.size(), rows.zero());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (T::is_zero(v[pivots[i]])) continue;
    const F f = v[pivots[i]];
    coeffs[i] = f;
    for (std::size_t j = 0; j < rows.cols(); ++j)
      if (!T::is_zero(rows(i, j))) v[j] -= f * rows(i, j);
  }
  return coeffs;
}

/// Solve x * m = b for x (row-vector convention); nullopt when b is not in
/// the row space. The particular solution is the one produced by the fixed
/// pivot policy.
template <class F>
std::optional<std::vector<F>> solve_left(const Matrix<F>& m, std::vector<F> b) {
  const auto e = row_reduce(m, true);
  auto coeffs = reduce_against(b, e.rows, e.pivots);
  if (!is_zero_vector(b)) return std::nullopt;
  std::vector<F> x(m.rows(), m.zero());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (field_traits<F>::is_zero(coeffs[i])) continue;
    for (std::size_t j = 0; j < m.rows(); ++j) x[j] += coeffs[i] * (*e.transform)(i, j);
  }
  return x;
}

}  // namespace cdga
