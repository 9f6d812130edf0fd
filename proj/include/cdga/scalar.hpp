#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_N).
//
// Elements are stored as rational coefficient vectors of length phi(N) in the
// power basis 1, zeta, ..., zeta^(phi(N)-1), i.e. as canonical residues
// modulo the N-th cyclotomic polynomial. Values with different moduli are
// compared and combined in Q(zeta_lcm).

#include <cctype>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cdga/error.hpp"
#include "cdga/linalg.hpp"

namespace cdga {

using Rational = mpq_class;

namespace detail {

// Integer polynomials, lowest degree first.
using IntPoly = std::vector<mpz_class>;

inline IntPoly poly_divexact(IntPoly num, const IntPoly& den) {
  // den is monic.
  const std::size_t dn = den.size() - 1;
  IntPoly q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const mpz_class c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

inline IntPoly cyclotomic_poly(int n) {
  IntPoly p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = poly_divexact(p, cyclotomic_poly(d));
  return p;
}

}  // namespace detail

inline int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

/// Immutable per-modulus data: Phi_N and the reductions of zeta^j, 0 <= j < 2N.
class CyclotomicField {
 public:
  explicit CyclotomicField(int n) : n_(n), phi_(euler_phi(n)) {
    const auto poly = detail::cyclotomic_poly(n);
    const std::size_t deg = static_cast<std::size_t>(phi_);
    powers_.reserve(static_cast<std::size_t>(2 * n));
    std::vector<Rational> cur(deg, 0);
    cur[0] = 1;
    for (int j = 0; j < 2 * n; ++j) {
      powers_.push_back(cur);
      // multiply by zeta: shift up and fold zeta^deg = -sum poly[i] zeta^i.
      Rational top = cur[deg - 1];
      for (std::size_t i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (sgn(top) != 0)
        for (std::size_t i = 0; i < deg; ++i) cur[i] -= top * Rational(poly[i]);
    }
    cyclotomic_ = poly;
  }

  int modulus() const { return n_; }
  int degree() const { return phi_; }
  const std::vector<Rational>& zeta_power(int j) const {
    int r = ((j % n_) + n_) % n_;
    return powers_[static_cast<std::size_t>(r)];
  }
  /// zeta^j for 0 <= j < 2N-1 without modular wraparound (product folding).
  const std::vector<Rational>& raw_power(std::size_t j) const { return powers_[j]; }
  const detail::IntPoly& cyclotomic_polynomial() const { return cyclotomic_; }

  static const CyclotomicField* get(int n) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "cyclotomic modulus must be >= 1");
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CyclotomicField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<CyclotomicField>(n);
    return slot.get();
  }

 private:
  int n_;
  int phi_;
  std::vector<std::vector<Rational>> powers_;
  detail::IntPoly cyclotomic_;
};

class CycScalar {
 public:
  CycScalar() : field_(CyclotomicField::get(1)), c_(1, 0) {}
  CycScalar(long v) : field_(CyclotomicField::get(1)), c_(1, Rational(v)) {}  // NOLINT
  CycScalar(const Rational& v) : field_(CyclotomicField::get(1)), c_(1, v) { c_[0].canonicalize(); }  // NOLINT

  /// Canonical reduction of sum poly[j] * zeta_N^j (any length).
  static CycScalar from_poly(int n, const std::vector<Rational>& poly) {
    CycScalar s(CyclotomicField::get(n));
    for (std::size_t j = 0; j < poly.size(); ++j) {
      if (sgn(poly[j]) == 0) continue;
      Rational q = poly[j];
      q.canonicalize();
      const auto& zp = s.field_->zeta_power(static_cast<int>(j % static_cast<std::size_t>(n)));
      for (std::size_t i = 0; i < zp.size(); ++i)
        if (sgn(zp[i]) != 0) s.c_[i] += q * zp[i];
    }
    return s;
  }
  static CycScalar zero(int n) { return CycScalar(CyclotomicField::get(n)); }
  static CycScalar one(int n) { return rational(n, 1); }
  static CycScalar rational(int n, const Rational& q) {
    CycScalar s(CyclotomicField::get(n));
    s.c_[0] = q;
    s.c_[0].canonicalize();
    return s;
  }
  /// zeta_N^k.
  static CycScalar zeta(int n, int k = 1) {
    CycScalar s(CyclotomicField::get(n));
    s.c_ = s.field_->zeta_power(k);
    return s;
  }

  int modulus() const { return field_->modulus(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& q : c_)
      if (sgn(q) != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (sgn(c_[i]) != 0) return false;
    return true;
  }
  /// Throws unless the value lies in Q.
  Rational rational_value() const {
    if (!is_rational()) throw Error(ErrorCode::InvalidArgument, "scalar is not rational: " + str());
    return c_[0];
  }

  /// Image under zeta -> zeta^(N-1) (complex conjugation).
  CycScalar conj() const {
    CycScalar s(field_);
    const int n = modulus();
    for (std::size_t j = 0; j < c_.size(); ++j) {
      if (sgn(c_[j]) == 0) continue;
      const auto& zp = field_->zeta_power(n - static_cast<int>(j));
      for (std::size_t i = 0; i < zp.size(); ++i)
        if (sgn(zp[i]) != 0) s.c_[i] += c_[j] * zp[i];
    }
    return s;
  }

  CycScalar real_part() const { return (*this + conj()) * CycScalar(Rational(1, 2)); }

  /// Re-express in Q(zeta_M) via zeta_N -> zeta_M^(M/N).
  CycScalar embed(int m) const {
    const int n = modulus();
    if (m < 1 || m % n != 0)
      throw Error(ErrorCode::ModulusMismatch,
                  "cannot embed Q(zeta_" + std::to_string(n) + ") into Q(zeta_" +
                      std::to_string(m) + ")");
    if (m == n) return *this;
    CycScalar s(CyclotomicField::get(m));
    const int step = m / n;
    for (std::size_t j = 0; j < c_.size(); ++j) {
      if (sgn(c_[j]) == 0) continue;
      const auto& zp = s.field_->zeta_power(step * static_cast<int>(j));
      for (std::size_t i = 0; i < zp.size(); ++i)
        if (sgn(zp[i]) != 0) s.c_[i] += c_[j] * zp[i];
    }
    return s;
  }

  CycScalar operator-() const {
    CycScalar s = *this;
    for (auto& q : s.c_) q = -q;
    return s;
  }

  CycScalar& operator+=(const CycScalar& o) {
    if (o.field_ != field_) {
      if (o.modulus() == 1) {
        c_[0] += o.c_[0];
        return *this;
      }
      return *this = promote_op(*this, o, [](auto& a, const auto& b) { a += b; });
    }
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (sgn(o.c_[i]) != 0) c_[i] += o.c_[i];
    return *this;
  }
  CycScalar& operator-=(const CycScalar& o) {
    if (o.field_ != field_) {
      if (o.modulus() == 1) {
        c_[0] -= o.c_[0];
        return *this;
      }
      return *this = promote_op(*this, o, [](auto& a, const auto& b) { a -= b; });
    }
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (sgn(o.c_[i]) != 0) c_[i] -= o.c_[i];
    return *this;
  }
  CycScalar& operator*=(const CycScalar& o) { return *this = *this * o; }
  CycScalar& operator/=(const CycScalar& o) { return *this = *this / o; }

  friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
  friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }

  friend CycScalar operator*(const CycScalar& a, const CycScalar& b) {
    if (a.field_ != b.field_) {
      if (b.field_->modulus() == 1) return a.scaled(b.c_[0]);
      if (a.field_->modulus() == 1) return b.scaled(a.c_[0]);
      const int m = std::lcm(a.modulus(), b.modulus());
      return a.embed(m) * b.embed(m);
    }
    const std::size_t d = a.c_.size();
    if (d == 1) {
      CycScalar s(a.field_);
      s.c_[0] = a.c_[0] * b.c_[0];
      return s;
    }
    std::vector<Rational> prod(2 * d - 1, 0);
    for (std::size_t i = 0; i < d; ++i) {
      if (sgn(a.c_[i]) == 0) continue;
      for (std::size_t j = 0; j < d; ++j)
        if (sgn(b.c_[j]) != 0) prod[i + j] += a.c_[i] * b.c_[j];
    }
    CycScalar s(a.field_);
    for (std::size_t k = 0; k < prod.size(); ++k) {
      if (sgn(prod[k]) == 0) continue;
      if (k < d) {
        s.c_[k] += prod[k];
        continue;
      }
      const auto& zp = a.field_->raw_power(k);
      for (std::size_t i = 0; i < d; ++i)
        if (sgn(zp[i]) != 0) s.c_[i] += prod[k] * zp[i];
    }
    return s;
  }

  CycScalar inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero scalar");
    const std::size_t d = c_.size();
    if (d == 1) return CycScalar(Rational(1) / c_[0]);
    // Row i of the multiplication matrix is (this * zeta^i); solve x * M = 1.
    Matrix<Rational> m(d, d, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
      const CycScalar row = *this * zeta(modulus(), static_cast<int>(i));
      for (std::size_t j = 0; j < d; ++j) m(i, j) = row.c_[j];
    }
    std::vector<Rational> e(d, 0);
    e[0] = 1;
    auto x = solve_left(m, e);
    CycScalar s(field_);
    s.c_ = *x;
    return s;
  }

  friend CycScalar operator/(const CycScalar& a, const CycScalar& b) {
    if (b.field_->modulus() == 1) {
      if (sgn(b.c_[0]) == 0) throw Error(ErrorCode::DivisionByZero, "division by zero scalar");
      return a.scaled(Rational(1) / b.c_[0]);
    }
    return a * b.inverse();
  }

  friend bool operator==(const CycScalar& a, const CycScalar& b) {
    if (a.field_ == b.field_) return a.c_ == b.c_;
    const int m = std::lcm(a.modulus(), b.modulus());
    return a.embed(m).c_ == b.embed(m).c_;
  }
  friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

  /// Human-readable form, e.g. "1/2 + 3*z12^2" (z12 = zeta_12).
  std::string str() const {
    if (is_rational()) return c_[0].get_str();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (sgn(c_[i]) == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (i == 0) {
        os << c_[i].get_str();
        continue;
      }
      if (c_[i] != 1) os << c_[i].get_str() << "*";
      os << "z" << modulus();
      if (i > 1) os << "^" << i;
    }
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const CycScalar& s) { return os << s.str(); }

 private:
  explicit CycScalar(const CyclotomicField* f)
      : field_(f), c_(static_cast<std::size_t>(f->degree()), 0) {}

  CycScalar scaled(const Rational& q) const {
    CycScalar s = *this;
    if (sgn(q) == 0) {
      for (auto& x : s.c_) x = 0;
      return s;
    }
    for (auto& x : s.c_)
      if (sgn(x) != 0) x *= q;
    return s;
  }

  template <class Op>
  static CycScalar promote_op(const CycScalar& a, const CycScalar& b, Op op) {
    const int m = std::lcm(a.modulus(), b.modulus());
    CycScalar x = a.embed(m);
    const CycScalar y = b.embed(m);
    for (std::size_t i = 0; i < x.c_.size(); ++i) op(x.c_[i], y.c_[i]);
    return x;
  }

  const CyclotomicField* field_;
  std::vector<Rational> c_;
};

/// cyc_new: canonical element of Q(zeta_N) from a rational polynomial in zeta_N.
inline CycScalar cyc_new(int n, const std::vector<Rational>& poly) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
  return CycScalar::from_poly(n, poly);
}
inline CycScalar cyc_conj(const CycScalar& s) { return s.conj(); }
inline CycScalar cyc_embed_change(const CycScalar& s, int m) { return s.embed(m); }

template <>
struct field_traits<CycScalar> {
  static bool is_zero(const CycScalar& x) { return x.is_zero(); }
  static CycScalar zero_like(const CycScalar& x) { return CycScalar::zero(x.modulus()); }
  static CycScalar one_like(const CycScalar& x) { return CycScalar::one(x.modulus()); }
};

/// Parse "p", "-p/q" into a canonical rational.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty rational literal");
  for (char ch : text)
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '-' || ch == '+'))
      throw Error(ErrorCode::ParseError, "not a rational literal: '" + text + "'");
  Rational q;
  try {
    std::string t = text[0] == '+' ? text.substr(1) : text;
    if (q.set_str(t, 10) != 0) throw Error(ErrorCode::ParseError, "not a rational literal: '" + text + "'");
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::ParseError, "not a rational literal: '" + text + "'");
  }
  if (q.get_den() == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

}  // namespace cdga
