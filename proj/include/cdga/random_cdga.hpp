#pragma once

// Seeded generators of small random CDGAs for property checks.
//
// A random Sullivan algebra is built one generator at a time in ascending
// degree: d(g_i) is a random closed element of degree |g_i| + 1 in the
// subalgebra on g_0..g_{i-1}, so d^2 = 0 holds by construction. Each
// generator carries a weight w_i mod m and d(g_i) is drawn from the weight
// w_i part, so g -> zeta_m^{w} g is a chain automorphism of order dividing m.

#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "cdga/models.hpp"
#include "cdga/symmetry.hpp"

namespace cdga {

struct RandomCdga {
  AlgebraPtr algebra;
  std::vector<int> weights;
  int modulus = 1;
  std::optional<GroupAction> action;
};

class CdgaGenerator {
 public:
  explicit CdgaGenerator(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }

  /// Small nonzero-biased scalar in Q(zeta_n): an integer in [-2, 2],
  /// sometimes times a power of zeta_n.
  CycScalar scalar(int n) {
    CycScalar c(static_cast<long>(uniform(-2, 2)));
    if (n > 2 && coin(0.3)) c = c * CycScalar::zeta(n, uniform(0, n - 1));
    return c * CycScalar::one(n);
  }

  Element element(const AlgebraSpec& alg, int k, double density = 0.5) {
    Element e = alg.zero(k);
    if (k < 0 || k > alg.degree_cap()) return e;
    for (const auto& m : basis(alg, k))
      if (coin(density)) e = e + monomial_element(alg, m, scalar(alg.modulus()));
    return e;
  }

  /// Random element of a subspace given as the rows of `span`.
  Element combination(const AlgebraSpec& alg, int k, const std::vector<Element>& span) {
    Element e = alg.zero(k);
    for (const auto& s : span) e = e + scalar(alg.modulus()) * s;
    return e;
  }

  RandomCdga sullivan(int max_generators = 5, int cap = 7) {
    static const int orders[] = {1, 2, 3, 4, 6};
    const int m = orders[uniform(0, 4)];
    const int zeta = coin(0.25) ? std::lcm(m, 4) : m;
    const int n = uniform(2, max_generators);
    std::vector<int> degs;
    for (int i = 0; i < n; ++i) {
      const int r = uniform(0, 9);
      degs.push_back(r < 6 ? 1 : (r < 9 ? 2 : 3));
    }
    std::sort(degs.begin(), degs.end());

    AlgebraSpecData data;
    data.zeta = zeta;
    data.degree_cap = cap;
    std::vector<int> weights;
    for (int i = 0; i < n; ++i) {
      const std::string name = "g" + std::to_string(i + 1);
      const int w = uniform(0, m - 1);
      const int k = degs[static_cast<std::size_t>(i)];
      if (i > 0 && k + 1 <= cap && !coin(0.2)) {
        const AlgebraPtr sub = validate(data);
        std::vector<Monomial> mons;
        for (const auto& mono : basis(*sub, k + 1))
          if (weight(mono, weights, m) == w) mons.push_back(mono);
        if (!mons.empty()) {
          Matrix<CycScalar> dm(mons.size(), k + 2 <= cap ? sub->dim(k + 2) : 0, sub->zero_scalar());
          if (k + 2 <= cap)
            for (std::size_t r = 0; r < mons.size(); ++r)
              dm.set_row(r, sub->coords(elem_d(monomial_element(*sub, mons[r], sub->one_scalar()))));
          const Matrix<CycScalar> ker = k + 2 <= cap ? kernel(dm) : identity_rows(mons.size(), sub->zero_scalar());
          Element dg = sub->zero(k + 1);
          for (std::size_t r = 0; r < ker.rows(); ++r) {
            const CycScalar c = scalar(zeta);
            if (c.is_zero()) continue;
            for (std::size_t q = 0; q < mons.size(); ++q)
              if (!ker(r, q).is_zero()) dg = dg + (c * ker(r, q)) * monomial_element(*sub, mons[q], sub->one_scalar());
          }
          if (!dg.is_zero()) data.differential[name] = to_expr(dg);
        }
      }
      data.generators.push_back({name, k, std::nullopt});
      weights.push_back(w);
    }
    RandomCdga out{validate(data), weights, m, std::nullopt};
    int g = m;
    for (int w : weights) g = std::gcd(g, w);
    const int order = m / g;
    if (order > 1) {
      GroupActionData ad;
      ad.order = order;
      for (std::size_t i = 0; i < weights.size(); ++i)
        ad.images[data.generators[i].name] = {Term{CycScalar::zeta(m, weights[i]) * CycScalar::one(zeta), {data.generators[i].name}}};
      out.action = validate_action(out.algebra, ad);
    }
    return out;
  }

 private:
  static int weight(const Monomial& m, const std::vector<int>& w, int mod) {
    long s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) s += static_cast<long>(m[i]) * w[i];
    return static_cast<int>(s % mod);
  }
  static Matrix<CycScalar> identity_rows(std::size_t n, const CycScalar& zero) {
    Matrix<CycScalar> m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = CycScalar::one(zero.modulus());
    return m;
  }

  std::mt19937_64 rng_;
};

}  // namespace cdga
