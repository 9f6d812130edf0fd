#include <gtest/gtest.h>

#include <random>

#include "cdga/scalar.hpp"

using namespace cdga;

namespace {

CycScalar z(int n, int k = 1) { return CycScalar::zeta(n, k); }

CycScalar random_scalar(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  std::vector<Rational> poly(static_cast<std::size_t>(euler_phi(n)) + 1);
  for (auto& c : poly) c = Rational(num(rng), den(rng));
  return cyc_new(n, poly);
}

}  // namespace

TEST(Scalar, ZetaSixCubedIsMinusOne) {
  const CycScalar s = cyc_new(6, {0, 1});
  EXPECT_EQ(s * s * s, CycScalar(-1));
}

TEST(Scalar, InversePair) { EXPECT_EQ(z(6) * z(6, 5), CycScalar(1)); }

TEST(Scalar, FourthRootInsideTwelve) {
  const CycScalar i = z(12, 3);
  EXPECT_EQ(i * i, CycScalar(-1));
  EXPECT_FALSE(i.is_rational());
}

TEST(Scalar, ZetaPowerWrapsModN) {
  EXPECT_EQ(z(7, 7), CycScalar(1));
  EXPECT_EQ(z(5, 12), z(5, 2));
}

TEST(Scalar, CanonicalFormHasPhiCoefficients) {
  for (int n : {1, 2, 3, 4, 6, 8, 12, 15}) EXPECT_EQ(static_cast<int>(z(n).coeffs().size()), euler_phi(n));
  // 1 + z3 + z3^2 = 0 so the canonical form of z3^2 is -1 - z3.
  EXPECT_EQ(z(3, 2), CycScalar(-1) - z(3));
}

TEST(Scalar, Conjugation) {
  EXPECT_EQ(cyc_conj(z(3)), z(3, 2));
  EXPECT_EQ(cyc_conj(CycScalar(Rational(3, 7))), CycScalar(Rational(3, 7)));
  const CycScalar s = z(6) + CycScalar(2);
  EXPECT_EQ(cyc_conj(cyc_conj(s)), s);
}

TEST(Scalar, Embedding) {
  EXPECT_EQ(cyc_embed_change(z(3), 6), z(6, 2));
  EXPECT_EQ(cyc_embed_change(CycScalar(1), 10), CycScalar::one(10));
  const CycScalar e = cyc_embed_change(z(6), 12);
  EXPECT_EQ(e * e, cyc_embed_change(z(6, 2), 12));
  EXPECT_EQ(e.modulus(), 12);
  EXPECT_THROW(cyc_embed_change(z(6), 9), Error);
}

TEST(Scalar, MixedModuliPromoteToLcm) {
  const CycScalar s = z(6) + z(4);
  EXPECT_EQ(s.modulus(), 12);
  EXPECT_EQ(s, z(12, 2) + z(12, 3));
}

TEST(Scalar, DivisionByZeroThrows) {
  EXPECT_THROW(CycScalar(1) / CycScalar::zero(6), Error);
  EXPECT_THROW(parse_rational("1/0"), Error);
}

TEST(Scalar, ParseRational) {
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(parse_rational("12"), Rational(12));
  EXPECT_THROW(parse_rational("1.5"), Error);
  EXPECT_THROW(parse_rational(""), Error);
}

TEST(ScalarProperty, FieldAxiomsOnRandomInputs) {
  std::mt19937 rng(17);
  const int moduli[] = {1, 3, 4, 6, 8, 12};
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = moduli[trial % 6];
    const CycScalar a = random_scalar(rng, n), b = random_scalar(rng, n), c = random_scalar(rng, n);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * b, b * a);
    if (!a.is_zero()) ASSERT_EQ(a * a.inverse(), CycScalar::one(n));
    ASSERT_EQ((a * b).conj(), a.conj() * b.conj());
    ASSERT_EQ(a.conj().conj(), a);
    const CycScalar norm = a * a.conj();
    ASSERT_EQ(norm.conj(), norm);
    const int m = n * (1 + trial % 3);
    ASSERT_EQ((a * b).embed(m), a.embed(m) * b.embed(m));
    ASSERT_EQ((a + b).embed(m), a.embed(m) + b.embed(m));
    ASSERT_EQ(a.embed(m) == b.embed(m), a == b);
  }
}
