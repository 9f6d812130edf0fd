#include <gtest/gtest.h>

#include "cdga/properties.hpp"

using namespace cdga;

namespace {

constexpr std::uint64_t kSeed = 20240601;
constexpr std::size_t kCases = 1000;

void expect_ok(const PropertyResult& r) {
  EXPECT_GE(r.cases, kCases) << r.name;
  EXPECT_TRUE(r.ok()) << r.name << ": " << r.failures << " failures, first: " << r.first_failure;
}

}  // namespace

TEST(Properties, Koszul) { expect_ok(check_koszul(kSeed, kCases)); }
TEST(Properties, Leibniz) { expect_ok(check_leibniz(kSeed + 1, kCases)); }
TEST(Properties, DSquared) { expect_ok(check_d_squared(kSeed + 2, kCases)); }
TEST(Properties, CupWellDefined) { expect_ok(check_cup_well_defined(kSeed + 3, kCases)); }
TEST(Properties, Projector) { expect_ok(check_projector(kSeed + 4, kCases)); }
TEST(Properties, InvariantCohomology) { expect_ok(check_invariant_cohomology(kSeed + 5, kCases)); }
TEST(Properties, MasseyStability) { expect_ok(check_massey_stability(kSeed + 6, kCases)); }
TEST(Properties, PoincarePairing) { expect_ok(check_poincare_pairing(kSeed + 7, kCases)); }
TEST(Properties, FormalityConsistency) { expect_ok(check_formality_consistency(kSeed + 8, kCases)); }
