#include <random>

#include <gtest/gtest.h>

#include "cdga/models.hpp"
#include "cdga/report.hpp"

using namespace cdga;

namespace {

CycScalar random_scalar(std::mt19937_64& rng) {
  static const int moduli[] = {1, 2, 3, 4, 5, 6, 8, 12};
  const int n = moduli[rng() % std::size(moduli)];
  std::vector<Rational> poly(static_cast<std::size_t>(n));
  for (auto& c : poly) {
    const long num = static_cast<long>(rng() % 41) - 20;
    const long den = static_cast<long>(rng() % 7) + 1;
    c = Rational(num, den);
    c.canonicalize();
  }
  return cyc_new(n, poly);
}

ErrorCode parse_error_of(const std::string& text) {
  try {
    bundle_from_string(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "parsed: " << text;
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Json, ScalarRoundTripProperty) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 1000; ++i) {
    const CycScalar s = random_scalar(rng);
    const Json j = scalar_to_json(s);
    EXPECT_EQ(scalar_from_json(Json::parse(j.dump())), s) << j.dump();
    // Rationals are plain strings.
    EXPECT_EQ(j.is_string(), s.is_rational());
  }
}

TEST(Json, RationalLiterals) {
  EXPECT_EQ(scalar_from_json("3/6"), CycScalar(Rational(1, 2)));
  EXPECT_EQ(scalar_from_json(-4), CycScalar(-4));
  EXPECT_EQ(scalar_from_json(Json{{"zeta", 4}, {"poly", {"0", "1"}}}), CycScalar::zeta(4, 1));
  for (const char* bad : {"", "1/0", "x", "1.5"}) EXPECT_THROW(scalar_from_json(bad), Error) << bad;
  EXPECT_THROW(scalar_from_json(Json{{"zeta", 0}, {"poly", {"1"}}}), Error);
  EXPECT_THROW(scalar_from_json(Json::array()), Error);
}

TEST(Json, PresetDocumentsRoundTrip) {
  for (const auto& id : preset_ids()) {
    const Bundle b = preset(id);
    const Json once = bundle_to_json(b);
    const Bundle back = bundle_from_json(Json::parse(once.dump()));
    EXPECT_EQ(bundle_to_json(back), once) << id;
    EXPECT_EQ(back.algebra->num_generators(), b.algebra->num_generators()) << id;
    EXPECT_EQ(back.classes.size(), b.classes.size()) << id;
    for (std::size_t i = 0; i < b.classes.size(); ++i) EXPECT_EQ(element_to_json(back.classes[i].second), element_to_json(b.classes[i].second)) << id;
  }
}

TEST(Json, ParseErrors) {
  EXPECT_EQ(parse_error_of("{"), ErrorCode::ParseError);
  EXPECT_EQ(parse_error_of(R"({"generators": [{"name": "a"}]})"), ErrorCode::ParseError);
  EXPECT_EQ(parse_error_of(R"({"degree_cap": 4, "generators": [{"name": "a", "degree": 2}], "differential": {"a": 5}})"),
            ErrorCode::ParseError);
  EXPECT_EQ(parse_error_of(R"({"degree_cap": 4, "generators": [{"name": "a", "degree": 2}], "action": {"images": {}}})"),
            ErrorCode::ParseError);
}

TEST(Json, ReportsAreDeterministic) {
  const Bundle b = preset("SASAKI7_S2CUBE"), c = preset("SASAKI7_S2CUBE");
  const CohomologyRing h1 = bundle_cohomology(b), h2 = bundle_cohomology(c);
  EXPECT_EQ(cohomology_report(h1).dump(), cohomology_report(h2).dump());
  const Json rep = cohomology_report(h1);
  EXPECT_EQ(rep.at("betti"), Json({1, 0, 2, 0, 0, 2, 0, 1}));
  EXPECT_TRUE(rep.at("pairing_ok").get<bool>());
  const MasseyReport r = triple_massey(h1, b.cls("a1"), b.cls("a1"), b.cls("a2"));
  const Json m = massey_report_json(h1, r);
  EXPECT_EQ(m.at("verdict"), "NONZERO");
  EXPECT_EQ(m.at("degree"), 5);
  EXPECT_EQ(m.dump(), massey_report_json(h2, triple_massey(h2, c.cls("a1"), c.cls("a1"), c.cls("a2"))).dump());
}
