#include <gtest/gtest.h>

#include "support/generators.hpp"

using namespace blowchern;
using nlohmann::json;

namespace {

ErrorKind kind_of(std::string_view text) {
  try {
    parse_scenario(text);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::internal;
}

}  // namespace

TEST(ScenarioJson, RoundTrip) {
  for (const auto& s : catalog()) {
    Scenario back = scenario_from_json(scenario_to_json(s));
    EXPECT_EQ(scenario_to_json(back), scenario_to_json(s));
    EXPECT_EQ(parse_scenario(scenario_to_json(s).dump()).label, s.label);
  }
}

TEST(ScenarioJson, Parses) {
  Scenario s = parse_scenario(R"({"ambient_dim": 3, "center": {"type": "ci", "degrees": [2, 2]}, "label": "c"})");
  EXPECT_EQ(s.ambient_dim, 3);
  EXPECT_EQ(s.codim(), 2);
  EXPECT_EQ(s.normal_degrees(), (std::vector<int>{2, 2}));
  Scenario unlabeled = parse_scenario(R"({"ambient_dim": 2, "center": {"type": "linear", "dim": 0}})");
  EXPECT_FALSE(unlabeled.label.empty());
}

TEST(ScenarioJson, Errors) {
  EXPECT_EQ(kind_of(""), ErrorKind::parse);
  EXPECT_EQ(kind_of("{"), ErrorKind::parse);
  EXPECT_EQ(kind_of(R"({"center": {"type": "linear", "dim": 0}})"), ErrorKind::parse);
  EXPECT_EQ(kind_of(R"({"ambient_dim": 2, "center": {"type": "cone"}})"), ErrorKind::parse);
  EXPECT_EQ(kind_of(R"({"ambient_dim": 2, "center": {"type": "linear", "dim": 2}})"), ErrorKind::parse);
  EXPECT_EQ(kind_of(R"({"ambient_dim": 2, "center": {"type": "ci", "degrees": ["2"]}})"), ErrorKind::parse);
  try {
    parse_scenario("{\"ambient_dim\": 2,, }");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("byte"), std::string::npos);
  }
}

TEST(RingJson, RoundTrip) {
  auto p3 = RingPresentation::truncated_polynomial("H", 3, 2);
  RingPtr back = ring_from_json(ring_to_json(*p3));
  EXPECT_EQ(ring_to_json(*back), ring_to_json(*p3));
  EXPECT_EQ(degree(ChowClass(back, back->parse("5*H^3"))), 10);

  auto ctx = universal_context(2, 0, 6);
  RingPtr xt = ring_from_json(ring_to_json(*ctx->ringXt));
  EXPECT_EQ(xt->parse("z^3").to_string(), ctx->ringXt->parse("z^3").to_string());
  EXPECT_EQ(ring_to_json(*xt), ring_to_json(*ctx->ringXt));
}

TEST(RingJson, Errors) {
  EXPECT_THROW(ring_from_json(json::object()), Error);
  json j = ring_to_json(*RingPresentation::truncated_polynomial("H", 2));
  j["rules"][0]["replacement"] = "H";
  EXPECT_THROW(ring_from_json(j), Error);
}

TEST(BundleJson, RoundTrip) {
  auto r = RingPresentation::free({{"a", 1}, {"u", 2}}, 6);
  BundleClass b = BundleClass::from_total(r, 3, r->parse("1 + 2*a + u - 1/2*a^2 + a*u"));
  json j = bundle_to_json(b);
  EXPECT_EQ(j["rank"], 3);
  EXPECT_EQ(bundle_from_json(j, r), b);
  json bad = {{"rank", 1}, {"chern", {"1", "a", "u"}}};
  EXPECT_THROW(bundle_from_json(bad, r), Error);
}

TEST(ReportsJson, Array) {
  std::vector<VerificationReport> rs{verify_pushforward_identity(1), verify_self_intersection(2)};
  json j = reports_to_json(rs);
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 2u);
  EXPECT_TRUE(j[0]["pass"].get<bool>());
}
