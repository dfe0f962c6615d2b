// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <string>

#include "irs/errors.hpp"
#include "irs/scenario_io.hpp"

namespace irs {
namespace {

const std::string kDir = IRS_SCENARIO_DIR;

const char* kMinimal = R"({
  "bs": [0, 0, 0], "gt": [25, 0, 0],
  "airspace": {"min": [-25, -10, 25], "max": [75, 10, 50]},
  "array": {"nx": 2, "ny": 3, "dx": 0.025, "dy": 0.025},
  "pattern": {"q": 2}
})";

template <typename E>
std::string message_of(const std::string& text) {
  try {
    parse_scenario(text);
  } catch (const E& e) {
    return e.what();
  }
  ADD_FAILURE() << "no exception";
  return {};
}

std::string replaced(std::string text, const std::string& from, const std::string& to) {
  text.replace(text.find(from), from.size(), to);
  return text;
}

TEST(ScenarioIo, LoadsShortRelay) {
  const Scenario s = load_scenario(kDir + "/fig3.json");
  EXPECT_EQ(s.gt, Vec3(25, 0, 0));
  EXPECT_EQ(s.array.size(), 400u);
  EXPECT_EQ(s.pattern.q, 0.0);
  EXPECT_EQ(s.pattern.g0, 2.0);
  EXPECT_NEAR(s.budget.p_b, 1.0, 1e-15);
}

TEST(ScenarioIo, LoadsLongRelay) {
  const Scenario s = load_scenario(kDir + "/fig4.json");
  EXPECT_EQ(s.gt, Vec3(150, 0, 0));
  EXPECT_EQ(s.array.size(), 3600u);
  EXPECT_EQ(s.pattern.g0, 18.0);
}

TEST(ScenarioIo, DefaultsBudget) {
  const Scenario s = parse_scenario(kMinimal);
  EXPECT_EQ(s.array.size(), 6u);
  EXPECT_EQ(s.budget.lambda_c, 0.05);
  EXPECT_NEAR(s.budget.p_b, 1.0, 1e-15);
  EXPECT_FALSE(s.allow_elevated_terminals);
}

TEST(ScenarioIo, RoundTripsThroughJson) {
  const Scenario s = parse_scenario(kMinimal);
  auto j = scenario_to_json(s);
  EXPECT_EQ(j["pattern"]["g0"], 10.0);
  EXPECT_EQ(j["dmin"], 25.0);
  j.erase("chi0");
  j.erase("dmin");
  j["pattern"].erase("g0");
  const Scenario back = parse_scenario(j.dump());
  EXPECT_EQ(back.array.offsets, s.array.offsets);
  EXPECT_EQ(back.budget.sigma2, s.budget.sigma2);
  EXPECT_NEAR(back.budget.p_b, s.budget.p_b, 1e-15);
}

TEST(ScenarioIo, EmptyTextIsAParseError) {
  EXPECT_THROW(parse_scenario(""), ParseError);
  EXPECT_THROW(parse_scenario("{\"bs\": [0, 0"), ParseError);
  EXPECT_THROW(load_scenario(kDir + "/does-not-exist.json"), ParseError);
}

TEST(ScenarioIo, InvertedAirspaceNamesTheAirspace) {
  const std::string msg = message_of<ValidationError>(
      replaced(kMinimal, "\"max\": [75, 10, 50]", "\"max\": [75, 10, 20]"));
  EXPECT_NE(msg.find("airspace"), std::string::npos) << msg;
}

TEST(ScenarioIo, UnknownKeyIsNamed) {
  const std::string msg =
      message_of<ValidationError>(replaced(kMinimal, "\"q\": 2", "\"q\": 2, \"gain\": 3"));
  EXPECT_NE(msg.find("gain"), std::string::npos) << msg;
}

TEST(ScenarioIo, MissingKeyIsNamed) {
  const std::string msg =
      message_of<ValidationError>(replaced(kMinimal, "\"gt\": [25, 0, 0],", ""));
  EXPECT_NE(msg.find("gt"), std::string::npos) << msg;
}

TEST(ScenarioIo, BadTypesAreRejected) {
  EXPECT_THROW(parse_scenario(replaced(kMinimal, "\"nx\": 2", "\"nx\": 2.5")), ValidationError);
  EXPECT_THROW(parse_scenario(replaced(kMinimal, "\"nx\": 2", "\"nx\": 0")), ValidationError);
  EXPECT_THROW(parse_scenario(replaced(kMinimal, "[0, 0, 0]", "[0, 0]")), ValidationError);
  EXPECT_THROW(parse_scenario(replaced(kMinimal, "\"q\": 2", "\"q\": -1")), ValidationError);
}

TEST(ScenarioIo, ElevatedTerminalNeedsOptIn) {
  const std::string elevated = replaced(kMinimal, "\"gt\": [25, 0, 0]", "\"gt\": [25, 0, 5]");
  EXPECT_THROW(parse_scenario(elevated), ValidationError);
  const std::string allowed =
      replaced(elevated, "\"pattern\"", "\"allow_elevated_terminals\": true, \"pattern\"");
  EXPECT_NO_THROW(parse_scenario(allowed));
}

TEST(ScenarioIo, TerminalInsideAirspaceIsAGeometryError) {
  const std::string text = replaced(
      replaced(kMinimal, "\"bs\": [0, 0, 0]", "\"bs\": [0, 0, 30]"), "\"pattern\"",
      "\"allow_elevated_terminals\": true, \"pattern\"");
  EXPECT_THROW(parse_scenario(text), GeometryError);
}

}  // namespace
}  // namespace irs
