// Copyright 2026 The OAX Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "oax/evaluate.hpp"
#include "oax/io.hpp"

namespace oax {
namespace {

Policy sample(const char* name) { return parse_policy(read_file(std::string(OAX_SAMPLES_DIR) + "/" + name)); }

std::string atom(const char* operand, const char* op, const char* value) {
  return std::string(R"({"leftOperand": ")") + operand + R"(", "operator": ")" + op +
         R"(", "rightOperand": )" + value + "}";
}

Policy policy(const std::string& kind, const std::string& action, const std::vector<std::string>& atoms) {
  std::string cs;
  for (const auto& a : atoms) cs += (cs.empty() ? "" : ",") + a;
  return parse_policy(R"({"uid": "urn:test", ")" + kind + R"(": [{"action": ")" + action +
                      R"(", "constraint": [)" + cs + "]}]}");
}

TEST(EvaluateTest, BsbAgainstMuseumIsWidthConflict) {
  auto external = parse_labeled_verdicts(read_file(std::string(OAX_SAMPLES_DIR) + "/bsb-verdicts.json"));
  auto r = evaluate_conflict(sample("bsb-policy.json"), sample("museum-request.json"), external);
  EXPECT_EQ(r.verdict, Verdict3::Conflict);
  ASSERT_EQ(r.conflicting_axes().size(), 1u);
  EXPECT_EQ(r.conflicting_axes()[0]->operand.axis, Axis::Width);
  EXPECT_EQ(r.explanation(), "width is the sole conflicting axis (oax:absoluteSizeWidth)");
  // Height agrees: 400 lies inside (0, 600].
  const auto& box = *r.deciding()->box;
  EXPECT_EQ(box.axes[1].verdict, Verdict3::Compatible);
}

TEST(EvaluateTest, WithoutExternalVerdictsDimensionalConflictStillDecides) {
  auto r = evaluate_conflict(sample("bsb-policy.json"), sample("museum-request.json"));
  EXPECT_EQ(r.verdict, Verdict3::Conflict);
}

TEST(EvaluateTest, IdenticalPoliciesAreCompatible) {
  auto p = policy("permission", "display", {atom("oax:absoluteSizeWidth", "lteq", "600"),
                                            atom("oax:absoluteSizeHeight", "lteq", "600")});
  EXPECT_EQ(evaluate_conflict(p, p).verdict, Verdict3::Compatible);
}

TEST(EvaluateTest, AxisLeftOpenOnOneSideIsUnknown) {
  auto p1 = policy("permission", "display", {atom("oax:absoluteSizeWidth", "lteq", "600")});
  auto p2 = policy("permission", "display", {atom("oax:absoluteSizeWidth", "lteq", "600"),
                                             atom("oax:absoluteSizeHeight", "lteq", "600")});
  EXPECT_EQ(evaluate_conflict(p1, p2).verdict, Verdict3::Unknown);
}

TEST(EvaluateTest, PermissionAgainstProhibitionIsDeontic) {
  auto perm = policy("permission", "display", {atom("oax:absoluteSizeWidth", "lteq", "600")});
  auto overlapping = policy("prohibition", "display", {atom("oax:absoluteSizeWidth", "gt", "300")});
  auto disjoint = policy("prohibition", "display", {atom("oax:absoluteSizeWidth", "gt", "600")});
  auto r = evaluate_conflict(perm, overlapping);
  EXPECT_EQ(r.pairs[0].relation, PairRelation::Deontic);
  EXPECT_EQ(r.verdict, Verdict3::Conflict);
  EXPECT_EQ(evaluate_conflict(perm, disjoint).verdict, Verdict3::Compatible);
  auto obligation = policy("obligation", "display", {atom("oax:absoluteSizeWidth", "lteq", "600")});
  EXPECT_THROW(evaluate_conflict(obligation, disjoint), no_comparable_rules);
  EXPECT_THROW(evaluate_conflict(perm, policy("permission", "print", {})), no_comparable_rules);
}

TEST(EvaluateTest, OrAgainstPlainBox) {
  auto tiles = policy("permission", "use", {R"({"or": [)" + atom("oax:spatialCoordinatesLongitude", "lt", "0") +
                                                "," + atom("oax:spatialCoordinatesLongitude", "gt", "100") +
                                                "]}"});
  auto inside = policy("permission", "use", {atom("oax:spatialCoordinatesLongitude", "eq", "120")});
  auto gap = policy("permission", "use", {atom("oax:spatialCoordinatesLongitude", "eq", "50")});
  EXPECT_EQ(evaluate_conflict(tiles, inside).verdict, Verdict3::Compatible);
  EXPECT_EQ(evaluate_conflict(tiles, gap).verdict, Verdict3::Conflict);
  EXPECT_TRUE(evaluate_conflict(tiles, gap).pairs[0].composition.has_value());
}

TEST(EvaluateTest, TwoDimensionalDisjunctionsAreRejected) {
  std::string orw = R"({"or": [)" + atom("oax:absoluteSizeWidth", "lt", "1") + "," +
                    atom("oax:absoluteSizeWidth", "gt", "5") + "]}";
  std::string orh = R"({"or": [)" + atom("oax:absoluteSizeHeight", "lt", "1") + "," +
                    atom("oax:absoluteSizeHeight", "gt", "5") + "]}";
  auto p = policy("permission", "use", {orw, orh});
  EXPECT_THROW(shape_policy(p, AxisProfile::standard()), composition_error);
}

TEST(EvaluateTest, SubsumptionOfSupplyChain) {
  auto up = sample("supply-chain-upstream.json");
  auto down = sample("supply-chain-downstream.json");
  EXPECT_EQ(evaluate_subsumption(down, up).verdict, SubsumptionVerdict::Confirmed);
  EXPECT_EQ(evaluate_subsumption(up, down).verdict, SubsumptionVerdict::Refuted);
  EXPECT_EQ(evaluate_subsumption(up, up).verdict, SubsumptionVerdict::Confirmed);
}

TEST(EvaluateTest, SubsumptionNonAxisOperands) {
  auto a = policy("permission", "use", {atom("oax:absoluteSizeWidth", "lteq", "10"),
                                        atom("odrl:purpose", "eq", R"("research")")});
  auto b = policy("permission", "use", {atom("oax:absoluteSizeWidth", "lteq", "20"),
                                        atom("odrl:purpose", "eq", R"("research")")});
  auto c = policy("permission", "use", {atom("oax:absoluteSizeWidth", "lteq", "20"),
                                        atom("odrl:purpose", "eq", R"("teaching")")});
  EXPECT_EQ(evaluate_subsumption(a, b).verdict, SubsumptionVerdict::Confirmed);
  EXPECT_EQ(evaluate_subsumption(a, c).verdict, SubsumptionVerdict::Unknown);
}

TEST(EvaluateTest, RequestAgainstBsb) {
  auto bsb = sample("bsb-policy.json");
  auto no = evaluate_request(bsb, parse_context("width=1200,height=400"));
  EXPECT_FALSE(no.satisfied);
  EXPECT_TRUE(evaluate_request(bsb, parse_context("width=400,height=400")).satisfied);
  EXPECT_TRUE(evaluate_request(bsb, parse_context("width=600,height=600")).satisfied);
  EXPECT_FALSE(evaluate_request(bsb, parse_context("width=400")).satisfied);
}

TEST(EvaluateTest, RequestWithXone) {
  auto tiles = sample("map-tiles.json");
  EXPECT_TRUE(evaluate_request(tiles, parse_context("lat=50,lon=8")).satisfied);
  EXPECT_TRUE(evaluate_request(tiles, parse_context("lat=50,lon=10")).satisfied);
  EXPECT_FALSE(evaluate_request(tiles, parse_context("lat=50,lon=20")).satisfied);
  EXPECT_FALSE(evaluate_request(tiles, parse_context("lat=60,lon=8")).satisfied);
}

TEST(EvaluateTest, EngineWithoutProfileSeesNoAxes) {
  // An engine that does not know the vocabulary treats the axis operands as
  // opaque; it can no longer decide the width clash.
  AxisProfile none;
  auto r = evaluate_conflict(sample("bsb-policy.json"), sample("museum-request.json"), {}, none);
  EXPECT_EQ(r.verdict, Verdict3::Unknown);
  auto p = policy("permission", "display", {atom("oax:absoluteSizeWidth", "lteq", "600")});
  auto q = policy("permission", "display", {atom("oax:absoluteSizeWidth", "gteq", "800")});
  EXPECT_EQ(evaluate_conflict(p, q).verdict, Verdict3::Conflict);
  EXPECT_EQ(evaluate_conflict(p, q, {}, none).verdict, Verdict3::Unknown);
}

TEST(EvaluateTest, ReportsSerialize) {
  auto r = evaluate_conflict(sample("bsb-policy.json"), sample("museum-request.json"));
  auto j = to_json(r);
  EXPECT_EQ(j["verdict"], "Conflict");
  EXPECT_FALSE(j.dump().empty());
}

}  // namespace
}  // namespace oax
