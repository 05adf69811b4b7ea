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

#include "oax/io.hpp"
#include "oax/model.hpp"

namespace oax {
namespace {

const char* kPolicy = R"({
  "@context": "http://www.w3.org/ns/odrl.jsonld",
  "uid": "http://example.org/p1",
  "permission": [{
    "action": "display",
    "constraint": [
      {"leftOperand": "oax:absoluteSizeWidth", "operator": "odrl:lteq", "rightOperand": 600},
      {"and": [
        {"leftOperand": "oax:absoluteSizeHeight", "operator": "lt", "rightOperand": "12.5"},
        {"leftOperand": "odrl:purpose", "operator": "eq", "rightOperand": {"@value": "research"}}
      ]},
      {"or": [
        {"leftOperand": "oax:absoluteSpatialPositionX", "operator": "gt", "rightOperand": 0.1},
        {"and": [
          {"leftOperand": "oax:absoluteSpatialPositionX", "operator": "lt", "rightOperand": -5},
          {"leftOperand": "oax:absoluteSpatialPositionY", "operator": "eq", "rightOperand": 1e2}
        ]}
      ]}
    ]
  }],
  "prohibition": [{"action": {"@id": "odrl:distribute"}}]
})";

TEST(IriTest, ExpandsPrefixes) {
  EXPECT_EQ(expand_iri("odrl:lteq"), std::string(kOdrlNs) + "lteq");
  EXPECT_EQ(expand_iri("lteq"), std::string(kOdrlNs) + "lteq");
  EXPECT_EQ(expand_iri("oax:absoluteSizeWidth"), std::string(kOaxNs) + "absoluteSizeWidth");
  EXPECT_EQ(expand_iri("http://example.org/x"), "http://example.org/x");
  EXPECT_THROW(expand_iri("dc:title"), prefix_error);
  EXPECT_EQ(compact_iri(std::string(kOaxNs) + "absoluteSizeWidth"), "oax:absoluteSizeWidth");
}

TEST(ModelTest, ParsesRulesAndConnectives) {
  Policy p = parse_policy(kPolicy);
  EXPECT_EQ(p.uid, "http://example.org/p1");
  ASSERT_EQ(p.rules.size(), 2u);
  const Rule& r = p.rules[0];
  EXPECT_EQ(r.action, odrl("display"));
  // The and-block is flattened into the rule.
  ASSERT_EQ(r.constraints.size(), 4u);
  const auto& c0 = std::get<Constraint>(r.constraints[0]);
  EXPECT_EQ(c0.left_operand, oax_iri("absoluteSizeWidth"));
  EXPECT_EQ(c0.op, Operator::Lteq);
  EXPECT_EQ(*c0.right.number, Rational(600));
  EXPECT_EQ(*std::get<Constraint>(r.constraints[1]).right.number, Rational(25, 2));
  EXPECT_FALSE(std::get<Constraint>(r.constraints[2]).right.is_decimal());
  const auto& lc = std::get<LogicalConstraint>(r.constraints[3]);
  EXPECT_EQ(lc.connective, Connective::Or);
  ASSERT_EQ(lc.branches.size(), 2u);
  EXPECT_EQ(lc.branches[1].size(), 2u);
  EXPECT_EQ(p.rules[1].kind, RuleKind::Prohibition);
  EXPECT_EQ(p.rules[1].action, odrl("distribute"));
}

TEST(ModelTest, NumbersStayExact) {
  Policy p = parse_policy(kPolicy);
  const auto& lc = std::get<LogicalConstraint>(p.rules[0].constraints[3]);
  EXPECT_EQ(*lc.branches[0][0].right.number, Rational(1, 10));
  EXPECT_EQ(*lc.branches[1][1].right.number, Rational(100));
}

TEST(ModelTest, RoundTripsThroughJson) {
  Policy p = parse_policy(kPolicy);
  std::string once = serialize_policy(p);
  Policy q = parse_policy(once);
  EXPECT_EQ(p, q);
  EXPECT_EQ(serialize_policy(q), once);
}

TEST(ModelTest, ReportsParseErrorPosition) {
  try {
    parse_policy("{\n  \"uid\": \"x\",\n  \"permission\": [,]\n}");
    FAIL() << "expected parse_error";
  } catch (const parse_error& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_GT(e.column(), 0u);
  }
}

TEST(ModelTest, SchemaErrors) {
  EXPECT_THROW(parse_policy("[]"), schema_error);
  EXPECT_THROW(parse_policy(R"({"permission": []})"), schema_error);
  EXPECT_THROW(parse_policy(R"({"uid": "x", "bogus": 1})"), schema_error);
  EXPECT_THROW(parse_policy(R"({"uid": "x", "permission": [{"constraint": []}]})"), schema_error);
  EXPECT_THROW(parse_policy(R"({"uid": "x", "permission": [{"action": "use", "constraint": [
      {"leftOperand": "oax:absoluteSizeWidth", "operator": "approx", "rightOperand": 1}]}]})"),
               schema_error);
  EXPECT_THROW(parse_policy(R"({"uid": "x", "permission": [{"action": "use", "constraint": [
      {"or": [{"leftOperand": "oax:absoluteSizeWidth", "operator": "lt", "rightOperand": 1}]}]}]})"),
               schema_error);
  EXPECT_THROW(parse_policy(R"({"uid": "x", "permission": [{"action": "use", "constraint": [
      {"nand": []}]}]})"),
               schema_error);
  EXPECT_THROW(parse_policy(R"({"uid": "x", "permission": [{"action": "use", "constraint": [
      {"leftOperand": "ex:foo", "operator": "lt", "rightOperand": 1}]}]})"),
               prefix_error);
}

TEST(ModelTest, SingleConstraintObjectIsAccepted) {
  Policy p = parse_policy(R"({"uid": "x", "permission": [{"action": "use", "constraint":
      {"leftOperand": "oax:absoluteSizeWidth", "operator": "lt", "rightOperand": 1}}]})");
  EXPECT_EQ(p.rules[0].constraints.size(), 1u);
}

TEST(ModelTest, ParsesContexts) {
  const auto& prof = AxisProfile::standard();
  auto a = parse_context("width=1200, height=400", prof);
  auto b = parse_context(R"({"oax:absoluteSizeWidth": 1200, "absoluteSizeHeight": "400"})", prof);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.values.at(oax_iri("absoluteSizeWidth")), Rational(1200));
  EXPECT_THROW(parse_context("colour=3", prof), schema_error);
  EXPECT_THROW(parse_context("width=wide", prof), schema_error);
  EXPECT_THROW(parse_context("width=1, absoluteSizeWidth=2", prof), schema_error);
  EXPECT_TRUE(parse_context("", prof).values.empty());
}

TEST(ModelTest, SamplesParse) {
  for (const char* f : {"bsb-policy.json", "museum-request.json", "supply-chain-upstream.json",
                        "supply-chain-downstream.json", "ambiguous-size.json", "lint-fixture.json", "map-tiles.json"})
    EXPECT_NO_THROW(parse_policy(read_file(std::string(OAX_SAMPLES_DIR) + "/" + f))) << f;
}

}  // namespace
}  // namespace oax
