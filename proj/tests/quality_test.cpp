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

#include <random>

#include "oax/io.hpp"
#include "oax/quality.hpp"
#include "oracle.hpp"

namespace oax {
namespace {

Policy sample(const char* name) { return parse_policy(read_file(std::string(OAX_SAMPLES_DIR) + "/" + name)); }

std::vector<LintFinding> of_kind(const std::vector<LintFinding>& fs, LintKind k) {
  std::vector<LintFinding> out;
  for (const auto& f : fs)
    if (f.kind == k) out.push_back(f);
  return out;
}

TEST(QualityTest, BaseOperandIsAmbiguous) {
  auto fs = lint(sample("ambiguous-size.json"));
  auto amb = of_kind(fs, LintKind::Ambiguity);
  ASSERT_EQ(amb.size(), 1u);
  EXPECT_EQ(amb[0].interpretations, 5);
  EXPECT_EQ(amb[0].location, "permission[0].constraint[0]");
  EXPECT_NE(amb[0].message.find("oax:absoluteSizeWidth"), std::string::npos);
}

TEST(QualityTest, LintFixture) {
  auto fs = lint(sample("lint-fixture.json"));
  auto contra = of_kind(fs, LintKind::SelfContradiction);
  ASSERT_EQ(contra.size(), 1u);
  EXPECT_EQ(contra[0].severity, Severity::Error);
  EXPECT_EQ(contra[0].location, "permission[0]");
  auto red = of_kind(fs, LintKind::Redundancy);
  ASSERT_EQ(red.size(), 1u);
  EXPECT_EQ(red[0].severity, Severity::Warning);
  EXPECT_EQ(red[0].location, "permission[1].constraint[1]");
  auto cov = of_kind(fs, LintKind::IncompleteCoverage);
  ASSERT_FALSE(cov.empty());
  EXPECT_EQ(cov[0].severity, Severity::Info);
}

TEST(QualityTest, CleanPolicyHasOnlyInfo) {
  for (const auto& f : lint(sample("bsb-policy.json"))) EXPECT_EQ(f.severity, Severity::Info) << f.message;
}

TEST(QualityTest, BoundViolation) {
  auto p = parse_policy(R"({"uid": "u", "permission": [{"action": "use", "constraint": [
      {"leftOperand": "oax:spatialCoordinatesLatitude", "operator": "lteq", "rightOperand": 95},
      {"leftOperand": "oax:absoluteSizeWidth", "operator": "isPartOf", "rightOperand": 3}]}]})");
  auto fs = lint(p);
  ASSERT_EQ(of_kind(fs, LintKind::BoundViolation).size(), 1u);
  ASSERT_EQ(of_kind(fs, LintKind::UnsupportedOperator).size(), 1u);
  EXPECT_EQ(of_kind(fs, LintKind::UnsupportedOperator)[0].severity, Severity::Error);
}

TEST(QualityTest, CoverageOfBase) {
  const auto& p = AxisProfile::standard();
  ConstraintSet s{{*p.resolve("width"), Operator::Lteq, Rational(1)}, {*p.resolve("height"), Operator::Lteq, Rational(1)}};
  auto c = coverage(s, odrl("absoluteSize"), p);
  EXPECT_FALSE(c.complete);
  ASSERT_EQ(c.missing.size(), 1u);
  EXPECT_EQ(c.missing[0].axis, Axis::Depth);
  s.push_back({*p.resolve("depth"), Operator::Lteq, Rational(1)});
  EXPECT_TRUE(coverage(s, odrl("absoluteSize"), p).complete);
}

const Operator kOps[] = {Operator::Eq, Operator::Lt, Operator::Lteq, Operator::Gt, Operator::Gteq};

Policy random_policy(std::mt19937& rng) {
  const auto& prof = AxisProfile::standard();
  const AxisOperand* axes[] = {prof.resolve("width"), prof.resolve("height")};
  std::uniform_int_distribution<int> count(1, 4), axis(0, 1), op(0, 4), value(1, 6);
  Rule r;
  r.action = odrl("use");
  int n = count(rng);
  for (int i = 0; i < n; ++i)
    r.constraints.push_back(Constraint{axes[axis(rng)]->iri, kOps[op(rng)], RightOperand::decimal(Rational(value(rng))), std::nullopt});
  Policy p;
  p.uid = "urn:random";
  p.rules.push_back(r);
  return p;
}

ConstraintSet as_set(const Policy& p) {
  ConstraintSet s;
  for (const auto& item : p.rules[0].constraints) {
    AxisConstraint ac;
    to_axis_constraint(std::get<Constraint>(item), AxisProfile::standard(), ac);
    s.push_back(ac);
  }
  return s;
}

std::size_t index_in(const std::string& location) {
  auto open = location.rfind('[');
  return std::stoul(location.substr(open + 1));
}

// Oracle: is the conjunction on `iri` empty over the positive quarter grid?
bool oracle_axis_empty(const ConstraintSet& s, const std::string& iri) {
  const oracle::Raw domain{false, true, 0, 0, true, false};
  return oracle::scan_empty(oracle::quarter_grid(-1, 8), [&](const Rational& x) {
    if (!oracle::member(domain, x)) return false;
    for (const auto& c : s)
      if (c.operand.iri == iri && !oracle::satisfies(c.op, x, c.value)) return false;
    return true;
  });
}

TEST(QualityTest, RemovingRedundantConstraintKeepsDenotation) {
  std::mt19937 rng(99);
  const auto& prof = AxisProfile::standard();
  std::vector<AxisOperand> axes{*prof.resolve("width"), *prof.resolve("height")};
  int removed = 0;
  for (int i = 0; i < 3000; ++i) {
    Policy p = random_policy(rng);
    auto before = box_denote(as_set(p), axes);
    auto red = lint_redundancy(p);
    // Flagged atoms may be dropped together.
    Policy q = p;
    std::vector<std::size_t> drop;
    for (const auto& f : red) drop.push_back(index_in(f.location));
    std::sort(drop.rbegin(), drop.rend());
    for (auto d : drop) q.rules[0].constraints.erase(q.rules[0].constraints.begin() + static_cast<long>(d));
    removed += static_cast<int>(drop.size());
    auto after = box_denote(as_set(q), axes);
    for (std::size_t a = 0; a < axes.size(); ++a)
      EXPECT_EQ(after.slots[a].interval, before.slots[a].interval) << serialize_policy(p);
  }
  EXPECT_GT(removed, 100);
}

TEST(QualityTest, SelfContradictionMatchesOracle) {
  std::mt19937 rng(5);
  for (int i = 0; i < 3000; ++i) {
    Policy p = random_policy(rng);
    auto s = as_set(p);
    bool expect = oracle_axis_empty(s, oax_iri("absoluteSizeWidth")) && std::any_of(s.begin(), s.end(), [](const AxisConstraint& c) { return c.operand.axis == Axis::Width; });
    expect = expect || (oracle_axis_empty(s, oax_iri("absoluteSizeHeight")) &&
                        std::any_of(s.begin(), s.end(), [](const AxisConstraint& c) { return c.operand.axis == Axis::Height; }));
    EXPECT_EQ(!lint_self_contradiction(p).empty(), expect) << serialize_policy(p);
  }
}

TEST(QualityTest, RefinementViolations) {
  auto up = sample("supply-chain-upstream.json");
  auto down = sample("supply-chain-downstream.json");
  auto ok = check_refinement(up, down);
  EXPECT_EQ(ok.report.verdict, SubsumptionVerdict::Confirmed);
  for (const auto& f : ok.findings) EXPECT_NE(f.severity, Severity::Error);
  auto bad = check_refinement(down, up);
  EXPECT_EQ(bad.report.verdict, SubsumptionVerdict::Refuted);
  auto errors = of_kind(bad.findings, LintKind::RefinementViolation);
  ASSERT_FALSE(errors.empty());
  EXPECT_EQ(errors[0].severity, Severity::Error);
}

TEST(QualityTest, FindingsSerialize) {
  auto fs = lint(sample("lint-fixture.json"));
  auto j = to_json(fs);
  EXPECT_EQ(j.size(), fs.size());
  EXPECT_NE(to_text(fs).find("SelfContradiction"), std::string::npos);
}

}  // namespace
}  // namespace oax
