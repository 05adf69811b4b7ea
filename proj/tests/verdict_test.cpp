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

#include "oax/verdict.hpp"
#include "oracle.hpp"

namespace oax {
namespace {

const Operator kOps[] = {Operator::Eq, Operator::Lt, Operator::Lteq, Operator::Gt, Operator::Gteq};

int k(Verdict3 v) { return static_cast<int>(v); }

TEST(KleeneTest, TablesMatchHandWrittenOnes) {
  const Verdict3 all[] = {Verdict3::Conflict, Verdict3::Unknown, Verdict3::Compatible};
  for (auto a : all) {
    EXPECT_EQ(k(kleene_not(a)), oracle::kNot[k(a)]);
    for (auto b : all) {
      EXPECT_EQ(k(kleene_and(a, b)), oracle::kAnd[k(a)][k(b)]);
      EXPECT_EQ(k(kleene_or(a, b)), oracle::kOr[k(a)][k(b)]);
    }
  }
}

// Oracle membership for an atomic constraint, domain included.
bool in_constraint(const AxisConstraint& c, const oracle::Raw& domain, const Rational& x) {
  return oracle::member(domain, x) && oracle::satisfies(c.op, x, c.value);
}

struct AxisCase {
  const char* name;
  oracle::Raw domain;
  std::vector<Rational> grid;
  AxisProfile profile;
};

std::vector<AxisCase> axis_cases() {
  const auto& std_profile = AxisProfile::standard();
  std::vector<AxisCase> cases;
  cases.push_back({"altitude", {true, true, 0, 0, false, false}, oracle::quarter_grid(-2, 8), std_profile});
  cases.push_back({"width", {false, true, 0, 0, true, false}, oracle::quarter_grid(-2, 8), std_profile});
  cases.push_back({"relativeSizeWidth", {false, false, 0, 100, true, false}, oracle::quarter_grid(-2, 8),
                   std_profile});
  cases.push_back({"width", {false, true, 0, 0, true, false}, oracle::integer_grid(-2, 10),
                   std_profile.with_integer_axes({"width"})});
  return cases;
}

TEST(AxisVerdictTest, MatchesGridOracle) {
  for (const auto& ac : axis_cases()) {
    const AxisOperand& op = *ac.profile.resolve(ac.name);
    for (auto o1 : kOps)
      for (int v1 = 0; v1 <= 6; ++v1)
        for (auto o2 : kOps)
          for (int v2 = 0; v2 <= 6; ++v2) {
            AxisConstraint c1{op, o1, Rational(v1)}, c2{op, o2, Rational(v2)};
            auto in1 = [&](const Rational& x) { return in_constraint(c1, ac.domain, x); };
            auto in2 = [&](const Rational& x) { return in_constraint(c2, ac.domain, x); };
            bool overlap = oracle::scan_overlap(ac.grid, in1, in2);
            EXPECT_EQ(axis_verdict(c1, c2), overlap ? Verdict3::Compatible : Verdict3::Conflict)
                << ac.name << ": " << c1.to_string() << " vs " << c2.to_string();
            bool subset = oracle::scan_subset(ac.grid, in1, in2);
            EXPECT_EQ(axis_subsumes(c1, c2),
                      subset ? SubsumptionVerdict::Confirmed : SubsumptionVerdict::Refuted)
                << ac.name << ": " << c1.to_string() << " in " << c2.to_string();
          }
  }
}

TEST(AxisVerdictTest, DenotationMatchesOracleWithFractionalBounds) {
  for (const auto& ac : axis_cases()) {
    const AxisOperand& op = *ac.profile.resolve(ac.name);
    for (auto o : kOps)
      for (int q = -4; q <= 24; ++q) {
        AxisConstraint c{op, o, Rational(q, 4)};
        Interval d = denote(c);
        for (const auto& x : ac.grid) EXPECT_EQ(d.contains(x), in_constraint(c, ac.domain, x)) << c.to_string();
      }
  }
}

TEST(AxisVerdictTest, RejectsSetOperators) {
  const AxisOperand& w = *AxisProfile::standard().resolve("width");
  EXPECT_THROW(denote({w, Operator::IsPartOf, Rational(1)}), unsupported_operator);
  Constraint c{w.iri, Operator::Lt, RightOperand::literal("wide"), std::nullopt};
  AxisConstraint out;
  EXPECT_THROW(to_axis_constraint(c, AxisProfile::standard(), out), unsupported_operator);
  Constraint other{odrl("purpose"), Operator::Eq, RightOperand::literal("x"), std::nullopt};
  EXPECT_FALSE(to_axis_constraint(other, AxisProfile::standard(), out));
}

// Random two-axis boxes with a few constraints each. Axes may stay unconstrained.
struct BoxGen {
  std::mt19937 rng{20260417};
  std::vector<AxisOperand> axes;
  explicit BoxGen(std::vector<AxisOperand> a) : axes(std::move(a)) {}

  ConstraintSet next() {
    ConstraintSet s;
    std::uniform_int_distribution<int> count(0, 3), axis(0, static_cast<int>(axes.size()) - 1),
        op(0, 4), value(0, 6);
    int n = count(rng);
    for (int i = 0; i < n; ++i) s.push_back({axes[axis(rng)], kOps[op(rng)], Rational(value(rng))});
    return s;
  }
};

const oracle::Raw kSizeDomain{false, true, 0, 0, true, false};

bool in_set_on(const ConstraintSet& s, const std::string& iri, const Rational& x) {
  for (const auto& c : s)
    if (c.operand.iri == iri && !in_constraint(c, kSizeDomain, x)) return false;
  return oracle::member(kSizeDomain, x);
}

bool constrains(const ConstraintSet& s, const std::string& iri) {
  return std::any_of(s.begin(), s.end(), [&](const AxisConstraint& c) { return c.operand.iri == iri; });
}

std::vector<AxisOperand> size_axes() {
  const auto& p = AxisProfile::standard();
  return {*p.resolve("width"), *p.resolve("height")};
}

// Reference box verdict: per-axis grid scan folded with the hand table.
int oracle_box_verdict(const ConstraintSet& a, const ConstraintSet& b, const std::vector<AxisOperand>& axes) {
  const auto grid = oracle::quarter_grid(-2, 8);
  int acc = 2;
  for (const auto& ax : axes) {
    int v = 1;
    if (constrains(a, ax.iri) && constrains(b, ax.iri)) {
      bool overlap = oracle::scan_overlap(
          grid, [&](const Rational& x) { return in_set_on(a, ax.iri, x); },
          [&](const Rational& x) { return in_set_on(b, ax.iri, x); });
      v = overlap ? 2 : 0;
    }
    acc = oracle::kAnd[acc][v];
  }
  return acc;
}

TEST(BoxVerdictTest, MatchesOracleOnRandomBoxes) {
  auto axes = size_axes();
  BoxGen gen(axes);
  for (int i = 0; i < 3000; ++i) {
    auto a = gen.next(), b = gen.next();
    auto v = box_verdict(a, b, axes);
    EXPECT_EQ(k(v.verdict), oracle_box_verdict(a, b, axes));
    // Deontic overlap is the per-axis negation, folded with or.
    auto dv = deontic_overlap(box_denote(a, axes), box_denote(b, axes));
    int expect = 0;
    for (const auto& d : v.axes) expect = oracle::kOr[expect][oracle::kNot[k(d.verdict)]];
    EXPECT_EQ(k(dv.verdict), expect);
  }
}

TEST(BoxVerdictTest, UnconstrainedAxisIsUnknown) {
  const auto& p = AxisProfile::standard();
  auto axes = size_axes();
  ConstraintSet only_width{{*p.resolve("width"), Operator::Lteq, Rational(600)}};
  ConstraintSet both{{*p.resolve("width"), Operator::Lteq, Rational(300)},
                     {*p.resolve("height"), Operator::Lteq, Rational(300)}};
  auto v = box_verdict(only_width, both, axes);
  EXPECT_EQ(v.verdict, Verdict3::Unknown);
  EXPECT_EQ(v.axes[0].verdict, Verdict3::Compatible);
  EXPECT_FALSE(v.axes[1].left.has_value());
  ConstraintSet wide{{*p.resolve("width"), Operator::Gteq, Rational(800)}};
  // A Conflict on any axis wins over Unknown elsewhere.
  EXPECT_EQ(box_verdict(wide, both, axes).verdict, Verdict3::Conflict);
  EXPECT_THROW(box_verdict(both, both, {*p.resolve("width")}), axis_mismatch);
}

TEST(BoxVerdictTest, ConflictPropagatesThroughSubsumption) {
  auto axes = size_axes();
  BoxGen gen(axes);
  int checked = 0;
  for (int i = 0; i < 4000; ++i) {
    auto c1 = gen.next(), c2 = gen.next(), c3 = gen.next();
    if (box_subsumes(c1, c2, axes).verdict != SubsumptionVerdict::Confirmed) continue;
    if (box_verdict(c2, c3, axes).verdict != Verdict3::Conflict) continue;
    ++checked;
    EXPECT_EQ(box_verdict(c1, c3, axes).verdict, Verdict3::Conflict);
  }
  EXPECT_GT(checked, 20);
}

TEST(BoxVerdictTest, SubsumptionMatchesOracle) {
  auto axes = size_axes();
  BoxGen gen(axes);
  const auto grid = oracle::quarter_grid(-2, 8);
  for (int i = 0; i < 3000; ++i) {
    auto a = gen.next(), b = gen.next();
    int acc = 2;
    for (const auto& ax : axes) {
      int v = 1;
      if (constrains(a, ax.iri) && constrains(b, ax.iri))
        v = oracle::scan_subset(
                grid, [&](const Rational& x) { return in_set_on(a, ax.iri, x); },
                [&](const Rational& x) { return in_set_on(b, ax.iri, x); })
                ? 2
                : 0;
      acc = oracle::kAnd[acc][v];
    }
    EXPECT_EQ(static_cast<int>(box_subsumes(a, b, axes).verdict), acc);
  }
}

TEST(BoxDenotationTest, AabbRoundTrip) {
  auto axes = size_axes();
  BoxGen gen(axes);
  for (int i = 0; i < 2000; ++i) {
    auto box = box_denote(gen.next(), axes);
    EXPECT_EQ(box_denote(to_constraints(box), axes), box);
  }
}

TEST(BoxDenotationTest, ProjectionsAreSound) {
  auto axes = size_axes();
  BoxGen gen(axes);
  const auto grid = oracle::quarter_grid(-1, 7);
  for (int i = 0; i < 300; ++i) {
    auto s = gen.next();
    auto box = box_denote(s, axes);
    for (const auto& x : grid)
      for (const auto& y : grid) {
        std::map<std::string, Rational> pt{{axes[0].iri, x}, {axes[1].iri, y}};
        bool in = in_set_on(s, axes[0].iri, x) && in_set_on(s, axes[1].iri, y);
        EXPECT_EQ(box.contains(pt), in);
        if (in) {
          EXPECT_TRUE(box.slots[0].interval.contains(x));
          EXPECT_TRUE(box.slots[1].interval.contains(y));
        }
      }
  }
}

TEST(RequestTest, MatchesOracle) {
  auto axes = size_axes();
  BoxGen gen(axes);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> q(-4, 28);
  for (int i = 0; i < 3000; ++i) {
    auto s = gen.next();
    ExecutionContext ctx;
    Rational x(q(rng), 4), y(q(rng), 4);
    ctx.values[axes[0].iri] = x;
    ctx.values[axes[1].iri] = y;
    bool expect = in_set_on(s, axes[0].iri, x) && in_set_on(s, axes[1].iri, y);
    EXPECT_EQ(request_satisfied(ctx, s, axes).satisfied, expect);
  }
}

TEST(RequestTest, MissingValueOnConstrainedAxisFails) {
  auto axes = size_axes();
  ConstraintSet s{{axes[0], Operator::Lteq, Rational(600)}};
  ExecutionContext ctx;
  ctx.values[axes[1].iri] = Rational(10);
  auto r = request_satisfied(ctx, s, axes);
  EXPECT_FALSE(r.satisfied);
  ASSERT_EQ(r.violations().size(), 1u);
  EXPECT_EQ(r.violations()[0]->operand.iri, axes[0].iri);
  ctx.values[axes[0].iri] = Rational(600);
  EXPECT_TRUE(request_satisfied(ctx, s, axes).satisfied);
}

TEST(RequestTest, IntegerAxisRejectsFractionalValue) {
  auto p = AxisProfile::standard().with_integer_axes({"width"});
  std::vector<AxisOperand> axes{*p.resolve("width")};
  ConstraintSet s{{axes[0], Operator::Lt, Rational(10)}};
  ExecutionContext ctx;
  ctx.values[axes[0].iri] = Rational(9);
  EXPECT_TRUE(request_satisfied(ctx, s, axes).satisfied);
  ctx.values[axes[0].iri] = Rational(19, 2);
  EXPECT_FALSE(request_satisfied(ctx, s, axes).satisfied);
}

}  // namespace
}  // namespace oax
