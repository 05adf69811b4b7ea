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

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include "oax/encoding.hpp"
#include "oax/evaluate.hpp"
#include "oax/io.hpp"
#include "oax/model.hpp"
#include "oax/profile.hpp"

namespace oax {

inline constexpr int kGeneratorVersion = 1;
inline constexpr std::array<std::pair<char, int>, 9> kCategoryCounts = {
    {{'A', 15}, {'B', 11}, {'C', 12}, {'D', 12}, {'E', 12}, {'F', 17}, {'G', 16}, {'H', 12}, {'I', 10}}};

// ---------------------------------------------------------------------------
// Suite generation

/// "width lteq 600, height gt 0" against `profile`.
inline ConstraintSet parse_box(std::string_view text, const AxisProfile& profile = AxisProfile::standard()) {
  ConstraintSet out;
  std::string body(text);
  std::stringstream items(body);
  std::string item;
  while (std::getline(items, item, ',')) {
    std::stringstream words(item);
    std::string axis, op, value, extra;
    words >> axis >> op >> value;
    if (axis.empty()) continue;
    if (value.empty() || (words >> extra)) throw error("malformed box term '" + item + "'");
    const AxisOperand* operand = profile.resolve(axis);
    if (!operand) throw error("unknown axis '" + axis + "'");
    auto o = operator_from_iri(odrl(op));
    if (!o || !is_dimensional_operator(*o)) throw error("unknown operator '" + op + "'");
    out.push_back({*operand, *o, parse_decimal(value)});
  }
  return out;
}

namespace detail {

struct SuiteBuilder {
  std::vector<ProverProblem> problems;
  std::map<char, int> next;

  std::string next_id(char cat) {
    int n = ++next[cat];
    return std::string(1, cat) + (n < 10 ? "0" : "") + std::to_string(n);
  }

  static std::vector<AxisOperand> axes_for(const std::vector<ConstraintSet>& l, const std::vector<ConstraintSet>& r) {
    std::vector<const ConstraintSet*> sets;
    for (const auto& s : l) sets.push_back(&s);
    for (const auto& s : r) sets.push_back(&s);
    return axes_of(sets, AxisProfile::standard());
  }

  void add(char cat, Relation rel, Connective conn, std::vector<ConstraintSet> left,
           std::vector<ConstraintSet> right, std::string description) {
    ProverProblem p;
    p.id = next_id(cat);
    p.category = cat;
    p.description = std::move(description);
    p.relation = rel;
    p.connective = conn;
    p.axes = axes_for(left, right);
    p.left = std::move(left);
    p.right = std::move(right);
    problems.push_back(finalize(std::move(p)));
  }

  void conflict(char cat, const ConstraintSet& l, const ConstraintSet& r, std::string d) {
    add(cat, Relation::ConflictCheck, Connective::And, {l}, {r}, std::move(d));
  }
  void subsume(char cat, const ConstraintSet& l, const ConstraintSet& r, std::string d) {
    add(cat, Relation::SubsumptionCheck, Connective::And, {l}, {r}, std::move(d));
  }
};

inline const AxisProfile& integer_width_profile() {
  static const AxisProfile p = AxisProfile::standard().with_integer_axes({"width"});
  return p;
}

inline void category_a(SuiteBuilder& b) {
  auto box = [](const char* s) { return parse_box(s); };
  auto ibox = [](const char* s) { return parse_box(s, integer_width_profile()); };
  b.conflict('A', box("width eq 600"), box("width eq 800"), "eq against eq, distinct values");
  b.conflict('A', box("width eq 600"), box("width gteq 500"), "eq inside a lower bound");
  b.subsume('A', box("width eq 600"), box("width lteq 1200"), "point inside an upper bound");
  b.conflict('A', box("width lt 600"), box("width gteq 800"), "lt against gteq, gap");
  b.conflict('A', box("width lt 600"), box("width gt 100"), "lt against gt, overlap");
  b.conflict('A', box("width lt 601"), box("width gt 600"), "open interval of width one, dense");
  b.conflict('A', box("width lteq 600"), box("width gteq 800"), "self-contradiction pair");
  b.conflict('A', box("width lteq 600"), box("width lteq 1200"), "nested upper bounds");
  b.subsume('A', box("width lteq 600"), box("width lteq 1200"), "stricter upper bound refines");
  b.conflict('A', box("width gt 800"), box("width lteq 600"), "gt against lteq, gap");
  b.conflict('A', ibox("width gt 600"), ibox("width lt 601"), "open interval of width one, integer");
  b.subsume('A', box("width gt 100"), box("width gteq 100"), "open bound inside closed bound");
  b.conflict('A', box("width gteq 800"), box("width lt 800"), "touching at an excluded end");
  b.subsume('A', box("width gteq 1200"), box("width gteq 800"), "stricter lower bound refines");
  b.subsume('A', box("width lteq 1200"), box("width lteq 600"), "looser upper bound does not refine");
}

inline void category_b(SuiteBuilder& b) {
  auto box = [](const char* s) { return parse_box(s); };
  b.conflict('B', box("width lteq 600, height lteq 400"), box("width gteq 500, height gteq 300"), "both axes overlap");
  b.conflict('B', box("width lteq 600, height lteq 400"), box("width gteq 800, height gteq 300"), "width conflicts");
  b.conflict('B', box("width lteq 600, height lteq 400"), box("width gteq 500, height gteq 500"), "height conflicts");
  b.conflict('B', box("width lt 100, height lt 100"), box("width gt 200, height gt 200"), "both axes conflict");
  b.conflict('B', box("width eq 600, height eq 400"), box("width eq 600, height eq 400"), "identical points");
  b.conflict('B', box("width eq 600, height eq 400"), box("width eq 600, height eq 500"), "points differ in height");
  b.subsume('B', box("width lteq 600, height lteq 400"), box("width lteq 1200, height lteq 900"), "supply chain, downstream refines upstream");
  b.subsume('B', box("width lteq 1200, height lteq 900"), box("width lteq 600, height lteq 400"), "supply chain, reversed");
  b.conflict('B', box("x gteq -50, y lt 20"), box("x lt 0, y gteq 10"), "positions with negative bounds");
  b.conflict('B', box("longitude gteq 10, latitude lteq 45"), box("longitude lteq 5, latitude gteq 40"), "coordinates, longitude conflicts");
  b.subsume('B', box("width gt 100, width lt 200, height eq 50"), box("width gteq 100, height lteq 50"), "mixed operators refine");
}

inline void category_c(SuiteBuilder& b) {
  auto box = [](const char* s) { return parse_box(s); };
  b.conflict('C', box("width lteq 600, height lteq 400, depth lteq 50"), box("width gteq 100, height gteq 100, depth gteq 10"), "3D overlap");
  b.conflict('C', box("depth lteq 50, height lteq 400, width lteq 600"), box("height gteq 100, depth gteq 10, width gteq 100"), "3D overlap, reordered");
  b.conflict('C', box("width lteq 600, height lteq 400, depth lteq 50"), box("width gteq 100, height gteq 100, depth gteq 60"), "depth conflicts");
  b.conflict('C', box("height lteq 400, depth lteq 50, width lteq 600"), box("depth gteq 60, width gteq 100, height gteq 100"), "depth conflicts, reordered");
  b.conflict('C', box("width lt 10, height lt 10, depth lt 10"), box("width gt 5, height gt 5, depth gt 10"), "depth gap at an open end");
  b.conflict('C', box("depth gt 10, height gt 5, width gt 5"), box("height lt 10, width lt 10, depth lt 10"), "depth gap, sides swapped");
  b.subsume('C', box("width eq 100, height eq 100, depth eq 100"), box("width lteq 200, height lteq 200, depth lteq 200"), "point inside a cube");
  b.subsume('C', box("width lteq 200, height lteq 200, depth lteq 200"), box("width eq 100, height eq 100, depth eq 100"), "cube inside a point");
  b.subsume('C', box("width gteq 10, width lteq 20, height gteq 10, height lteq 20, depth gteq 10, depth lteq 20"), box("width gt 5, height gt 5, depth gt 5"), "closed cube inside open orthant");
  b.subsume('C', box("width gteq 10, width lteq 20, height gteq 10, height lteq 20, depth gteq 10, depth lteq 30"), box("width lt 25, height lt 25, depth lt 25"), "depth escapes");
  b.conflict('C', box("relativeSizeWidth lteq 50, relativeSizeHeight lteq 50, relativeSizeDepth lteq 50"), box("relativeSizeWidth gteq 50, relativeSizeHeight gteq 50, relativeSizeDepth gteq 50"), "relative sizes touch at 50");
  b.conflict('C', box("relativeSizeWidth lt 50, relativeSizeHeight lteq 50, relativeSizeDepth lteq 50"), box("relativeSizeWidth gteq 50, relativeSizeHeight gteq 50, relativeSizeDepth gteq 50"), "relative width excludes 50");
}

inline void category_d(SuiteBuilder& b) {
  auto box = [](const char* s) { return parse_box(s); };
  b.conflict('D', box("width gteq 100, width lteq 600, height gt 0, height lt 400, x gteq -10, x lteq 10, y eq 5"), box("width gteq 500, height gteq 300, x gt 0, y lteq 5"), "4D mixed operators overlap");
  b.conflict('D', box("width gteq 100, width lteq 600, height gt 0, height lt 400, x gteq -10, x lteq 10, y eq 5"), box("width gteq 500, height gteq 300, x gt 0, y lt 5"), "4D, y excluded");
  b.conflict('D', box("width lteq 600, height lteq 400, x lt 0, y gt 0"), box("width gteq 600, height gteq 400, x gteq -5, y lteq 1"), "4D, corner contact");
  b.conflict('D', box("width lt 600, height lteq 400, x lt 0, y gt 0"), box("width gteq 600, height gteq 400, x gteq -5, y lteq 1"), "4D, corner excluded");
  b.subsume('D', box("width gt 100, width lt 200, height gt 100, height lt 200, x eq 0, y eq 0"), box("width gteq 100, width lteq 200, height gteq 100, height lteq 200, x gteq -1, x lteq 1, y gteq -1, y lteq 1"), "open box inside closed box");
  b.subsume('D', box("width gteq 100, width lteq 200, height gteq 100, height lteq 200, x gteq -1, x lteq 1, y gteq -1, y lteq 1"), box("width gt 100, width lt 200, height gt 100, height lt 200, x eq 0, y eq 0"), "closed box inside open box");
  b.conflict('D', box("x gteq 0, x lteq 10, y gteq 0, y lteq 10, z gteq 0, z lteq 10, altitude gteq 100, altitude lteq 200"), box("x gteq 5, x lteq 15, y gteq 5, y lteq 15, z gteq 5, z lteq 15, altitude gteq 150, altitude lteq 250"), "4D shifted boxes overlap");
  b.conflict('D', box("x gteq 0, x lteq 10, y gteq 0, y lteq 10, z gteq 0, z lteq 10, altitude gteq 100, altitude lteq 200"), box("x gteq 5, x lteq 15, y gteq 5, y lteq 15, z gteq 5, z lteq 15, altitude gt 200, altitude lteq 250"), "4D, altitude separated");
  b.conflict('D', box("x gt 1, x gt 2, x lt 9, x lt 8, y gt 1, y gt 2, y lt 9, y lt 8, z gt 1, z gt 2, z lt 9, z lt 8, altitude gt 1, altitude gt 2, altitude lt 9, altitude lt 8"), box("x gteq 8, y gteq 8, z gteq 8, altitude gteq 8"), "scaling, sixteen constraints, all axes conflict");
  b.conflict('D', box("x gt 1, x gt 2, x lt 9, x lt 8, y gt 1, y gt 2, y lt 9, y lt 8, z gt 1, z gt 2, z lt 9, z lt 8, altitude gt 1, altitude gt 2, altitude lt 9, altitude lt 8"), box("x gteq 7.5, y gteq 7.5, z gteq 7.5, altitude gteq 7.5"), "scaling, sixteen constraints, overlap");
  b.subsume('D', box("x gteq 2, x lteq 3, y gteq 2, y lteq 3, z gteq 2, z lteq 3, altitude gteq 2, altitude lteq 3"), box("x gt 1, x lt 4, y gt 1, y lt 4, z gt 1, z lt 4, altitude gt 1, altitude lt 4"), "4D closed inside open");
  b.subsume('D', box("x gteq 2, x lteq 3, y gteq 2, y lteq 3, z gteq 2, z lteq 3, altitude gteq 2, altitude lteq 3"), box("x gt 1, x lt 4, y gt 1, y lt 4, z gt 1, z lt 4, altitude gt 1, altitude lt 3"), "4D, altitude end escapes");
}

inline void category_e(SuiteBuilder& b) {
  auto box = [](const char* s) { return parse_box(s); };
  b.conflict('E', box("width lteq 600, height lteq 600"), box("width eq 1200, height eq 400"), "display permission against museum request");
  b.conflict('E', box("width lteq 600, latitude gteq 40"), box("width gteq 500, latitude lteq 45"), "size and latitude");
  b.conflict('E', box("relativeSizeWidth lteq 50, x gt 0"), box("relativeSizeWidth gt 50, x gt 10"), "relative width and position");
  b.conflict('E', box("longitude gteq -10, longitude lteq 10, latitude gteq 50, latitude lteq 60, altitude lteq 500"), box("longitude eq 0, latitude eq 55, altitude gteq 100"), "geographic cell contains a point");
  b.conflict('E', box("longitude gteq -10, longitude lteq 10, latitude gteq 50, latitude lteq 60, altitude lteq 500"), box("longitude eq 0, latitude eq 55, altitude gteq 600"), "geographic cell, altitude above");
  b.conflict('E', box("depth lteq 50, relativeSpatialPositionX gteq 10, relativeSpatialPositionX lteq 20"), box("depth gt 50, relativeSpatialPositionX eq 15"), "depth and relative position");
  b.conflict('E', box("height gteq 100, relativeSpatialPositionY lt 50, z eq 0"), box("height lteq 100, relativeSpatialPositionY gteq 0, z gteq 0"), "height, relative y and z touch");
  b.subsume('E', box("width eq 600, height eq 400"), box("width lteq 600, height lteq 600"), "request within the display permission");
  b.subsume('E', box("width eq 1200, height eq 400"), box("width lteq 600, height lteq 600"), "museum request outside the display permission");
  b.conflict('E', box("relativeSizeWidth gt 0, relativeSizeWidth lteq 100, latitude lt -80"), box("relativeSizeWidth eq 100, latitude gteq -90"), "domain ends of relative width and latitude");
  b.conflict('E', box("longitude lt -179, latitude gt 89, altitude lt 0, width lt 1"), box("longitude gteq -180, latitude lteq 90, altitude gteq -10, width gt 0"), "four axes near their domain ends");
  b.conflict('E', box("longitude lteq -180, latitude gteq 90"), box("longitude gt -180, latitude eq 90"), "longitude pinned at the domain end");
}

// Rung of the difficulty ladder: `constants` distinct values spread over
// `axes` real-valued axes.
inline void ladder_rung(SuiteBuilder& b, int constants, int axes, bool subsumption, bool negative) {
  static const char* names[] = {"x", "y", "z", "altitude"};
  const AxisProfile& profile = AxisProfile::standard();
  std::vector<std::vector<Rational>> chunks(static_cast<std::size_t>(axes));
  int v = 0;
  for (int a = 0; a < axes; ++a) {
    int size = constants / axes + (a < constants % axes ? 1 : 0);
    for (int k = 0; k < size; ++k) chunks[static_cast<std::size_t>(a)].push_back(Rational(10 * ++v));
  }
  ConstraintSet left, right;
  auto push = [&](ConstraintSet& s, int a, Operator op, const Rational& value) {
    s.push_back({*profile.resolve(names[a]), op, value});
  };
  for (int a = 0; a < axes; ++a) {
    const auto& c = chunks[static_cast<std::size_t>(a)];
    const bool last = a == axes - 1;
    const std::size_t m = c.size();
    if (!subsumption) {
      if (last && negative) {
        push(left, a, Operator::Lteq, c[0]);
        for (std::size_t i = 1; i < m; ++i) push(left, a, Operator::Lt, c[i]);
        push(right, a, Operator::Gteq, c[m - 1]);
      } else {
        push(left, a, Operator::Gteq, c[0]);
        push(left, a, Operator::Lteq, c[m - 1]);
        push(right, a, Operator::Gt, c[0]);
        for (std::size_t i = 1; i < m; ++i) push(right, a, Operator::Lt, c[i]);
      }
    } else {
      ConstraintSet inner, outer;
      auto push_to = [&](ConstraintSet& s, Operator op, const Rational& value) { push(s, a, op, value); };
      push_to(outer, Operator::Gteq, c[0]);
      push_to(outer, Operator::Lteq, c[m - 1]);
      if (m == 2) {
        push_to(inner, Operator::Gt, c[0]);
        push_to(inner, Operator::Lt, c[1]);
      } else {
        push_to(inner, Operator::Gteq, c[1]);
        for (std::size_t i = 1; i + 1 < m; ++i) push_to(inner, Operator::Lteq, c[i]);
      }
      const bool swap = last && negative;
      auto& l = swap ? outer : inner;
      auto& r = swap ? inner : outer;
      left.insert(left.end(), l.begin(), l.end());
      right.insert(right.end(), r.begin(), r.end());
    }
  }
  std::string d = "ladder: " + std::to_string(constants) + " constants, " + std::to_string(axes) +
                  (axes == 1 ? " axis, " : " axes, ") +
                  std::to_string(constants * (constants - 1) / 2) + " ordering facts";
  if (subsumption) b.subsume('F', left, right, d);
  else b.conflict('F', left, right, d);
}

inline void category_f(SuiteBuilder& b) {
  struct Rung { int constants, axes; bool subsumption; };
  static const Rung rungs[] = {{3, 1, false}, {3, 1, true},  {4, 1, false},  {4, 2, false}, {5, 2, true},  {6, 2, false},
                               {6, 3, true},  {7, 3, false}, {8, 3, true},   {8, 4, false}, {9, 4, true},  {10, 4, false},
                               {10, 4, true}, {11, 4, false}, {11, 4, true}, {12, 4, false}, {12, 4, true}};
  for (std::size_t i = 0; i < std::size(rungs); ++i)
    ladder_rung(b, rungs[i].constants, rungs[i].axes, rungs[i].subsumption, i % 2 == 1);
}

inline void category_g(SuiteBuilder& b) {
  static const char* ops[] = {"eq", "lt", "lteq", "gt", "gteq"};
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      b.conflict('G', parse_box(std::string("width ") + ops[i] + " 600"), parse_box(std::string("width ") + ops[j] + " 600"),
                 std::string(ops[i]) + " against " + ops[j] + " at 600");
  auto box = [](const char* s) { return parse_box(s); };
  b.conflict('G', box("width lteq 600, height gteq 600"), box("width gteq 600, height lteq 600"), "two closed faces meet at one point");
  b.conflict('G', box("width lt 600, height gteq 600"), box("width gteq 600, height lteq 600"), "width face open");
  b.conflict('G', box("width lteq 600, height gt 600"), box("width gteq 600, height lteq 600"), "height face open");
  b.conflict('G', box("x lteq 0, y gteq 0"), box("x gteq 0, y lteq 0"), "quadrants meet at the origin");
  b.subsume('G', box("width lt 600, height lt 600"), box("width lteq 600, height lteq 600"), "open square inside closed square");
  b.subsume('G', box("width lteq 600, height lteq 600"), box("width lt 600, height lteq 600"), "closed width face escapes");
}

inline void category_h(SuiteBuilder& b) {
  auto box = [](const char* s) { return parse_box(s); };
  auto ibox = [](const char* s) { return parse_box(s, integer_width_profile()); };
  auto either = [&](char cat, std::vector<ConstraintSet> l, std::vector<ConstraintSet> r, const char* d) {
    b.add(cat, Relation::ConflictCheck, Connective::Or, std::move(l), std::move(r), d);
  };
  const ConstraintSet low = box("width gteq 0, width lteq 10, height gteq 0, height lteq 10");
  const ConstraintSet high = box("width gteq 20, width lteq 30, height gteq 20, height lteq 30");
  const ConstraintSet cross1 = box("width gteq 0, width lteq 10, height gteq 20, height lteq 30");
  const ConstraintSet cross2 = box("width gteq 20, width lteq 30, height gteq 0, height lteq 10");
  either('H', {low, high}, {cross1, cross2}, "cross-pick: every axis overlaps, no box does");
  either('H', {low, high}, {cross1, cross2, box("width gteq 5, width lteq 25, height gteq 5, height lteq 8")}, "cross-pick plus a bridging box");
  either('H', {low, high}, {box("width gt 30, height gt 30"), box("width gteq 25, width lteq 28, height gteq 25, height lteq 40")}, "second branches overlap");
  either('H', {box("width lt 10, height gt 0"), box("width gt 90, height gt 0")},
         {box("width gteq 10, width lteq 90, height gt 0"), box("width eq 50, height eq 5")}, "width bands separated");
  either('H', {box("width lt 10, height gt 0"), box("width gt 90, height gt 0")},
         {box("width gteq 10, width lteq 90, height gt 0"), box("width eq 95, height eq 5")}, "point in the upper band");
  either('H', {box("width lteq 10, height lteq 10, depth lteq 10"), box("width gteq 20, height gteq 20, depth gteq 20")},
         {box("width lteq 10, height lteq 10, depth gteq 20"), box("width gteq 20, height gteq 20, depth lteq 10")}, "3D cross-pick on depth");
  either('H', {box("width lteq 10, height lteq 10, depth lteq 10"), box("width gteq 20, height gteq 20, depth gteq 20")},
         {box("width lteq 10, height lteq 10, depth gteq 20"), box("width gteq 20, height gteq 20, depth gteq 15")}, "3D, second pair overlaps");
  const ConstraintSet q1 = box("x lt 0, y lt 0"), q3 = box("x gt 0, y gt 0");
  either('H', {q1, q3}, {box("x lt 0, y gt 0"), box("x gt 0, y lt 0")}, "opposite quadrants");
  either('H', {q1, q3}, {box("x lt 0, y gt 0"), box("x gt 0, y lt 0"), box("x eq 0, y eq 0")}, "origin excluded by open quadrants");
  either('H', {q1, q3}, {box("x lteq 0, y lteq 0"), box("x gt 0, y lt 0")}, "closed quadrant overlaps open quadrant");
  either('H', {ibox("width gt 10, width lt 12, height eq 1"), ibox("width gt 30, width lt 32, height eq 1")},
         {ibox("width gt 11.5, width lt 20, height eq 1"), ibox("width gt 32, width lt 40, height eq 1")}, "integer width separates the branches");
  either('H', {box("width gt 10, width lt 12, height eq 1"), box("width gt 30, width lt 32, height eq 1")},
         {box("width gt 11.5, width lt 20, height eq 1"), box("width gt 32, width lt 40, height eq 1")}, "same branches on a dense width");
}

inline void category_i(SuiteBuilder& b) {
  auto box = [](const char* s) { return parse_box(s); };
  auto ibox = [](const char* s) { return parse_box(s, integer_width_profile()); };
  auto exclusive = [&](std::vector<ConstraintSet> l, std::vector<ConstraintSet> r, const char* d) {
    b.add('I', Relation::ConflictCheck, Connective::Xone, std::move(l), std::move(r), d);
  };
  const std::vector<ConstraintSet> ell = {
      box("width gt 0, width lteq 10, height gteq 0, height lteq 30"),
      box("width gt 10, width lteq 30, height gteq 0, height lteq 10")};
  exclusive(ell, {box("width gteq 20, width lteq 25, height gteq 0, height lteq 5")}, "box on the horizontal arm");
  exclusive(ell, {box("width gteq 20, width lteq 25, height gteq 20, height lteq 25")}, "box in the notch");
  exclusive(ell, {box("width gteq 15, width lteq 20, height gteq 15, height lteq 30"), box("width gt 20, width lteq 30, height gteq 15, height lteq 20")},
            "L-shape nested in the notch");
  exclusive(ell, {box("width gteq 25, width lteq 40, height gteq 5, height lteq 8"), box("width gteq 50, width lteq 60, height gteq 0, height lteq 5")},
            "one arm of each L-shape meets");
  exclusive(ell, {box("width gteq 5, width lteq 8, height gteq 20, height lteq 25")}, "box on the vertical arm");
  const std::vector<ConstraintSet> ell_xy = {box("x gteq -10, x lteq 0, y gteq -10, y lteq 10"),
                                             box("x gt 0, x lteq 10, y gteq -10, y lteq -5")};
  exclusive(ell_xy, {box("x eq 5, y eq 0")}, "point in the notch around the origin");
  exclusive(ell_xy, {box("x eq 5, y eq -7")}, "point on the lower arm");
  const std::vector<ConstraintSet> ell3 = {box("width gteq 0, width lteq 10, height gteq 0, height lteq 30, depth gteq 0, depth lteq 5"),
                                           box("width gt 10, width lteq 30, height gteq 0, height lteq 10, depth gteq 0, depth lteq 5")};
  exclusive(ell3, {box("width eq 20, height eq 5, depth eq 5")}, "3D L-shape, point on an arm");
  exclusive(ell3, {box("width eq 20, height eq 5, depth eq 6")}, "3D L-shape, point above the slab");
  exclusive({ibox("width gteq 1, width lteq 10, height gteq 0, height lteq 30"), ibox("width gt 10, width lteq 30, height gteq 0, height lteq 10")},
            {ibox("width gt 10, width lt 11, height eq 5")}, "integer width leaves no room between 10 and 11");
}

}  // namespace detail

/// The full deterministic suite, in id order.
inline std::vector<ProverProblem> generate_suite() {
  detail::SuiteBuilder b;
  detail::category_a(b);
  detail::category_b(b);
  detail::category_c(b);
  detail::category_d(b);
  detail::category_e(b);
  detail::category_f(b);
  detail::category_g(b);
  detail::category_h(b);
  detail::category_i(b);
  return b.problems;
}

/// A prover problem from the first pair of same-action rules of two
/// policies. Only axis constraints can be encoded.
inline ProverProblem problem_from_policies(const Policy& left, const Policy& right, Relation relation,
                                           const AxisProfile& profile = AxisProfile::standard(),
                                           std::string id = "P01") {
  auto s1 = shape_policy(left, profile);
  auto s2 = shape_policy(right, profile);
  for (const auto& a : s1) {
    for (const auto& b : s2) {
      if (a.action != b.action) continue;
      for (const auto* r : {&a, &b})
        if (!r->other_atoms.empty() || !r->opaque.empty())
          throw not_submittable(r->path + " has constraints outside the axis profile; only axis constraints can be encoded");
      ProverProblem p;
      p.id = std::move(id);
      p.category = 'P';
      p.description = "policy " + left.uid + " " + a.path + " against policy " + right.uid + " " + b.path;
      p.relation = relation;
      p.left = a.branches();
      p.right = b.branches();
      const bool xone = (a.disjunction && a.disjunction->connective == Connective::Xone) ||
                        (b.disjunction && b.disjunction->connective == Connective::Xone);
      p.connective = a.disjunction || b.disjunction ? (xone ? Connective::Xone : Connective::Or) : Connective::And;
      if (relation == Relation::SubsumptionCheck && p.connective != Connective::And)
        throw not_submittable("subsumption between or/xone rules is not encoded");
      p.axes = axes_of(std::vector<const RuleShape*>{&a, &b}, profile);
      return finalize(std::move(p));
    }
  }
  throw no_comparable_rules("no comparable rule pair: the policies share no action");
}

// ---------------------------------------------------------------------------
// Manifest

namespace detail {

inline json constraint_set_json(const ConstraintSet& s) {
  json arr = json::array();
  for (const auto& c : s) {
    json v = is_integral(c.value) && abs(c.value) < Rational(1000000000) ? json(static_cast<long long>(numerator(c.value)))
                                                                         : json(to_decimal_string(c.value));
    arr.push_back({{"leftOperand", c.operand.compact()}, {"operator", std::string(to_string(c.op))}, {"rightOperand", v}});
  }
  return arr;
}

inline json side_json(const std::vector<ConstraintSet>& branches) {
  json arr = json::array();
  for (const auto& b : branches) arr.push_back(constraint_set_json(b));
  return arr;
}

}  // namespace detail

inline std::string tptp_path(const ProverProblem& p) { return p.category_dir() + "/" + p.id + ".p"; }
inline std::string smt_path(const ProverProblem& p) { return p.category_dir() + "/" + p.id + ".smt2"; }

inline json manifest_json(const std::vector<ProverProblem>& problems) {
  json counts = json::object();
  for (const auto& [cat, n] : kCategoryCounts) counts[std::string(1, cat)] = 0;
  for (const auto& p : problems) counts[p.category_dir()] = counts[p.category_dir()].get<int>() + 1;
  json list = json::array();
  for (const auto& p : problems) {
    json axes = json::array();
    for (const auto& a : p.axes)
      axes.push_back({{"operand", a.compact()}, {"density", std::string(to_string(a.density()))}});
    list.push_back({{"id", p.id},
                    {"category", p.category_dir()},
                    {"description", p.description},
                    {"relation", std::string(to_string(p.relation))},
                    {"connective", std::string(to_string(p.connective))},
                    {"axes", axes},
                    {"left", detail::side_json(p.left)},
                    {"right", detail::side_json(p.right)},
                    {"expected", verdict_name(p.expected)},
                    {"expected_szs", std::string(to_string(p.expected_szs))},
                    {"expected_smt", std::string(to_string(p.expected_smt))},
                    {"files", {{"tptp", tptp_path(p)}, {"smt", smt_path(p)}}}});
  }
  return {{"generator", "oax-bench"},
          {"version", kGeneratorVersion},
          {"total", problems.size()},
          {"counts", counts},
          {"axioms", {"ax/AXIS000-0.ax", "ax/ORD001-0.ax"}},
          {"problems", list}};
}

/// Rebuilds the problems from a manifest; expected values are recomputed
/// by the engine and must agree with the recorded ones.
inline std::vector<ProverProblem> problems_from_manifest(const json& m) {
  std::vector<ProverProblem> out;
  for (const auto& e : m.at("problems")) {
    ProverProblem p;
    p.id = e.at("id").get<std::string>();
    p.category = e.at("category").get<std::string>().at(0);
    p.description = e.value("description", "");
    p.relation = e.at("relation") == "subsumption" ? Relation::SubsumptionCheck : Relation::ConflictCheck;
    const std::string conn = e.at("connective").get<std::string>();
    p.connective = conn == "or" ? Connective::Or : conn == "xone" ? Connective::Xone : Connective::And;
    std::vector<std::string> integer_axes;
    for (const auto& a : e.at("axes"))
      if (a.at("density") == "integer") integer_axes.push_back(a.at("operand").get<std::string>());
    const AxisProfile profile = AxisProfile::standard().with_integer_axes(integer_axes);
    for (const auto& a : e.at("axes")) p.axes.push_back(*profile.resolve(a.at("operand").get<std::string>()));
    auto side = [&](const json& arr) {
      std::vector<ConstraintSet> branches;
      for (const auto& b : arr) {
        ConstraintSet s;
        for (const auto& c : b) {
          const json& v = c.at("rightOperand");
          Rational value = v.is_string() ? parse_decimal(v.get<std::string>()) : Rational(v.get<long long>());
          s.push_back({*profile.resolve(c.at("leftOperand").get<std::string>()),
                       *operator_from_iri(odrl(c.at("operator").get<std::string>())), value});
        }
        branches.push_back(std::move(s));
      }
      return branches;
    };
    p.left = side(e.at("left"));
    p.right = side(e.at("right"));
    p = finalize(std::move(p));
    if (verdict_name(p.expected) != e.at("expected").get<std::string>())
      throw error(p.id + ": manifest verdict " + e.at("expected").get<std::string>() + " disagrees with the engine (" +
                  verdict_name(p.expected) + ")");
    out.push_back(std::move(p));
  }
  return out;
}

/// Every file of the suite keyed by path relative to the bench root.
inline std::map<std::string, std::string> suite_files(const std::vector<ProverProblem>& problems) {
  std::map<std::string, std::string> files;
  for (const auto& [name, text] : emit_axiom_files()) files["ax/" + name] = text;
  for (const auto& p : problems) {
    files[tptp_path(p)] = emit_tptp(p);
    files[smt_path(p)] = emit_smt(p);
  }
  files["manifest.json"] = manifest_json(problems).dump(2) + "\n";
  return files;
}

inline std::vector<ProverProblem> write_suite(const std::filesystem::path& root) {
  auto problems = generate_suite();
  for (const auto& [rel, text] : suite_files(problems)) write_file_atomic(root / rel, text);
  return problems;
}

// ---------------------------------------------------------------------------
// Prover execution

enum class ProverKind { Vampire, Z3 };

inline std::string_view to_string(ProverKind k) { return k == ProverKind::Vampire ? "vampire" : "z3"; }

enum class ProverStatus { Theorem, CounterSatisfiable, Sat, Unsat, Timeout, ParseFail };

inline std::string_view to_string(ProverStatus s) {
  switch (s) {
    case ProverStatus::Theorem: return "Theorem";
    case ProverStatus::CounterSatisfiable: return "CounterSatisfiable";
    case ProverStatus::Sat: return "sat";
    case ProverStatus::Unsat: return "unsat";
    case ProverStatus::Timeout: return "Timeout";
    case ProverStatus::ParseFail: return "ParseFail";
  }
  return "?";
}

struct ProverResult {
  std::string id;
  ProverKind prover = ProverKind::Z3;
  ProverStatus status = ProverStatus::ParseFail;
  double seconds = 0;
  std::string excerpt;
};

/// First `SZS status X` line, else the first sat/unsat/timeout token.
inline ProverStatus parse_prover_output(std::string_view out) {
  auto pos = out.find("SZS status ");
  if (pos != std::string_view::npos) {
    auto rest = out.substr(pos + 11);
    auto end = rest.find_first_of(" \t\r\n");
    auto word = rest.substr(0, end);
    if (word == "Theorem") return ProverStatus::Theorem;
    if (word == "CounterSatisfiable") return ProverStatus::CounterSatisfiable;
    if (word == "Timeout") return ProverStatus::Timeout;
    return ProverStatus::ParseFail;
  }
  std::size_t i = 0;
  while (i < out.size()) {
    while (i < out.size() && std::isspace(static_cast<unsigned char>(out[i]))) ++i;
    std::size_t j = i;
    while (j < out.size() && !std::isspace(static_cast<unsigned char>(out[j]))) ++j;
    auto word = out.substr(i, j - i);
    if (word == "sat") return ProverStatus::Sat;
    if (word == "unsat") return ProverStatus::Unsat;
    if (word == "timeout") return ProverStatus::Timeout;
    i = j;
  }
  return ProverStatus::ParseFail;
}

/// Executable lookup on PATH. Paths containing a slash are taken as is.
inline std::optional<std::string> find_executable(const std::string& name) {
  namespace fs = std::filesystem;
  if (name.find('/') != std::string::npos)
    return ::access(name.c_str(), X_OK) == 0 ? std::optional<std::string>(name) : std::nullopt;
  const char* path = std::getenv("PATH");
  if (!path) return std::nullopt;
  std::stringstream ss(path);
  std::string dir;
  while (std::getline(ss, dir, ':')) {
    if (dir.empty()) continue;
    fs::path candidate = fs::path(dir) / name;
    if (::access(candidate.c_str(), X_OK) == 0) return candidate.string();
  }
  return std::nullopt;
}

/// Discovery order: explicit flag, config file, environment variable, PATH.
inline std::optional<std::string> discover_prover(ProverKind kind, const std::optional<std::string>& flag,
                                                  const std::optional<std::string>& config) {
  for (const auto* candidate : {&flag, &config})
    if (*candidate) return find_executable(**candidate);
  const char* env = std::getenv(kind == ProverKind::Vampire ? "OAX_VAMPIRE" : "OAX_Z3");
  if (env && *env) return find_executable(env);
  return find_executable(kind == ProverKind::Vampire ? "vampire" : "z3");
}

inline std::string install_hint(ProverKind kind) {
  return kind == ProverKind::Vampire
             ? "vampire not found; install it from https://vprover.github.io and put it on PATH, or set OAX_VAMPIRE"
             : "z3 not found; install it (e.g. `pip install z3-solver`) and put it on PATH, or set OAX_Z3";
}

/// Runs one prover on one file. Prover failures are reported through the
/// status, never thrown; a missing executable is an environment error.
inline ProverResult run_prover(ProverKind kind, const std::string& executable, const std::filesystem::path& file,
                               int timeout_seconds, const std::filesystem::path& include_root = {}) {
  if (::access(executable.c_str(), X_OK) != 0) throw environment_error(install_hint(kind));
  std::vector<std::string> args{executable};
  if (kind == ProverKind::Vampire) {
    args.insert(args.end(), {"--input_syntax", "tptp", "--time_limit", std::to_string(timeout_seconds)});
    if (!include_root.empty()) args.insert(args.end(), {"--include", include_root.string()});
  } else {
    args.insert(args.end(), {"-smt2", "-T:" + std::to_string(timeout_seconds)});
  }
  args.push_back(file.string());

  ProverResult r;
  r.id = file.stem().string();
  r.prover = kind;
  int fds[2];
  if (::pipe(fds) != 0) throw environment_error("pipe failed");
  const auto start = std::chrono::steady_clock::now();
  pid_t pid = ::fork();
  if (pid < 0) throw environment_error("fork failed");
  if (pid == 0) {
    ::dup2(fds[1], STDOUT_FILENO);
    ::dup2(fds[1], STDERR_FILENO);
    ::close(fds[0]);
    ::close(fds[1]);
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    argv.push_back(nullptr);
    ::execv(argv[0], argv.data());
    _exit(127);
  }
  ::close(fds[1]);
  std::string output;
  bool timed_out = false;
  // A little slack over the prover's own limit before killing it.
  const auto deadline = start + std::chrono::seconds(timeout_seconds) + std::chrono::seconds(2);
  char buf[4096];
  for (;;) {
    auto now = std::chrono::steady_clock::now();
    if (now >= deadline) {
      timed_out = true;
      ::kill(pid, SIGKILL);
      break;
    }
    int ms = static_cast<int>(std::chrono::duration_cast<std::chrono::milliseconds>(deadline - now).count());
    pollfd pfd{fds[0], POLLIN, 0};
    int rc = ::poll(&pfd, 1, std::min(ms, 200));
    if (rc < 0 && errno != EINTR) break;
    if (rc <= 0) continue;
    ssize_t n = ::read(fds[0], buf, sizeof buf);
    if (n <= 0) break;
    if (output.size() < (1u << 20)) output.append(buf, static_cast<std::size_t>(n));
  }
  ::close(fds[0]);
  int wstatus = 0;
  ::waitpid(pid, &wstatus, 0);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.status = timed_out ? ProverStatus::Timeout : parse_prover_output(output);
  r.excerpt = output.substr(0, 400);
  return r;
}

/// Runs `jobs` workers over the tasks; results come back sorted by id.
inline std::vector<ProverResult> run_all(ProverKind kind, const std::string& executable,
                                         const std::vector<std::pair<std::string, std::filesystem::path>>& tasks,
                                         int timeout_seconds, int jobs, const std::filesystem::path& include_root = {}) {
  std::vector<ProverResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  for (int w = 0; w < n; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < tasks.size(); i = next++) {
        results[i] = run_prover(kind, executable, tasks[i].second, timeout_seconds, include_root);
        results[i].id = tasks[i].first;
      }
    });
  for (auto& t : pool) t.join();
  std::sort(results.begin(), results.end(), [](const ProverResult& a, const ProverResult& b) { return a.id < b.id; });
  return results;
}

// ---------------------------------------------------------------------------
// Concordance

struct ConcordanceRow {
  std::string id;
  std::string expected;
  SzsStatus expected_szs = SzsStatus::Theorem;
  SmtStatus expected_smt = SmtStatus::Unsat;
  std::optional<ProverResult> fof;  // nullopt: skipped
  std::optional<ProverResult> smt;
  bool fof_match = true;
  bool smt_match = true;
  bool missing = false;  // prover ran but produced no result for this id
};

struct ConcordanceReport {
  std::vector<ConcordanceRow> rows;
  bool fof_skipped = true;
  bool smt_skipped = true;
  std::size_t compared = 0;
  std::size_t agreed = 0;

  bool all_agree() const { return compared == agreed; }
  double percent() const { return compared ? 100.0 * static_cast<double>(agreed) / static_cast<double>(compared) : 100.0; }
};

inline bool status_matches(SzsStatus want, ProverStatus got) {
  return (want == SzsStatus::Theorem && got == ProverStatus::Theorem) ||
         (want == SzsStatus::CounterSatisfiable && got == ProverStatus::CounterSatisfiable);
}
inline bool status_matches(SmtStatus want, ProverStatus got) {
  return (want == SmtStatus::Sat && got == ProverStatus::Sat) || (want == SmtStatus::Unsat && got == ProverStatus::Unsat);
}

/// Pass nullptr for a prover that was not run.
inline ConcordanceReport concordance_report(const std::vector<ProverProblem>& problems,
                                            const std::vector<ProverResult>* fof,
                                            const std::vector<ProverResult>* smt) {
  ConcordanceReport r;
  r.fof_skipped = fof == nullptr;
  r.smt_skipped = smt == nullptr;
  auto lookup = [](const std::vector<ProverResult>* rs, const std::string& id) -> std::optional<ProverResult> {
    if (!rs) return std::nullopt;
    for (const auto& x : *rs)
      if (x.id == id) return x;
    return std::nullopt;
  };
  for (const auto& p : problems) {
    ConcordanceRow row;
    row.id = p.id;
    row.expected = verdict_name(p.expected);
    row.expected_szs = p.expected_szs;
    row.expected_smt = p.expected_smt;
    row.fof = lookup(fof, p.id);
    row.smt = lookup(smt, p.id);
    if (fof && !row.fof) row.missing = row.fof_match = false;
    if (smt && !row.smt) row.missing = true, row.smt_match = false;
    if (row.fof) row.fof_match = status_matches(p.expected_szs, row.fof->status);
    if (row.smt) row.smt_match = status_matches(p.expected_smt, row.smt->status);
    if (fof || smt) {
      ++r.compared;
      if (row.fof_match && row.smt_match) ++r.agreed;
    }
    r.rows.push_back(std::move(row));
  }
  return r;
}

inline json to_json(const ConcordanceReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    auto col = [](const std::optional<ProverResult>& x, bool skipped) -> json {
      if (skipped) return "skipped";
      if (!x) return "missing";
      return std::string(to_string(x->status));
    };
    rows.push_back({{"id", row.id},
                    {"internal", row.expected},
                    {"expected_szs", std::string(to_string(row.expected_szs))},
                    {"expected_smt", std::string(to_string(row.expected_smt))},
                    {"fof", col(row.fof, r.fof_skipped)},
                    {"smt", col(row.smt, r.smt_skipped)},
                    {"fof_match", r.fof_skipped ? json(nullptr) : json(row.fof_match)},
                    {"smt_match", r.smt_skipped ? json(nullptr) : json(row.smt_match)}});
  }
  json mismatches = json::array();
  for (const auto& row : r.rows)
    if (!row.fof_match || !row.smt_match) mismatches.push_back(row.id);
  return {{"total", r.rows.size()},   {"compared", r.compared},     {"agreed", r.agreed},
          {"concordance", r.percent()}, {"fof_skipped", r.fof_skipped}, {"smt_skipped", r.smt_skipped},
          {"mismatches", mismatches}, {"problems", rows}};
}

inline std::string to_text(const ConcordanceReport& r) {
  std::ostringstream s;
  char line[160];
  std::snprintf(line, sizeof line, "%-5s %-11s %-19s %-19s %-7s %-9s\n", "id", "internal", "expected", "fof", "smt", "match");
  s << line;
  for (const auto& row : r.rows) {
    std::string fof = r.fof_skipped ? "skipped" : row.fof ? std::string(to_string(row.fof->status)) : "missing";
    std::string smt = r.smt_skipped ? "skipped" : row.smt ? std::string(to_string(row.smt->status)) : "missing";
    std::string expected = std::string(to_string(row.expected_szs)) + "/" + std::string(to_string(row.expected_smt));
    std::string match = (r.fof_skipped && r.smt_skipped) ? "-" : (row.fof_match && row.smt_match) ? "yes" : "NO";
    std::snprintf(line, sizeof line, "%-5s %-11s %-19s %-19s %-7s %-9s\n", row.id.c_str(), row.expected.c_str(),
                  expected.c_str(), fof.c_str(), smt.c_str(), match.c_str());
    s << line;
  }
  std::snprintf(line, sizeof line, "concordance: %zu/%zu (%.1f%%)%s%s\n", r.agreed, r.compared, r.percent(),
                r.fof_skipped ? ", fof skipped" : "", r.smt_skipped ? ", smt skipped" : "");
  s << line;
  return s.str();
}

}  // namespace oax
