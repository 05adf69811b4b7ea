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

#include "oax/interval.hpp"
#include "oracle.hpp"

namespace oax {
namespace {

Interval make(const oracle::Raw& r, Density d) {
  Bound lo = r.lo_inf ? Bound::neg_inf() : r.lo_open ? Bound::open_at(r.lo) : Bound::closed(r.lo);
  Bound hi = r.hi_inf ? Bound::pos_inf() : r.hi_open ? Bound::open_at(r.hi) : Bound::closed(r.hi);
  return Interval(lo, hi, d);
}

TEST(IntervalTest, PrintsEnds) {
  EXPECT_EQ(Interval(Bound::open_at(0), Bound::closed(600)).to_string(), "(0, 600]");
  EXPECT_EQ(Interval::full().to_string(), "(-inf, +inf)");
  EXPECT_EQ(Interval::empty().to_string(), "EMPTY");
  EXPECT_EQ(Interval::point(Rational(5, 2)).to_string(), "[2.5, 2.5]");
}

TEST(IntervalTest, DiscreteNormalForm) {
  Interval a(Bound::open_at(5), Bound::pos_inf(), Density::IntegerDiscrete);
  EXPECT_EQ(a.to_string(), "[6, +inf)");
  Interval b(Bound::closed(Rational(1, 2)), Bound::open_at(Rational(7, 2)), Density::IntegerDiscrete);
  EXPECT_EQ(b.to_string(), "[1, 3]");
  Interval c(Bound::open_at(600), Bound::open_at(601), Density::IntegerDiscrete);
  EXPECT_TRUE(c.is_empty());
  EXPECT_EQ(c, Interval::empty(Density::IntegerDiscrete));
  Interval dense(Bound::open_at(600), Bound::open_at(601));
  EXPECT_FALSE(dense.is_empty());
}

TEST(IntervalTest, EmptyIntervalsAreCanonical) {
  Interval a(Bound::closed(5), Bound::closed(3));
  Interval b(Bound::open_at(4), Bound::open_at(4));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.lower(), Bound::open_at(0));
  EXPECT_EQ(a.upper(), Bound::open_at(0));
  Interval d(Bound::closed(9), Bound::closed(2), Density::IntegerDiscrete);
  EXPECT_EQ(d.lower(), Bound::closed(1));
  EXPECT_EQ(d.upper(), Bound::closed(0));
}

TEST(IntervalTest, RejectsInvertedInfinities) {
  EXPECT_THROW(Interval(Bound::pos_inf(), Bound::pos_inf()), domain_error);
  EXPECT_THROW(Interval(Bound::neg_inf(), Bound::neg_inf()), domain_error);
}

TEST(IntervalTest, ContainsRejectsNonIntegralOnDiscrete) {
  Interval d(Bound::closed(0), Bound::closed(10), Density::IntegerDiscrete);
  EXPECT_TRUE(d.contains(Rational(3)));
  EXPECT_THROW(d.contains(Rational(7, 2)), domain_error);
}

TEST(IntervalTest, IntersectPrefersTheOpenEndOnTies) {
  Interval a(Bound::closed(0), Bound::closed(600));
  Interval b(Bound::open_at(0), Bound::open_at(600));
  EXPECT_EQ(intersect(a, b), b);
  EXPECT_EQ(intersect(b, a), b);
}

TEST(IntervalTest, DensityMismatchThrows) {
  Interval a = Interval::full(Density::Dense);
  Interval b = Interval::full(Density::IntegerDiscrete);
  EXPECT_THROW(intersect(a, b), density_mismatch);
  EXPECT_THROW(is_subset(a, b), density_mismatch);
}

TEST(IntervalTest, EmptyIsSubsetOfEverything) {
  EXPECT_TRUE(is_subset(Interval::empty(), Interval::point(Rational(3))));
  EXPECT_FALSE(is_subset(Interval::point(Rational(3)), Interval::empty()));
}

// Exhaustive comparison against grid scans: ends in {0..6} here; the
// acceptance run uses {0..12}.
TEST(IntervalTest, DenseAgreesWithQuarterGrid) {
  auto raws = oracle::all_raw(0, 6);
  auto grid = oracle::quarter_grid(-2, 8);
  for (const auto& ra : raws) {
    Interval a = make(ra, Density::Dense);
    auto in_a = [&](const Rational& x) { return oracle::member(ra, x); };
    ASSERT_EQ(a.is_empty(), oracle::scan_empty(grid, in_a)) << a.to_string();
    for (const auto& x : grid) ASSERT_EQ(a.contains(x), in_a(x));
    for (const auto& rb : raws) {
      Interval b = make(rb, Density::Dense);
      auto in_b = [&](const Rational& x) { return oracle::member(rb, x); };
      ASSERT_EQ(is_subset(a, b), oracle::scan_subset(grid, in_a, in_b)) << a.to_string() << " " << b.to_string();
      ASSERT_EQ(!intersect(a, b).is_empty(), oracle::scan_overlap(grid, in_a, in_b));
    }
  }
}

TEST(IntervalTest, DiscreteAgreesWithIntegerGrid) {
  auto raws = oracle::all_raw(0, 6);
  auto grid = oracle::integer_grid(-2, 8);
  for (const auto& ra : raws) {
    Interval a = make(ra, Density::IntegerDiscrete);
    auto in_a = [&](const Rational& x) { return oracle::member(ra, x); };
    ASSERT_EQ(a.is_empty(), oracle::scan_empty(grid, in_a));
    for (const auto& rb : raws) {
      Interval b = make(rb, Density::IntegerDiscrete);
      auto in_b = [&](const Rational& x) { return oracle::member(rb, x); };
      ASSERT_EQ(is_subset(a, b), oracle::scan_subset(grid, in_a, in_b));
    }
  }
}

TEST(IntervalTest, DiscreteHandlesFractionalEnds) {
  // Ends at quarter steps, checked against the integers they admit.
  auto grid = oracle::integer_grid(-3, 5);
  for (int lo = -8; lo <= 16; ++lo)
    for (int hi = -8; hi <= 16; ++hi)
      for (int lo_open = 0; lo_open < 2; ++lo_open)
        for (int hi_open = 0; hi_open < 2; ++hi_open) {
          oracle::Raw r{false, false, Rational(lo, 4), Rational(hi, 4), lo_open == 1, hi_open == 1};
          Interval a = make(r, Density::IntegerDiscrete);
          auto in = [&](const Rational& x) { return oracle::member(r, x); };
          ASSERT_EQ(a.is_empty(), oracle::scan_empty(grid, in)) << a.to_string();
          for (const auto& x : grid) ASSERT_EQ(a.contains(x), in(x));
        }
}

}  // namespace
}  // namespace oax
