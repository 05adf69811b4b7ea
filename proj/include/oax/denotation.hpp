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

#include <string>
#include <vector>

#include "oax/errors.hpp"
#include "oax/interval.hpp"
#include "oax/model.hpp"
#include "oax/profile.hpp"

namespace oax {

/// A constraint on a single axis: (axis operand, operator, exact value).
struct AxisConstraint {
  AxisOperand operand;
  Operator op = Operator::Lteq;
  Rational value;

  std::string to_string() const {
    return operand.compact() + " " + std::string(oax::to_string(op)) + " " +
           to_decimal_string(value);
  }

  friend bool operator==(const AxisConstraint&, const AxisConstraint&) = default;
};

using ConstraintSet = std::vector<AxisConstraint>;

/// Values of the axis type satisfying `c`, before clipping to the domain.
inline Interval raw_denotation(const AxisConstraint& c) {
  const Density d = c.operand.density();
  Interval raw;
  switch (c.op) {
    case Operator::Eq:
      raw = Interval::point(c.value, d);
      break;
    case Operator::Lteq:
      raw = Interval(Bound::neg_inf(), Bound::closed(c.value), d);
      break;
    case Operator::Gteq:
      raw = Interval(Bound::closed(c.value), Bound::pos_inf(), d);
      break;
    case Operator::Lt:
      raw = Interval(Bound::neg_inf(), Bound::open_at(c.value), d);
      break;
    case Operator::Gt:
      raw = Interval(Bound::open_at(c.value), Bound::pos_inf(), d);
      break;
    default:
      throw unsupported_operator("operator '" + std::string(to_string(c.op)) + "' on " +
                                 c.operand.compact() +
                                 " has no interval denotation (supported: eq, lt, lteq, gt, gteq)");
  }
  return raw;
}

/// Subset of the axis domain satisfying `c`. The result is clipped to the
/// operand's domain, so a bound outside the domain yields an empty or full
/// interval rather than an error.
inline Interval denote(const AxisConstraint& c) {
  return intersect(raw_denotation(c), c.operand.domain);
}

/// Lifts an atomic constraint onto its axis operand. Throws
/// unsupported_operator when the operator or right operand cannot take part
/// in interval evaluation. Returns false (leaving `out` untouched) when the
/// left operand is not a registered axis operand.
inline bool to_axis_constraint(const Constraint& c, const AxisProfile& profile, AxisConstraint& out) {
  const AxisOperand* op = profile.find(c.left_operand);
  if (!op) return false;
  if (!is_dimensional_operator(c.op))
    throw unsupported_operator("operator '" + std::string(to_string(c.op)) + "' on " +
                               op->compact() +
                               " is not a dimensional comparison operator (eq, lt, lteq, gt, gteq)");
  if (!c.right.is_decimal())
    throw unsupported_operator("right operand '" + c.right.text + "' on " + op->compact() +
                               " is not an exact decimal");
  out = AxisConstraint{*op, c.op, *c.right.number};
  return true;
}

}  // namespace oax
