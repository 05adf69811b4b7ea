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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oax/denotation.hpp"
#include "oax/errors.hpp"
#include "oax/interval.hpp"
#include "oax/model.hpp"

namespace oax {

/// Strong Kleene truth values, ordered Conflict < Unknown < Compatible
/// (F < ⊥ < T).
enum class Verdict3 { Conflict = 0, Unknown = 1, Compatible = 2 };

inline std::string_view to_string(Verdict3 v) {
  switch (v) {
    case Verdict3::Conflict: return "Conflict";
    case Verdict3::Unknown: return "Unknown";
    case Verdict3::Compatible: return "Compatible";
  }
  return "?";
}

inline std::optional<Verdict3> verdict3_from_string(std::string_view s) {
  if (s == "Conflict" || s == "conflict") return Verdict3::Conflict;
  if (s == "Unknown" || s == "unknown") return Verdict3::Unknown;
  if (s == "Compatible" || s == "compatible") return Verdict3::Compatible;
  return std::nullopt;
}

constexpr Verdict3 kleene_and(Verdict3 a, Verdict3 b) { return a < b ? a : b; }
constexpr Verdict3 kleene_or(Verdict3 a, Verdict3 b) { return a < b ? b : a; }
constexpr Verdict3 kleene_not(Verdict3 a) {
  return a == Verdict3::Conflict ? Verdict3::Compatible
       : a == Verdict3::Compatible ? Verdict3::Conflict
                                   : Verdict3::Unknown;
}

/// Refuted < Unknown < Confirmed, so the box aggregate is a minimum too.
enum class SubsumptionVerdict { Refuted = 0, Unknown = 1, Confirmed = 2 };

inline std::string_view to_string(SubsumptionVerdict v) {
  switch (v) {
    case SubsumptionVerdict::Refuted: return "Refuted";
    case SubsumptionVerdict::Unknown: return "Unknown";
    case SubsumptionVerdict::Confirmed: return "Confirmed";
  }
  return "?";
}

inline Verdict3 interval_verdict(const Interval& a, const Interval& b) {
  return intersect(a, b).is_empty() ? Verdict3::Conflict : Verdict3::Compatible;
}

inline SubsumptionVerdict interval_subsumes(const Interval& a, const Interval& b) {
  return is_subset(a, b) ? SubsumptionVerdict::Confirmed : SubsumptionVerdict::Refuted;
}

namespace detail {
inline void require_same_axis(const AxisConstraint& a, const AxisConstraint& b) {
  if (a.operand.iri != b.operand.iri)
    throw axis_mismatch("constraints target different axes: " + a.operand.compact() + " vs " +
                        b.operand.compact());
}
}  // namespace detail

/// Always definite: Conflict iff the denotations are disjoint.
inline Verdict3 axis_verdict(const AxisConstraint& c1, const AxisConstraint& c2) {
  detail::require_same_axis(c1, c2);
  return interval_verdict(denote(c1), denote(c2));
}

inline SubsumptionVerdict axis_subsumes(const AxisConstraint& c1, const AxisConstraint& c2) {
  detail::require_same_axis(c1, c2);
  return interval_subsumes(denote(c1), denote(c2));
}

struct AxisSlot {
  AxisOperand operand;
  Interval interval;         // full domain when unconstrained
  bool constrained = false;
  std::vector<std::size_t> sources;  // indices into the constraint set
};

/// Cartesian product of per-axis intervals, in axis order.
struct BoxDenotation {
  std::vector<AxisSlot> slots;

  const AxisSlot* find(std::string_view iri) const {
    for (const auto& s : slots)
      if (s.operand.iri == iri) return &s;
    return nullptr;
  }

  bool is_empty() const {
    return std::any_of(slots.begin(), slots.end(),
                       [](const AxisSlot& s) { return s.interval.is_empty(); });
  }

  /// Point membership: every coordinate lies in its axis interval. Axes
  /// missing from the point make it a non-member.
  bool contains(const std::map<std::string, Rational>& point) const {
    for (const auto& s : slots) {
      auto it = point.find(s.operand.iri);
      if (it == point.end() || !s.interval.contains(it->second)) return false;
    }
    return true;
  }

  friend bool operator==(const BoxDenotation& a, const BoxDenotation& b) {
    if (a.slots.size() != b.slots.size()) return false;
    for (std::size_t i = 0; i < a.slots.size(); ++i) {
      if (a.slots[i].operand.iri != b.slots[i].operand.iri) return false;
      if (!(a.slots[i].interval == b.slots[i].interval)) return false;
    }
    return true;
  }
};

/// Per-axis intersection of every constraint's denotation. Axes no
/// constraint targets keep their full domain.
inline BoxDenotation box_denote(const ConstraintSet& constraints,
                                const std::vector<AxisOperand>& axes) {
  BoxDenotation box;
  box.slots.reserve(axes.size());
  for (const auto& axis : axes) box.slots.push_back({axis, axis.domain, false, {}});
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    const auto& c = constraints[i];
    auto it = std::find_if(box.slots.begin(), box.slots.end(),
                           [&](const AxisSlot& s) { return s.operand.iri == c.operand.iri; });
    if (it == box.slots.end())
      throw axis_mismatch("constraint on " + c.operand.compact() + " is outside the axis set");
    it->interval = intersect(it->interval, denote(c));
    it->constrained = true;
    it->sources.push_back(i);
  }
  return box;
}

/// AABB back to constraints: one lower face and one upper face per
/// bounded side. Unbounded sides produce nothing.
inline ConstraintSet to_constraints(const BoxDenotation& box) {
  ConstraintSet out;
  for (const auto& s : box.slots) {
    const Interval& iv = s.interval;
    if (iv.is_empty()) {
      out.push_back({s.operand, Operator::Gt, Rational(0)});
      out.push_back({s.operand, Operator::Lt, Rational(0)});
      continue;
    }
    if (iv.lower().finite())
      out.push_back({s.operand, iv.lower().open ? Operator::Gt : Operator::Gteq, iv.lower().value});
    if (iv.upper().finite())
      out.push_back({s.operand, iv.upper().open ? Operator::Lt : Operator::Lteq, iv.upper().value});
  }
  return out;
}

/// Axes targeted by any of the constraint sets, in `profile` order. Each
/// axis keeps the operand (and density) carried by its constraints.
inline std::vector<AxisOperand> axes_of(const std::vector<const ConstraintSet*>& sets,
                                        const AxisProfile& profile) {
  std::vector<AxisOperand> axes;
  for (const auto& op : profile.operands()) {
    const AxisOperand* carried = nullptr;
    for (const auto* set : sets)
      for (const auto& c : *set)
        if (!carried && c.operand.iri == op.iri) carried = &c.operand;
    if (carried) axes.push_back(*carried);
  }
  return axes;
}

struct AxisVerdictDetail {
  AxisOperand operand;
  std::optional<Interval> left;   // nullopt when that side leaves the axis unconstrained
  std::optional<Interval> right;
  std::optional<Interval> intersection;
  Verdict3 verdict = Verdict3::Unknown;
};

struct BoxVerdict {
  Verdict3 verdict = Verdict3::Compatible;
  std::vector<AxisVerdictDetail> axes;

  std::vector<const AxisVerdictDetail*> with_verdict(Verdict3 v) const {
    std::vector<const AxisVerdictDetail*> out;
    for (const auto& a : axes)
      if (a.verdict == v) out.push_back(&a);
    return out;
  }
};

inline BoxVerdict box_verdict(const BoxDenotation& b1, const BoxDenotation& b2) {
  BoxVerdict out;
  for (const auto& s1 : b1.slots) {
    const AxisSlot* s2 = b2.find(s1.operand.iri);
    if (!s2) throw axis_mismatch("axis " + s1.operand.compact() + " missing from second box");
    AxisVerdictDetail d{s1.operand, std::nullopt, std::nullopt, std::nullopt, Verdict3::Unknown};
    if (s1.constrained) d.left = s1.interval;
    if (s2->constrained) d.right = s2->interval;
    if (s1.constrained && s2->constrained) {
      d.intersection = intersect(s1.interval, s2->interval);
      d.verdict = d.intersection->is_empty() ? Verdict3::Conflict : Verdict3::Compatible;
    }
    out.verdict = kleene_and(out.verdict, d.verdict);
    out.axes.push_back(std::move(d));
  }
  if (b2.slots.size() != b1.slots.size())
    throw axis_mismatch("boxes range over different axis sets");
  return out;
}

/// Per-axis verdicts (several constraints on one axis act through their
/// intersection) folded with Kleene conjunction.
inline BoxVerdict box_verdict(const ConstraintSet& c1, const ConstraintSet& c2,
                              const std::vector<AxisOperand>& axes) {
  return box_verdict(box_denote(c1, axes), box_denote(c2, axes));
}

struct AxisSubsumptionDetail {
  AxisOperand operand;
  std::optional<Interval> left;
  std::optional<Interval> right;
  SubsumptionVerdict verdict = SubsumptionVerdict::Unknown;
};

struct BoxSubsumption {
  SubsumptionVerdict verdict = SubsumptionVerdict::Confirmed;
  std::vector<AxisSubsumptionDetail> axes;
};

inline BoxSubsumption box_subsumes(const BoxDenotation& b1, const BoxDenotation& b2) {
  if (b1.slots.size() != b2.slots.size())
    throw axis_mismatch("boxes range over different axis sets");
  BoxSubsumption out;
  for (const auto& s1 : b1.slots) {
    const AxisSlot* s2 = b2.find(s1.operand.iri);
    if (!s2) throw axis_mismatch("axis " + s1.operand.compact() + " missing from second box");
    AxisSubsumptionDetail d{s1.operand, std::nullopt, std::nullopt, SubsumptionVerdict::Unknown};
    if (s1.constrained) d.left = s1.interval;
    if (s2->constrained) d.right = s2->interval;
    if (s1.constrained && s2->constrained) d.verdict = interval_subsumes(s1.interval, s2->interval);
    out.verdict = std::min(out.verdict, d.verdict);
    out.axes.push_back(std::move(d));
  }
  return out;
}

inline BoxSubsumption box_subsumes(const ConstraintSet& c1, const ConstraintSet& c2,
                                   const std::vector<AxisOperand>& axes) {
  return box_subsumes(box_denote(c1, axes), box_denote(c2, axes));
}

struct AxisRequestDetail {
  AxisOperand operand;
  std::optional<Interval> interval;  // nullopt when unconstrained
  std::optional<Rational> value;
  bool ok = true;
  std::string note;
};

struct RequestResult {
  bool satisfied = true;
  std::vector<AxisRequestDetail> axes;

  std::vector<const AxisRequestDetail*> violations() const {
    std::vector<const AxisRequestDetail*> out;
    for (const auto& a : axes)
      if (!a.ok) out.push_back(&a);
    return out;
  }
};

/// Yes iff every supplied value lies in its axis interval. A constrained
/// axis without a value is a violation (missing data never satisfies); an
/// unconstrained axis only checks supplied values against the domain.
inline RequestResult request_satisfied(const ExecutionContext& ctx, const ConstraintSet& c,
                                       const std::vector<AxisOperand>& axes) {
  BoxDenotation box = box_denote(c, axes);
  RequestResult out;
  for (const auto& slot : box.slots) {
    AxisRequestDetail d{slot.operand, std::nullopt, std::nullopt, true, {}};
    if (slot.constrained) d.interval = slot.interval;
    auto it = ctx.values.find(slot.operand.iri);
    if (it != ctx.values.end()) d.value = it->second;

    if (!d.value) {
      if (slot.constrained) {
        d.ok = false;
        d.note = "no value supplied for a constrained axis";
      }
    } else if (slot.operand.density() == Density::IntegerDiscrete && !is_integral(*d.value)) {
      d.ok = false;
      d.note = "non-integral value on an integer axis";
    } else if (!slot.operand.domain.contains(*d.value)) {
      d.ok = false;
      d.note = "value outside domain " + slot.operand.domain.to_string();
    } else if (!slot.interval.contains(*d.value)) {
      d.ok = false;
      d.note = to_decimal_string(*d.value) + " not in " + slot.interval.to_string();
    }
    if (!d.ok) out.satisfied = false;
    out.axes.push_back(std::move(d));
  }
  return out;
}

/// Permission/prohibition clash: overlapping scopes are a deontic
/// Conflict, a disjoint axis rules the clash out (Compatible), an axis one
/// side leaves open gives Unknown. This is the Kleene negation of the box
/// verdict.
inline BoxVerdict deontic_overlap(const BoxDenotation& permission_box,
                                  const BoxDenotation& prohibition_box) {
  BoxVerdict plain = box_verdict(permission_box, prohibition_box);
  BoxVerdict out;
  out.verdict = Verdict3::Conflict;
  for (auto d : plain.axes) {
    d.verdict = kleene_not(d.verdict);
    out.verdict = kleene_or(out.verdict, d.verdict);
    out.axes.push_back(std::move(d));
  }
  return out;
}

}  // namespace oax
