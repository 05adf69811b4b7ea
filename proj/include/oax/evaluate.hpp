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
#include <set>
#include <string>
#include <vector>

#include "oax/composition.hpp"
#include "oax/denotation.hpp"
#include "oax/errors.hpp"
#include "oax/model.hpp"
#include "oax/profile.hpp"
#include "oax/verdict.hpp"

namespace oax {

/// A constraint together with where it sits in the policy, e.g.
/// `permission[0].constraint[2]` or `permission[0].constraint[1].or[0]`.
template <class T>
struct Located {
  T value;
  std::string path;
};

/// Dimensional or/xone of a rule; each branch already conjoined with the
/// rule's axis atoms when built through `branch_set`.
struct Disjunction {
  Connective connective = Connective::Or;
  std::vector<ConstraintSet> branches;
  std::string path;
};

/// A rule split by what the engine can reason about.
struct RuleShape {
  RuleKind kind = RuleKind::Permission;
  std::string action;
  std::string path;  // `permission[0]`
  std::vector<Located<AxisConstraint>> axis_atoms;
  std::vector<Located<Constraint>> other_atoms;  // scalar, concept-valued, unknown IRIs
  std::optional<Disjunction> disjunction;
  std::vector<Located<LogicalConstraint>> opaque;  // or/xone over non-axis operands

  ConstraintSet atoms() const {
    ConstraintSet out;
    for (const auto& a : axis_atoms) out.push_back(a.value);
    return out;
  }

  /// The rule as branches: one per or/xone branch (each conjoined with the
  /// atoms), or the atoms alone.
  std::vector<ConstraintSet> branches() const {
    ConstraintSet base = atoms();
    if (!disjunction) return {base};
    std::vector<ConstraintSet> out;
    for (const auto& b : disjunction->branches) {
      ConstraintSet c = base;
      c.insert(c.end(), b.begin(), b.end());
      out.push_back(std::move(c));
    }
    return out;
  }

  std::set<std::string> other_operands() const {
    std::set<std::string> out;
    for (const auto& c : other_atoms) out.insert(c.value.left_operand);
    for (const auto& lc : opaque)
      for (const auto& b : lc.value.branches)
        for (const auto& c : b) out.insert(c.left_operand);
    return out;
  }
};

inline std::vector<std::string> rule_paths(const Policy& p) {
  std::map<RuleKind, std::size_t> counters;
  std::vector<std::string> out;
  for (const auto& r : p.rules)
    out.push_back(std::string(to_string(r.kind)) + "[" + std::to_string(counters[r.kind]++) + "]");
  return out;
}

inline RuleShape shape_rule(const Rule& rule, const std::string& path, const AxisProfile& profile) {
  RuleShape s;
  s.kind = rule.kind;
  s.action = rule.action;
  s.path = path;
  for (std::size_t i = 0; i < rule.constraints.size(); ++i) {
    std::string cpath = path + ".constraint[" + std::to_string(i) + "]";
    const auto& item = rule.constraints[i];
    if (const auto* c = std::get_if<Constraint>(&item)) {
      AxisConstraint ac;
      if (to_axis_constraint(*c, profile, ac)) s.axis_atoms.push_back({ac, cpath});
      else s.other_atoms.push_back({*c, cpath});
      continue;
    }
    const auto& lc = std::get<LogicalConstraint>(item);
    bool all_axis = true;
    for (const auto& b : lc.branches)
      for (const auto& c : b)
        if (!profile.find(c.left_operand)) all_axis = false;
    if (!all_axis) {
      s.opaque.push_back({lc, cpath});
      continue;
    }
    if (s.disjunction)
      throw composition_error(path + ": at most one dimensional or/xone per rule is supported");
    Disjunction d{lc.connective, {}, cpath};
    for (const auto& b : lc.branches) {
      ConstraintSet set;
      for (const auto& c : b) {
        AxisConstraint ac;
        to_axis_constraint(c, profile, ac);
        set.push_back(ac);
      }
      d.branches.push_back(std::move(set));
    }
    s.disjunction = std::move(d);
  }
  return s;
}

inline std::vector<RuleShape> shape_policy(const Policy& p, const AxisProfile& profile) {
  auto paths = rule_paths(p);
  std::vector<RuleShape> out;
  for (std::size_t i = 0; i < p.rules.size(); ++i) out.push_back(shape_rule(p.rules[i], paths[i], profile));
  return out;
}

inline std::vector<AxisOperand> axes_of(const std::vector<const RuleShape*>& rules,
                                        const AxisProfile& profile) {
  std::vector<ConstraintSet> sets;
  for (const auto* r : rules)
    for (auto& b : r->branches()) sets.push_back(std::move(b));
  std::vector<const ConstraintSet*> ptrs;
  for (const auto& s : sets) ptrs.push_back(&s);
  return axes_of(ptrs, profile);
}

enum class PairRelation { Constraint, Deontic };

inline std::string_view to_string(PairRelation r) {
  return r == PairRelation::Constraint ? "constraint" : "deontic";
}

struct PairVerdict {
  std::string left_rule;
  std::string right_rule;
  std::string action;
  PairRelation relation = PairRelation::Constraint;
  Verdict3 verdict = Verdict3::Unknown;
  std::optional<BoxVerdict> box;                   // plain boxes
  std::optional<CompositionResult> composition;    // or/xone involved
  std::optional<Connective> connective;
  std::vector<LabeledVerdict> operands;
};

struct ConflictReport {
  Verdict3 verdict = Verdict3::Compatible;
  std::vector<PairVerdict> pairs;
  std::vector<std::string> notes;

  /// The pair whose verdict decides the overall one.
  const PairVerdict* deciding() const {
    for (const auto& p : pairs)
      if (p.verdict == verdict) return &p;
    return pairs.empty() ? nullptr : &pairs.front();
  }

  std::vector<const AxisVerdictDetail*> conflicting_axes() const {
    std::vector<const AxisVerdictDetail*> out;
    const PairVerdict* d = deciding();
    if (d && d->box)
      for (const auto& a : d->box->axes)
        if (a.verdict == Verdict3::Conflict) out.push_back(&a);
    return out;
  }

  std::string explanation() const {
    auto axes = conflicting_axes();
    if (axes.size() == 1)
      return std::string(to_string(axes.front()->operand.axis)) +
             " is the sole conflicting axis (" + axes.front()->operand.compact() + ")";
    if (axes.size() > 1) {
      std::string s;
      for (const auto* a : axes) s += (s.empty() ? "" : ", ") + a->operand.compact();
      return std::to_string(axes.size()) + " conflicting axes: " + s;
    }
    return "";
  }
};

namespace detail {

inline VerdictSource guess_source(const std::string& operand, const RuleShape& a, const RuleShape& b) {
  for (const auto* r : {&a, &b})
    for (const auto& c : r->other_atoms)
      if (c.value.left_operand == operand && is_set_based_operator(c.value.op))
        return VerdictSource::ConceptValued;
  return VerdictSource::Scalar;
}

inline void add_other_operand_labels(const RuleShape& a, const RuleShape& b,
                                     const std::vector<LabeledVerdict>& external,
                                     std::vector<LabeledVerdict>& out) {
  std::set<std::string> operands = a.other_operands();
  for (const auto& o : b.other_operands()) operands.insert(o);
  for (const auto& lv : external) operands.insert(lv.operand);
  auto oa = a.other_operands();
  auto ob = b.other_operands();
  for (const auto& op : operands) {
    auto it = std::find_if(external.begin(), external.end(),
                           [&](const LabeledVerdict& lv) { return lv.operand == op; });
    if (it != external.end()) {
      out.push_back(*it);
      continue;
    }
    std::string note = (oa.count(op) && ob.count(op)) ? "no verdict supplied for this operand"
                                                       : "operand constrained on one side only";
    out.push_back({op, guess_source(op, a, b), Verdict3::Unknown, note});
  }
}

inline PairVerdict compare_rules(const RuleShape& a, const RuleShape& b, PairRelation relation,
                                 const std::vector<LabeledVerdict>& external,
                                 const AxisProfile& profile) {
  PairVerdict pv;
  pv.left_rule = a.path;
  pv.right_rule = b.path;
  pv.action = a.action;
  pv.relation = relation;
  auto axes = axes_of(std::vector<const RuleShape*>{&a, &b}, profile);

  if (!a.disjunction && !b.disjunction) {
    BoxDenotation ba = box_denote(a.atoms(), axes);
    BoxDenotation bb = box_denote(b.atoms(), axes);
    if (relation == PairRelation::Deontic) {
      const bool a_is_permission = a.kind != RuleKind::Prohibition;
      pv.box = a_is_permission ? deontic_overlap(ba, bb) : deontic_overlap(bb, ba);
    } else {
      pv.box = box_verdict(ba, bb);
    }
    for (const auto& d : pv.box->axes) {
      std::string note;
      if (d.intersection) note = d.left->to_string() + " ∩ " + d.right->to_string() + " = " + d.intersection->to_string();
      else note = "axis constrained on one side only";
      pv.operands.push_back({d.operand.iri, VerdictSource::Dimensional, d.verdict, note});
    }
  } else {
    BranchSet ba{axes, a.branches()};
    BranchSet bb{axes, b.branches()};
    bool xone = (a.disjunction && a.disjunction->connective == Connective::Xone) ||
                (b.disjunction && b.disjunction->connective == Connective::Xone);
    pv.connective = xone ? Connective::Xone : Connective::Or;
    if (relation == PairRelation::Deontic) {
      pv.composition = or_verdict(ba, bb);
      pv.composition->verdict = kleene_not(pv.composition->verdict);
    } else if (!xone) {
      pv.composition = or_verdict(ba, bb);
    } else if (ba.branches.size() >= 2 && bb.branches.size() >= 2) {
      pv.composition = xone_verdict(ba, bb);
    } else {
      pv.composition = xone_against(ba, bb);
    }
    std::string axes_names;
    for (const auto& ax : axes) axes_names += (axes_names.empty() ? "" : ", ") + ax.compact();
    pv.operands.push_back({std::string(to_string(*pv.connective)) + "(" + axes_names + ")",
                           VerdictSource::Dimensional, pv.composition->verdict,
                           std::to_string(pv.composition->count(Verdict3::Compatible)) + " of " +
                               std::to_string(pv.composition->pairs()) +
                               " branch pairs overlap"});
  }
  add_other_operand_labels(a, b, external, pv.operands);
  if (pv.operands.empty())
    pv.verdict = relation == PairRelation::Deontic ? Verdict3::Conflict : Verdict3::Compatible;
  else
    pv.verdict = cross_domain_verdict(pv.operands);
  return pv;
}

}  // namespace detail

/// Compares every rule of `p1` with every rule of `p2` that has the same
/// action. Permission/prohibition pairs are read deontically; all other
/// pairs as constraint compatibility. The overall verdict is the Kleene
/// conjunction of the pair verdicts.
inline ConflictReport evaluate_conflict(const Policy& p1, const Policy& p2,
                                        const std::vector<LabeledVerdict>& external = {},
                                        const AxisProfile& profile = AxisProfile::standard()) {
  auto s1 = shape_policy(p1, profile);
  auto s2 = shape_policy(p2, profile);
  ConflictReport report;
  for (const auto& a : s1) {
    for (const auto& b : s2) {
      if (a.action != b.action) continue;
      const bool pa = a.kind == RuleKind::Prohibition;
      const bool pb = b.kind == RuleKind::Prohibition;
      PairRelation rel = PairRelation::Constraint;
      if (pa != pb) {
        const RuleKind other = pa ? b.kind : a.kind;
        if (other != RuleKind::Permission) {
          report.notes.push_back(a.path + " vs " + b.path +
                                 ": obligation/prohibition pairs are not compared");
          continue;
        }
        rel = PairRelation::Deontic;
      }
      report.pairs.push_back(detail::compare_rules(a, b, rel, external, profile));
    }
  }
  if (report.pairs.empty())
    throw no_comparable_rules("no comparable rule pair: the policies share no action");
  for (const auto& p : report.pairs) report.verdict = kleene_and(report.verdict, p.verdict);
  return report;
}

struct SubsumptionPair {
  std::string left_rule;
  std::string right_rule;
  std::string action;
  SubsumptionVerdict verdict = SubsumptionVerdict::Unknown;
  std::optional<BoxSubsumption> box;
  std::vector<std::pair<std::string, SubsumptionVerdict>> operands;  // non-axis operands
  std::vector<std::string> notes;
};

struct SubsumptionReport {
  SubsumptionVerdict verdict = SubsumptionVerdict::Confirmed;
  std::vector<SubsumptionPair> pairs;
  std::vector<std::string> unmatched_left;   // rule paths without a partner
  std::vector<std::string> unmatched_right;
};

namespace detail {

inline std::vector<Constraint> constraints_on(const RuleShape& r, const std::string& operand) {
  std::vector<Constraint> out;
  for (const auto& c : r.other_atoms)
    if (c.value.left_operand == operand) out.push_back(c.value);
  return out;
}

inline bool same_multiset(std::vector<Constraint> a, std::vector<Constraint> b) {
  if (a.size() != b.size()) return false;
  for (const auto& c : a) {
    auto it = std::find(b.begin(), b.end(), c);
    if (it == b.end()) return false;
    b.erase(it);
  }
  return true;
}

}  // namespace detail

/// Does each rule of `narrow` fit inside the same-kind, same-action rule
/// of `wide`? Dimensional axes use box subsumption; a non-axis operand is
/// Confirmed only when both sides carry identical constraints on it.
inline SubsumptionReport evaluate_subsumption(const Policy& narrow, const Policy& wide,
                                              const AxisProfile& profile = AxisProfile::standard()) {
  auto s1 = shape_policy(narrow, profile);
  auto s2 = shape_policy(wide, profile);
  SubsumptionReport report;
  std::set<std::string> matched_right;
  for (const auto& a : s1) {
    bool matched = false;
    for (const auto& b : s2) {
      if (a.action != b.action || a.kind != b.kind) continue;
      matched = true;
      matched_right.insert(b.path);
      SubsumptionPair sp;
      sp.left_rule = a.path;
      sp.right_rule = b.path;
      sp.action = a.action;
      if (a.disjunction || b.disjunction) {
        sp.verdict = SubsumptionVerdict::Unknown;
        sp.notes.push_back("subsumption between or/xone rules is not evaluated");
      } else {
        auto axes = axes_of(std::vector<const RuleShape*>{&a, &b}, profile);
        sp.box = box_subsumes(a.atoms(), b.atoms(), axes);
        sp.verdict = sp.box->verdict;
      }
      std::set<std::string> others = a.other_operands();
      for (const auto& o : b.other_operands()) others.insert(o);
      for (const auto& o : others) {
        auto ca = detail::constraints_on(a, o);
        auto cb = detail::constraints_on(b, o);
        bool opaque = false;
        for (const auto* r : {&a, &b})
          for (const auto& lc : r->opaque)
            for (const auto& br : lc.value.branches)
              for (const auto& c : br)
                if (c.left_operand == o) opaque = true;
        SubsumptionVerdict v = (!opaque && !ca.empty() && detail::same_multiset(ca, cb))
                                   ? SubsumptionVerdict::Confirmed
                                   : SubsumptionVerdict::Unknown;
        sp.operands.emplace_back(o, v);
        sp.verdict = std::min(sp.verdict, v);
      }
      report.pairs.push_back(std::move(sp));
    }
    if (!matched) report.unmatched_left.push_back(a.path);
  }
  for (const auto& b : s2)
    if (!matched_right.count(b.path)) report.unmatched_right.push_back(b.path);
  if (report.pairs.empty())
    throw no_comparable_rules("no comparable rule pair: no rules share kind and action");
  for (const auto& p : report.pairs) report.verdict = std::min(report.verdict, p.verdict);
  return report;
}

struct RuleRequest {
  std::string rule;
  std::string action;
  bool satisfied = true;
  RequestResult atoms;
  std::optional<Connective> connective;
  std::vector<RequestResult> branches;  // or/xone branches, atoms included
  std::vector<std::string> skipped;     // non-axis constraints, not evaluated
};

struct RequestReport {
  bool satisfied = true;
  std::vector<RuleRequest> rules;
};

/// Request satisfaction against every permission and obligation of the
/// policy (optionally only those with `action`). Prohibitions do not
/// grant anything and are left out; non-axis constraints are reported as
/// skipped.
inline RequestReport evaluate_request(const Policy& p, const ExecutionContext& ctx,
                                      const AxisProfile& profile = AxisProfile::standard(),
                                      const std::optional<std::string>& action = std::nullopt) {
  RequestReport report;
  for (const auto& shape : shape_policy(p, profile)) {
    if (shape.kind == RuleKind::Prohibition) continue;
    if (action && expand_iri(*action) != shape.action) continue;
    RuleRequest rr;
    rr.rule = shape.path;
    rr.action = shape.action;

    // Axes: everything the rule constrains plus every supplied value.
    auto axes = axes_of(std::vector<const RuleShape*>{&shape}, profile);
    for (const auto& op : profile.operands()) {
      if (!ctx.values.count(op.iri)) continue;
      if (std::none_of(axes.begin(), axes.end(), [&](const AxisOperand& a) { return a.iri == op.iri; }))
        axes.push_back(op);
    }
    std::sort(axes.begin(), axes.end(), [&](const AxisOperand& x, const AxisOperand& y) {
      return profile.index_of(x.iri) < profile.index_of(y.iri);
    });

    rr.atoms = request_satisfied(ctx, shape.atoms(), axes);
    rr.satisfied = rr.atoms.satisfied;
    if (shape.disjunction) {
      rr.connective = shape.disjunction->connective;
      std::size_t yes = 0;
      for (const auto& b : shape.branches()) {
        rr.branches.push_back(request_satisfied(ctx, b, axes));
        if (rr.branches.back().satisfied) ++yes;
      }
      rr.satisfied = *rr.connective == Connective::Xone ? yes == 1 : yes >= 1;
    }
    for (const auto& c : shape.other_atoms)
      rr.skipped.push_back(c.path + " (" + compact_iri(c.value.left_operand) + ")");
    for (const auto& c : shape.opaque) rr.skipped.push_back(c.path);
    if (!rr.satisfied) report.satisfied = false;
    report.rules.push_back(std::move(rr));
  }
  return report;
}

// ---------------------------------------------------------------------------
// JSON renderings shared by the CLI and the harness.

inline json to_json(const std::optional<Interval>& iv) {
  return iv ? json(iv->to_string()) : json(nullptr);
}

inline json to_json(const BoxVerdict& bv) {
  json axes = json::object();
  for (const auto& d : bv.axes)
    axes[d.operand.compact()] = {{"left", to_json(d.left)},
                                 {"right", to_json(d.right)},
                                 {"intersection", to_json(d.intersection)},
                                 {"verdict", to_string(d.verdict)}};
  return axes;
}

inline json to_json(const LabeledVerdict& lv) {
  json j = {{"operand", compact_iri(lv.operand)},
            {"source", to_string(lv.source)},
            {"verdict", to_string(lv.verdict)}};
  if (!lv.note.empty()) j["note"] = lv.note;
  return j;
}

inline json to_json(const CompositionResult& cr) {
  json rows = json::array();
  for (const auto& row : cr.matrix) {
    json r = json::array();
    for (const auto& cell : row) r.push_back(to_string(cell.verdict));
    rows.push_back(r);
  }
  return {{"verdict", to_string(cr.verdict)}, {"pairs", rows}};
}

inline json to_json(const PairVerdict& pv) {
  json j = {{"left", pv.left_rule},
            {"right", pv.right_rule},
            {"action", compact_iri(pv.action)},
            {"relation", to_string(pv.relation)},
            {"verdict", to_string(pv.verdict)}};
  j["axes"] = pv.box ? to_json(*pv.box) : json::object();
  if (pv.composition) {
    j["connective"] = to_string(*pv.connective);
    j["branches"] = to_json(*pv.composition);
  }
  json ops = json::array();
  for (const auto& o : pv.operands) ops.push_back(to_json(o));
  j["operands"] = ops;
  return j;
}

inline json to_json(const ConflictReport& r) {
  json j;
  j["verdict"] = to_string(r.verdict);
  const PairVerdict* d = r.deciding();
  j["axes"] = d && d->box ? to_json(*d->box) : json::object();
  json ops = json::array();
  if (d)
    for (const auto& o : d->operands) ops.push_back(to_json(o));
  j["operands"] = ops;
  json conflicting = json::array();
  for (const auto* a : r.conflicting_axes()) conflicting.push_back(a->operand.compact());
  j["conflicting_axes"] = conflicting;
  j["explanation"] = r.explanation();
  json pairs = json::array();
  for (const auto& p : r.pairs) pairs.push_back(to_json(p));
  j["pairs"] = pairs;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

inline json to_json(const BoxSubsumption& bs) {
  json axes = json::object();
  for (const auto& d : bs.axes)
    axes[d.operand.compact()] = {{"left", to_json(d.left)},
                                 {"right", to_json(d.right)},
                                 {"verdict", to_string(d.verdict)}};
  return axes;
}

inline json to_json(const SubsumptionReport& r) {
  json j;
  j["verdict"] = to_string(r.verdict);
  j["axes"] = (!r.pairs.empty() && r.pairs.front().box) ? to_json(*r.pairs.front().box) : json::object();
  json pairs = json::array();
  for (const auto& p : r.pairs) {
    json pj = {{"left", p.left_rule},
               {"right", p.right_rule},
               {"action", compact_iri(p.action)},
               {"verdict", to_string(p.verdict)}};
    pj["axes"] = p.box ? to_json(*p.box) : json::object();
    json ops = json::object();
    for (const auto& [o, v] : p.operands) ops[compact_iri(o)] = to_string(v);
    pj["operands"] = ops;
    if (!p.notes.empty()) pj["notes"] = p.notes;
    pairs.push_back(pj);
  }
  j["pairs"] = pairs;
  j["unmatched_left"] = r.unmatched_left;
  j["unmatched_right"] = r.unmatched_right;
  return j;
}

inline json to_json(const RequestResult& rr) {
  json axes = json::object();
  for (const auto& d : rr.axes) {
    json a = {{"interval", to_json(d.interval)},
              {"value", d.value ? json(to_decimal_string(*d.value)) : json(nullptr)},
              {"ok", d.ok}};
    if (!d.note.empty()) a["note"] = d.note;
    axes[d.operand.compact()] = a;
  }
  return {{"satisfied", rr.satisfied ? "Yes" : "No"}, {"axes", axes}};
}

inline json to_json(const RequestReport& r) {
  json j;
  j["satisfied"] = r.satisfied ? "Yes" : "No";
  json rules = json::array();
  json violations = json::array();
  for (const auto& rr : r.rules) {
    json rj = {{"rule", rr.rule},
               {"action", compact_iri(rr.action)},
               {"satisfied", rr.satisfied ? "Yes" : "No"}};
    rj["axes"] = to_json(rr.atoms)["axes"];
    if (rr.connective) {
      rj["connective"] = to_string(*rr.connective);
      json bs = json::array();
      for (const auto& b : rr.branches) bs.push_back(to_json(b));
      rj["branches"] = bs;
    }
    if (!rr.skipped.empty()) rj["skipped"] = rr.skipped;
    for (const auto* v : rr.atoms.violations()) {
      std::string c = v->operand.compact();
      if (std::find(violations.begin(), violations.end(), json(c)) == violations.end())
        violations.push_back(c);
    }
    rules.push_back(rj);
  }
  j["violations"] = violations;
  j["rules"] = rules;
  return j;
}

}  // namespace oax
