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
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "oax/denotation.hpp"
#include "oax/evaluate.hpp"
#include "oax/model.hpp"
#include "oax/profile.hpp"
#include "oax/verdict.hpp"

namespace oax {

enum class Severity { Error, Warning, Info };

inline std::string_view to_string(Severity s) {
  switch (s) {
    case Severity::Error: return "error";
    case Severity::Warning: return "warning";
    case Severity::Info: return "info";
  }
  return "?";
}

enum class LintKind {
  Ambiguity,
  SelfContradiction,
  Redundancy,
  IncompleteCoverage,
  RefinementViolation,
  BoundViolation,
  UnsupportedOperator,
};

inline std::string_view to_string(LintKind k) {
  switch (k) {
    case LintKind::Ambiguity: return "Ambiguity";
    case LintKind::SelfContradiction: return "SelfContradiction";
    case LintKind::Redundancy: return "Redundancy";
    case LintKind::IncompleteCoverage: return "IncompleteCoverage";
    case LintKind::RefinementViolation: return "RefinementViolation";
    case LintKind::BoundViolation: return "BoundViolation";
    case LintKind::UnsupportedOperator: return "UnsupportedOperator";
  }
  return "?";
}

struct LintFinding {
  Severity severity = Severity::Warning;
  LintKind kind = LintKind::Ambiguity;
  std::string location;  // e.g. permission[0].constraint[1]
  std::string message;
  std::optional<int> interpretations;
};

inline void sort_findings(std::vector<LintFinding>& f) {
  std::stable_sort(f.begin(), f.end(), [](const LintFinding& a, const LintFinding& b) {
    return std::tie(a.location, a.kind) < std::tie(b.location, b.kind);
  });
}

/// An atomic constraint with its path, wherever it sits in the rule.
struct LocatedConstraint {
  const Constraint* constraint;
  std::string path;
  std::string rule;
  std::optional<std::size_t> item;    // index of the enclosing or/xone, if any
  std::optional<std::size_t> branch;  // branch inside that or/xone
};

inline std::vector<LocatedConstraint> walk_constraints(const Policy& p) {
  std::vector<LocatedConstraint> out;
  auto paths = rule_paths(p);
  for (std::size_t r = 0; r < p.rules.size(); ++r) {
    const auto& rule = p.rules[r];
    for (std::size_t i = 0; i < rule.constraints.size(); ++i) {
      std::string base = paths[r] + ".constraint[" + std::to_string(i) + "]";
      if (const auto* c = std::get_if<Constraint>(&rule.constraints[i])) {
        out.push_back({c, base, paths[r], std::nullopt, std::nullopt});
        continue;
      }
      const auto& lc = std::get<LogicalConstraint>(rule.constraints[i]);
      for (std::size_t b = 0; b < lc.branches.size(); ++b) {
        std::string bpath = base + "." + std::string(to_string(lc.connective)) + "[" + std::to_string(b) + "]";
        const auto& br = lc.branches[b];
        for (std::size_t k = 0; k < br.size(); ++k)
          out.push_back({&br[k], br.size() == 1 ? bpath : bpath + ".and[" + std::to_string(k) + "]",
                         paths[r], i, b});
      }
    }
  }
  return out;
}

/// One Warning per constraint on a base dimensional operand: n axis
/// readings plus max and min.
inline std::vector<LintFinding> lint_ambiguity(const Policy& p,
                                               const AxisProfile& profile = AxisProfile::standard()) {
  std::vector<LintFinding> out;
  for (const auto& lc : walk_constraints(p)) {
    const std::string& iri = lc.constraint->left_operand;
    if (!is_dimensional_base(iri)) continue;
    auto axes = profile.decompose(iri);
    const int n = static_cast<int>(axes.size());
    std::string readings;
    std::string replacements;
    for (const auto& a : axes) {
      readings += std::string(to_string(a.axis)) + ", ";
      replacements += (replacements.empty() ? "" : ", ") + a.compact();
    }
    LintFinding f;
    f.severity = Severity::Warning;
    f.kind = LintKind::Ambiguity;
    f.location = lc.path;
    f.interpretations = n + 2;
    f.message = compact_iri(iri) + " admits " + std::to_string(n + 2) + " interpretations (" +
                readings + "max, min); constrain the axes explicitly with " + replacements;
    out.push_back(std::move(f));
  }
  sort_findings(out);
  return out;
}

namespace detail {

/// Axis constraints of one conjunction, with their paths. Constraints the
/// engine cannot lift are skipped here; lint_operators reports them.
struct Conjunction {
  std::string path;  // where a finding about the conjunction as a whole goes
  std::vector<std::pair<AxisConstraint, std::string>> atoms;
  std::size_t own_from = 0;  // earlier atoms are inherited from the rule
};

inline std::vector<Conjunction> conjunctions(const Policy& p, const AxisProfile& profile) {
  std::vector<Conjunction> out;
  auto walked = walk_constraints(p);
  auto paths = rule_paths(p);
  for (std::size_t r = 0; r < p.rules.size(); ++r) {
    Conjunction top{paths[r], {}};
    std::map<std::pair<std::size_t, std::size_t>, Conjunction> branches;
    for (const auto& lc : walked) {
      if (lc.rule != paths[r]) continue;
      AxisConstraint ac;
      try {
        if (!to_axis_constraint(*lc.constraint, profile, ac)) continue;
      } catch (const unsupported_operator&) {
        continue;
      }
      if (!lc.item) {
        top.atoms.emplace_back(ac, lc.path);
      } else {
        auto key = std::make_pair(*lc.item, *lc.branch);
        auto& c = branches[key];
        if (c.path.empty()) {
          const auto& lcon = std::get<LogicalConstraint>(p.rules[r].constraints[*lc.item]);
          c.path = paths[r] + ".constraint[" + std::to_string(*lc.item) + "]." +
                   std::string(to_string(lcon.connective)) + "[" + std::to_string(*lc.branch) + "]";
        }
        c.atoms.emplace_back(ac, lc.path);
      }
    }
    out.push_back(top);
    for (auto& [key, c] : branches) {
      // Each branch is read together with the rule's own atoms.
      Conjunction joined{c.path, top.atoms, top.atoms.size()};
      joined.atoms.insert(joined.atoms.end(), c.atoms.begin(), c.atoms.end());
      out.push_back(std::move(joined));
    }
  }
  return out;
}

}  // namespace detail

/// Error for each conjunction whose box has an empty axis.
inline std::vector<LintFinding> lint_self_contradiction(
    const Policy& p, const AxisProfile& profile = AxisProfile::standard()) {
  std::vector<LintFinding> out;
  for (const auto& conj : detail::conjunctions(p, profile)) {
    std::vector<AxisOperand> axes;
    for (const auto& [ac, path] : conj.atoms)
      if (std::none_of(axes.begin(), axes.end(), [&](const AxisOperand& a) { return a.iri == ac.operand.iri; }))
        axes.push_back(ac.operand);
    for (const auto& axis : axes) {
      Interval acc = axis.domain;
      std::string terms;
      std::string sources;
      for (const auto& [ac, path] : conj.atoms) {
        if (ac.operand.iri != axis.iri) continue;
        Interval d = denote(ac);
        acc = intersect(acc, d);
        terms += (terms.empty() ? "" : " ∩ ") + d.to_string();
        sources += (sources.empty() ? "" : ", ") + path + " (" + ac.to_string() + ")";
      }
      if (!acc.is_empty()) continue;
      LintFinding f;
      f.severity = Severity::Error;
      f.kind = LintKind::SelfContradiction;
      f.location = conj.path;
      f.message = std::string(to_string(axis.axis)) + " (" + axis.compact() + "): " + terms +
                  " = ∅; no value satisfies " + sources;
      out.push_back(std::move(f));
    }
  }
  sort_findings(out);
  return out;
}

/// Warning for each constraint whose interval contains the intersection
/// of its remaining same-axis siblings, so dropping it leaves the box as
/// it is. Siblings already flagged are not counted, which keeps one of
/// two identical constraints.
inline std::vector<LintFinding> lint_redundancy(const Policy& p,
                                                const AxisProfile& profile = AxisProfile::standard()) {
  std::vector<LintFinding> out;
  for (const auto& conj : detail::conjunctions(p, profile)) {
    const auto& atoms = conj.atoms;
    std::vector<bool> flagged(atoms.size(), false);
    for (std::size_t i = conj.own_from; i < atoms.size(); ++i) {
      const auto& axis = atoms[i].first.operand;
      Interval all = axis.domain;
      for (const auto& [ac, path] : atoms)
        if (ac.operand.iri == axis.iri) all = intersect(all, denote(ac));
      if (all.is_empty()) continue;  // self-contradiction covers it
      Interval others = axis.domain;
      bool any = false;
      for (std::size_t j = 0; j < atoms.size(); ++j) {
        if (j == i || flagged[j] || atoms[j].first.operand.iri != axis.iri) continue;
        others = intersect(others, denote(atoms[j].first));
        any = true;
      }
      if (!any || !is_subset(others, denote(atoms[i].first))) continue;
      flagged[i] = true;
      LintFinding f;
      f.severity = Severity::Warning;
      f.kind = LintKind::Redundancy;
      f.location = atoms[i].second;
      f.message = atoms[i].first.to_string() + " is redundant: its siblings on " +
                  std::string(to_string(axis.axis)) + " already give " + others.to_string();
      out.push_back(std::move(f));
    }
  }
  sort_findings(out);
  return out;
}

struct Coverage {
  std::vector<AxisOperand> covered;
  std::vector<AxisOperand> missing;
  bool complete = false;
};

inline Coverage coverage(const ConstraintSet& c, std::string_view base,
                         const AxisProfile& profile = AxisProfile::standard()) {
  Coverage cov;
  for (const auto& axis : profile.decompose(base)) {
    bool hit = std::any_of(c.begin(), c.end(), [&](const AxisConstraint& ac) { return ac.operand.iri == axis.iri; });
    (hit ? cov.covered : cov.missing).push_back(axis);
  }
  cov.complete = cov.missing.empty();
  return cov;
}

/// Info for each conjunction that targets some but not all axes of a
/// dimensional base.
inline std::vector<LintFinding> lint_coverage(const Policy& p,
                                              const AxisProfile& profile = AxisProfile::standard()) {
  std::vector<LintFinding> out;
  for (const auto& conj : detail::conjunctions(p, profile)) {
    ConstraintSet set;
    for (const auto& [ac, path] : conj.atoms) set.push_back(ac);
    for (const auto& base : dimensional_bases()) {
      Coverage cov = coverage(set, base, profile);
      if (cov.covered.empty() || cov.complete) continue;
      std::string missing;
      for (const auto& m : cov.missing) missing += (missing.empty() ? "" : ", ") + m.compact();
      LintFinding f;
      f.severity = Severity::Info;
      f.kind = LintKind::IncompleteCoverage;
      f.location = conj.path;
      f.message = "not axis-complete for " + compact_iri(base) + ": " + missing + " unconstrained";
      out.push_back(std::move(f));
    }
  }
  sort_findings(out);
  return out;
}

/// Error for each axis right operand outside the axis domain, and for
/// constraints on axis operands that interval evaluation cannot handle.
inline std::vector<LintFinding> lint_operators(const Policy& p,
                                               const AxisProfile& profile = AxisProfile::standard()) {
  std::vector<LintFinding> out;
  for (const auto& lc : walk_constraints(p)) {
    AxisConstraint ac;
    try {
      if (!to_axis_constraint(*lc.constraint, profile, ac)) continue;
    } catch (const unsupported_operator& e) {
      out.push_back({Severity::Error, LintKind::UnsupportedOperator, lc.path, e.what(), std::nullopt});
      continue;
    }
    auto report = validate_right_operand(ac.operand, ac.value);
    if (!report.ok)
      out.push_back({Severity::Error, LintKind::BoundViolation, lc.path, report.message, std::nullopt});
  }
  sort_findings(out);
  return out;
}

inline std::vector<LintFinding> lint(const Policy& p, const AxisProfile& profile = AxisProfile::standard()) {
  std::vector<LintFinding> out;
  for (auto&& part : {lint_ambiguity(p, profile), lint_self_contradiction(p, profile),
                      lint_redundancy(p, profile), lint_coverage(p, profile), lint_operators(p, profile)})
    out.insert(out.end(), part.begin(), part.end());
  sort_findings(out);
  return out;
}

struct RefinementResult {
  SubsumptionReport report;
  std::vector<LintFinding> findings;
};

/// Downstream refines upstream when every matched downstream rule fits
/// inside its upstream partner.
inline RefinementResult check_refinement(const Policy& upstream, const Policy& downstream,
                                         const AxisProfile& profile = AxisProfile::standard()) {
  RefinementResult r{evaluate_subsumption(downstream, upstream, profile), {}};
  for (const auto& pair : r.report.pairs) {
    if (!pair.box) continue;
    for (const auto& a : pair.box->axes) {
      if (a.verdict == SubsumptionVerdict::Confirmed) continue;
      LintFinding f;
      f.kind = LintKind::RefinementViolation;
      f.location = "downstream." + pair.left_rule;
      if (a.verdict == SubsumptionVerdict::Refuted) {
        f.severity = Severity::Error;
        f.message = a.operand.compact() + ": downstream " + (a.left ? a.left->to_string() : "unconstrained") +
                    " is not within upstream " + (a.right ? a.right->to_string() : "unconstrained");
      } else {
        f.severity = Severity::Warning;
        f.message = a.operand.compact() + ": " +
                    (a.left ? "upstream leaves the axis unconstrained" : "downstream leaves the axis unconstrained") +
                    "; refinement cannot be confirmed";
      }
      r.findings.push_back(std::move(f));
    }
  }
  for (const auto& u : r.report.unmatched_left)
    r.findings.push_back({Severity::Info, LintKind::RefinementViolation, "downstream." + u,
                          "no upstream rule with the same kind and action", std::nullopt});
  for (const auto& u : r.report.unmatched_right)
    r.findings.push_back({Severity::Info, LintKind::RefinementViolation, "upstream." + u,
                          "no downstream rule with the same kind and action", std::nullopt});
  sort_findings(r.findings);
  return r;
}

inline json to_json(const LintFinding& f) {
  json j = {{"severity", to_string(f.severity)},
            {"kind", to_string(f.kind)},
            {"location", f.location},
            {"message", f.message}};
  if (f.interpretations) j["interpretations"] = *f.interpretations;
  return j;
}

inline json to_json(const std::vector<LintFinding>& findings) {
  json arr = json::array();
  for (const auto& f : findings) arr.push_back(to_json(f));
  return arr;
}

inline std::string to_text(const std::vector<LintFinding>& findings) {
  std::string s;
  for (const auto& f : findings)
    s += std::string(to_string(f.severity)) + " " + std::string(to_string(f.kind)) + " at " +
         f.location + ": " + f.message + "\n";
  return s;
}

}  // namespace oax
