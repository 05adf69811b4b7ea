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
#include <string_view>
#include <vector>

#include "oax/errors.hpp"
#include "oax/model.hpp"
#include "oax/verdict.hpp"

namespace oax {

/// Branches of an or/xone, each an implicit-And box over `axes`.
struct BranchSet {
  std::vector<AxisOperand> axes;
  std::vector<ConstraintSet> branches;
};

struct CompositionResult {
  Verdict3 verdict = Verdict3::Unknown;
  /// matrix[i][j]: box verdict of branch i of the first set against
  /// branch j of the second.
  std::vector<std::vector<BoxVerdict>> matrix;

  std::size_t count(Verdict3 v) const {
    std::size_t n = 0;
    for (const auto& row : matrix)
      for (const auto& cell : row)
        if (cell.verdict == v) ++n;
    return n;
  }
  std::size_t pairs() const {
    std::size_t n = 0;
    for (const auto& row : matrix) n += row.size();
    return n;
  }
};

namespace detail {

inline void require_shared_axes(const BranchSet& b1, const BranchSet& b2) {
  if (b1.branches.empty() || b2.branches.empty())
    throw composition_error("branch set without branches");
  bool same = b1.axes.size() == b2.axes.size();
  for (std::size_t i = 0; same && i < b1.axes.size(); ++i)
    same = b1.axes[i].iri == b2.axes[i].iri;
  if (!same) throw composition_error("branch sets range over different axis sets");
}

inline CompositionResult pair_matrix(const BranchSet& b1, const BranchSet& b2) {
  require_shared_axes(b1, b2);
  CompositionResult out;
  std::vector<BoxDenotation> right;
  right.reserve(b2.branches.size());
  for (const auto& c : b2.branches) right.push_back(box_denote(c, b2.axes));
  for (const auto& c1 : b1.branches) {
    BoxDenotation left = box_denote(c1, b1.axes);
    std::vector<BoxVerdict> row;
    row.reserve(right.size());
    for (const auto& r : right) row.push_back(box_verdict(left, r));
    out.matrix.push_back(std::move(row));
  }
  return out;
}

inline Verdict3 xone_from_counts(std::size_t compatible, std::size_t conflict, std::size_t total) {
  if (conflict == total) return Verdict3::Conflict;
  if (compatible == 1 && conflict + 1 == total) return Verdict3::Compatible;
  return Verdict3::Unknown;
}

}  // namespace detail

/// Cross-policy disjunction: some branch pair Compatible gives
/// Compatible, every pair Conflict gives Conflict, anything else Unknown.
inline CompositionResult or_verdict(const BranchSet& b1, const BranchSet& b2) {
  CompositionResult out = detail::pair_matrix(b1, b2);
  out.verdict = Verdict3::Conflict;
  for (const auto& row : out.matrix)
    for (const auto& cell : row) out.verdict = kleene_or(out.verdict, cell.verdict);
  return out;
}

/// Cross-policy exclusive disjunction, read literally over the pair
/// matrix: exactly one Compatible pair with every other pair Conflict is
/// Compatible; all Conflict is Conflict; otherwise Unknown (two
/// overlapping pairs included).
inline CompositionResult xone_verdict(const BranchSet& b1, const BranchSet& b2) {
  if (b1.branches.size() < 2 || b2.branches.size() < 2)
    throw composition_error("xone needs at least two branches on each side");
  CompositionResult out = detail::pair_matrix(b1, b2);
  out.verdict = detail::xone_from_counts(out.count(Verdict3::Compatible),
                                         out.count(Verdict3::Conflict), out.pairs());
  return out;
}

/// Same matrix rule as xone_verdict, for a policy whose xone is compared
/// against a plain box (a single-branch set on one side).
inline CompositionResult xone_against(const BranchSet& b1, const BranchSet& b2) {
  CompositionResult out = detail::pair_matrix(b1, b2);
  if (out.pairs() < 2) throw composition_error("xone needs at least two branch pairs");
  out.verdict = detail::xone_from_counts(out.count(Verdict3::Compatible),
                                         out.count(Verdict3::Conflict), out.pairs());
  return out;
}

enum class VerdictSource { Dimensional, ConceptValued, Scalar };

inline std::string_view to_string(VerdictSource s) {
  switch (s) {
    case VerdictSource::Dimensional: return "dimensional";
    case VerdictSource::ConceptValued: return "concept";
    case VerdictSource::Scalar: return "scalar";
  }
  return "?";
}

/// Per-operand verdict entering cross-domain aggregation. Concept-valued
/// and scalar labels are supplied from outside.
struct LabeledVerdict {
  std::string operand;
  VerdictSource source = VerdictSource::Dimensional;
  Verdict3 verdict = Verdict3::Unknown;
  std::string note;
};

inline Verdict3 cross_domain_verdict(const std::vector<LabeledVerdict>& vs) {
  if (vs.empty()) throw empty_input("cross-domain verdict over no operands");
  Verdict3 out = Verdict3::Compatible;
  for (const auto& v : vs) out = kleene_and(out, v.verdict);
  return out;
}

/// Reads the side file of externally supplied verdicts: a JSON array (or
/// `{"verdicts": [...]}`) of `{"operand", "source", "verdict", "note"?}`.
inline std::vector<LabeledVerdict> parse_labeled_verdicts(std::string_view text) {
  nlohmann::json doc = parse_json_exact(text);
  const nlohmann::json* arr = &doc;
  if (doc.is_object() && doc.contains("verdicts")) arr = &doc["verdicts"];
  if (!arr->is_array()) throw schema_error("verdict file must be an array of verdict entries");
  std::vector<LabeledVerdict> out;
  for (const auto& e : *arr) {
    if (!e.is_object() || !e.contains("operand") || !e.contains("verdict"))
      throw schema_error("verdict entry needs 'operand' and 'verdict'");
    LabeledVerdict lv;
    lv.operand = expand_iri(e["operand"].get<std::string>());
    auto v = verdict3_from_string(e["verdict"].get<std::string>());
    if (!v) throw schema_error("unknown verdict '" + e["verdict"].get<std::string>() + "'");
    lv.verdict = *v;
    std::string source = e.value("source", std::string("concept"));
    if (source == "concept" || source == "concept-valued") lv.source = VerdictSource::ConceptValued;
    else if (source == "scalar") lv.source = VerdictSource::Scalar;
    else if (source == "dimensional") lv.source = VerdictSource::Dimensional;
    else throw schema_error("unknown verdict source '" + source + "'");
    lv.note = e.value("note", std::string());
    out.push_back(std::move(lv));
  }
  return out;
}

}  // namespace oax
