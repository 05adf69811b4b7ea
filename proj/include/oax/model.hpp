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

#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "oax/decimal.hpp"
#include "oax/errors.hpp"
#include "oax/iri.hpp"
#include "oax/profile.hpp"

namespace oax {

using json = nlohmann::ordered_json;

/// The twelve ODRL operators.
enum class Operator {
  Eq, Neq, Lt, Lteq, Gt, Gteq,
  HasPart, IsA, IsAllOf, IsAnyOf, IsNoneOf, IsPartOf
};

inline constexpr std::array<std::pair<Operator, std::string_view>, 12> kOperatorNames = {{
    {Operator::Eq, "eq"},           {Operator::Neq, "neq"},
    {Operator::Lt, "lt"},           {Operator::Lteq, "lteq"},
    {Operator::Gt, "gt"},           {Operator::Gteq, "gteq"},
    {Operator::HasPart, "hasPart"}, {Operator::IsA, "isA"},
    {Operator::IsAllOf, "isAllOf"}, {Operator::IsAnyOf, "isAnyOf"},
    {Operator::IsNoneOf, "isNoneOf"}, {Operator::IsPartOf, "isPartOf"},
}};

inline std::string_view to_string(Operator op) {
  for (const auto& [o, name] : kOperatorNames)
    if (o == op) return name;
  return "?";
}

inline std::optional<Operator> operator_from_iri(std::string_view full_iri) {
  if (!full_iri.starts_with(kOdrlNs)) return std::nullopt;
  auto local = full_iri.substr(kOdrlNs.size());
  for (const auto& [o, name] : kOperatorNames)
    if (name == local) return o;
  return std::nullopt;
}

/// eq, lt, lteq, gt, gteq. `neq` denotes two intervals and the set-based
/// operators have no numeric reading, so neither takes part.
inline bool is_dimensional_operator(Operator op) {
  switch (op) {
    case Operator::Eq:
    case Operator::Lt:
    case Operator::Lteq:
    case Operator::Gt:
    case Operator::Gteq:
      return true;
    default:
      return false;
  }
}

inline bool is_set_based_operator(Operator op) {
  return !is_dimensional_operator(op) && op != Operator::Neq;
}

/// Right operand: keeps the lexical form and, when it reads as a decimal,
/// the exact value.
struct RightOperand {
  std::optional<Rational> number;
  std::string text;

  static RightOperand decimal(const Rational& v) { return {v, to_decimal_string(v)}; }
  static RightOperand literal(std::string s) {
    auto n = try_parse_decimal(s);
    return {n, std::move(s)};
  }

  bool is_decimal() const { return number.has_value(); }

  friend bool operator==(const RightOperand& a, const RightOperand& b) {
    if (a.number || b.number) return a.number == b.number;
    return a.text == b.text;
  }
};

struct Constraint {
  std::string left_operand;  // full IRI
  Operator op = Operator::Eq;
  RightOperand right;
  std::optional<std::string> unit;  // full IRI

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

enum class Connective { And, Or, Xone };

inline std::string_view to_string(Connective c) {
  switch (c) {
    case Connective::And: return "and";
    case Connective::Or: return "or";
    case Connective::Xone: return "xone";
  }
  return "?";
}

/// A conjunction of atomic constraints; one operand of an or/xone.
using Branch = std::vector<Constraint>;

struct LogicalConstraint {
  Connective connective = Connective::Or;
  std::vector<Branch> branches;

  friend bool operator==(const LogicalConstraint&, const LogicalConstraint&) = default;
};

using ConstraintItem = std::variant<Constraint, LogicalConstraint>;

enum class RuleKind { Permission, Prohibition, Obligation };

inline std::string_view to_string(RuleKind k) {
  switch (k) {
    case RuleKind::Permission: return "permission";
    case RuleKind::Prohibition: return "prohibition";
    case RuleKind::Obligation: return "obligation";
  }
  return "?";
}

/// After parsing, explicit `and` blocks are flattened into the rule's
/// implicit conjunction, so `constraints` holds atoms and or/xone only.
struct Rule {
  RuleKind kind = RuleKind::Permission;
  std::string action;  // full IRI
  std::vector<ConstraintItem> constraints;

  friend bool operator==(const Rule&, const Rule&) = default;
};

struct Policy {
  std::string uid;
  std::vector<Rule> rules;
  std::optional<std::string> profile;

  friend bool operator==(const Policy&, const Policy&) = default;
};

/// Observed per-axis values, keyed by full axis-operand IRI.
struct ExecutionContext {
  std::map<std::string, Rational> values;

  friend bool operator==(const ExecutionContext&, const ExecutionContext&) = default;
};

namespace detail {

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

// DOM builder that keeps the lexical form of non-integer numbers (as a
// string) so decimals like 0.1 never pass through a double.
class ExactDomBuilder : public nlohmann::detail::json_sax_dom_parser<nlohmann::json> {
 public:
  using Base = nlohmann::detail::json_sax_dom_parser<nlohmann::json>;
  ExactDomBuilder(nlohmann::json& root, std::string_view text)
      : Base(root, false), text_(text) {}

  bool number_float(number_float_t, const string_t& raw) {
    string_t copy = raw;
    return Base::string(copy);
  }

  template <class Exception>
  bool parse_error(std::size_t position, const std::string&, const Exception& ex) {
    auto [line, column] = line_column(text_, position > 0 ? position - 1 : 0);
    std::string msg = ex.what();
    if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw oax::parse_error(msg, line, column);
  }

 private:
  std::string_view text_;
};

}  // namespace detail

/// Parses JSON without ever converting non-integer numbers to binary
/// floating point. Such numbers come back as JSON strings holding their
/// lexical form.
inline nlohmann::json parse_json_exact(std::string_view text) {
  nlohmann::json root;
  detail::ExactDomBuilder builder(root, text);
  nlohmann::json::sax_parse(text.begin(), text.end(), &builder);
  return root;
}

namespace detail {

inline std::string iri_value(const nlohmann::json& v, std::string_view what) {
  if (v.is_string()) return expand_iri(v.get<std::string>());
  if (v.is_object() && v.contains("@id") && v["@id"].is_string())
    return expand_iri(v["@id"].get<std::string>());
  throw schema_error(std::string(what) + " must be an IRI string");
}

inline RightOperand right_operand_from(const nlohmann::json& v) {
  if (v.is_number_integer()) {
    return RightOperand::decimal(v.is_number_unsigned() ? Rational(Integer(v.get<std::uint64_t>()))
                                                        : Rational(Integer(v.get<std::int64_t>())));
  }
  if (v.is_string()) return RightOperand::literal(v.get<std::string>());
  if (v.is_object() && v.contains("@value")) return right_operand_from(v["@value"]);
  if (v.is_object() && v.contains("@id")) return RightOperand::literal(v["@id"].get<std::string>());
  if (v.is_boolean()) return RightOperand::literal(v.get<bool>() ? "true" : "false");
  if (v.is_array() || v.is_object()) return RightOperand{std::nullopt, v.dump()};
  throw schema_error("unsupported rightOperand value " + v.dump());
}

inline bool is_connective_key(std::string_view k) {
  return k == "and" || k == "or" || k == "xone";
}

inline Constraint atomic_from(const nlohmann::json& obj) {
  for (const auto& [key, _] : obj.items()) {
    if (key == "leftOperand" || key == "operator" || key == "rightOperand" || key == "unit" ||
        key == "uid" || key == "@type" || key == "dataType")
      continue;
    if (obj[key].is_array())
      throw schema_error("unknown connective key '" + key + "'");
    throw schema_error("unknown key '" + key + "' in constraint");
  }
  for (const char* k : {"leftOperand", "operator", "rightOperand"})
    if (!obj.contains(k)) throw schema_error(std::string("constraint is missing '") + k + "'");
  Constraint c;
  c.left_operand = iri_value(obj["leftOperand"], "leftOperand");
  std::string op_iri = iri_value(obj["operator"], "operator");
  auto op = operator_from_iri(op_iri);
  if (!op) throw schema_error("unknown operator '" + compact_iri(op_iri) + "'");
  c.op = *op;
  c.right = right_operand_from(obj["rightOperand"]);
  if (obj.contains("unit")) c.unit = iri_value(obj["unit"], "unit");
  return c;
}

inline bool is_logical_object(const nlohmann::json& obj) {
  if (!obj.is_object()) return false;
  if (obj.contains("leftOperand")) return false;
  for (const auto& [key, value] : obj.items())
    if (is_connective_key(key) || value.is_array()) return true;
  return false;
}

inline std::pair<Connective, const nlohmann::json*> connective_of(const nlohmann::json& obj) {
  std::optional<Connective> found;
  const nlohmann::json* members = nullptr;
  for (const auto& [key, value] : obj.items()) {
    if (key == "uid" || key == "@type") continue;
    Connective c;
    if (key == "and") c = Connective::And;
    else if (key == "or") c = Connective::Or;
    else if (key == "xone") c = Connective::Xone;
    else throw schema_error("unknown connective key '" + key + "'");
    if (found) throw schema_error("logical constraint has more than one connective");
    if (!value.is_array()) throw schema_error("'" + key + "' must be an array of constraints");
    found = c;
    members = &value;
  }
  if (!found) throw schema_error("logical constraint without a connective");
  return {*found, members};
}

// Flattens nested `and` blocks into `out`.
inline void collect_conjunction(const nlohmann::json& item, Branch& out) {
  if (!item.is_object()) throw schema_error("constraint must be an object");
  if (!is_logical_object(item)) {
    out.push_back(atomic_from(item));
    return;
  }
  auto [conn, members] = connective_of(item);
  if (conn != Connective::And)
    throw schema_error("nested '" + std::string(to_string(conn)) +
                       "' inside an or/xone branch is not supported");
  if (members->empty()) throw schema_error("'and' needs at least one constraint");
  for (const auto& m : *members) collect_conjunction(m, out);
}

inline void collect_rule_constraints(const nlohmann::json& item, std::vector<ConstraintItem>& out) {
  if (!item.is_object()) throw schema_error("constraint must be an object");
  if (!is_logical_object(item)) {
    out.emplace_back(atomic_from(item));
    return;
  }
  auto [conn, members] = connective_of(item);
  if (conn == Connective::And) {
    if (members->empty()) throw schema_error("'and' needs at least one constraint");
    for (const auto& m : *members) collect_rule_constraints(m, out);
    return;
  }
  if (members->size() < 2)
    throw schema_error("'" + std::string(to_string(conn)) + "' needs at least two constraints");
  LogicalConstraint lc;
  lc.connective = conn;
  for (const auto& m : *members) {
    Branch b;
    collect_conjunction(m, b);
    lc.branches.push_back(std::move(b));
  }
  out.emplace_back(std::move(lc));
}

}  // namespace detail

/// Parses a policy document in the supported JSON subset (see
/// docs/policy-format.md).
inline Policy parse_policy(std::string_view text) {
  nlohmann::json doc = parse_json_exact(text);
  if (!doc.is_object()) throw schema_error("policy must be a JSON object");
  Policy p;
  for (const auto& [key, value] : doc.items()) {
    if (key == "uid") {
      if (!value.is_string()) throw schema_error("'uid' must be a string");
      p.uid = value.get<std::string>();
    } else if (key == "profile") {
      p.profile = detail::iri_value(value, "profile");
    } else if (key == "permission" || key == "prohibition" || key == "obligation") {
      // handled below to keep kind order stable
    } else if (key == "@context" || key == "@type" || key == "target" || key == "assigner" ||
               key == "assignee") {
      // tolerated, not interpreted
    } else if (detail::is_connective_key(key)) {
      throw schema_error("connective '" + key + "' is only allowed inside a constraint");
    } else {
      throw schema_error("unknown policy key '" + key + "'");
    }
  }
  if (p.uid.empty()) throw schema_error("policy 'uid' is required and must be non-empty");

  const std::pair<const char*, RuleKind> kinds[] = {{"permission", RuleKind::Permission},
                                                    {"prohibition", RuleKind::Prohibition},
                                                    {"obligation", RuleKind::Obligation}};
  for (const auto& [key, kind] : kinds) {
    if (!doc.contains(key)) continue;
    const auto& arr = doc[key];
    if (!arr.is_array()) throw schema_error(std::string("'") + key + "' must be an array");
    for (const auto& r : arr) {
      if (!r.is_object()) throw schema_error(std::string(key) + " entries must be objects");
      Rule rule;
      rule.kind = kind;
      for (const auto& [rk, rv] : r.items()) {
        if (rk == "action" || rk == "constraint" || rk == "target" || rk == "assigner" ||
            rk == "assignee" || rk == "uid" || rk == "@type")
          continue;
        throw schema_error("unknown rule key '" + rk + "'");
      }
      if (!r.contains("action")) throw schema_error(std::string(key) + " is missing 'action'");
      rule.action = detail::iri_value(r["action"], "action");
      if (r.contains("constraint")) {
        const auto& cs = r["constraint"];
        if (cs.is_object()) {
          detail::collect_rule_constraints(cs, rule.constraints);
        } else if (cs.is_array()) {
          for (const auto& c : cs) detail::collect_rule_constraints(c, rule.constraints);
        } else {
          throw schema_error("'constraint' must be an object or an array");
        }
      }
      p.rules.push_back(std::move(rule));
    }
  }
  return p;
}

namespace detail {

inline json right_operand_to_json(const RightOperand& r) {
  if (r.number && is_integral(*r.number)) {
    const Integer& n = boost::multiprecision::numerator(*r.number);
    if (n >= std::numeric_limits<std::int64_t>::min() &&
        n <= std::numeric_limits<std::int64_t>::max())
      return json(n.convert_to<std::int64_t>());
  }
  if (r.number) return json(to_decimal_string(*r.number));
  return json(r.text);
}

inline json constraint_to_json(const Constraint& c) {
  json j;
  j["leftOperand"] = compact_iri(c.left_operand);
  j["operator"] = "odrl:" + std::string(to_string(c.op));
  j["rightOperand"] = right_operand_to_json(c.right);
  if (c.unit) j["unit"] = compact_iri(*c.unit);
  return j;
}

}  // namespace detail

/// Serialises to the same JSON subset `parse_policy` reads.
inline json policy_to_json(const Policy& p) {
  json j;
  j["uid"] = p.uid;
  if (p.profile) j["profile"] = compact_iri(*p.profile);
  for (RuleKind kind : {RuleKind::Permission, RuleKind::Prohibition, RuleKind::Obligation}) {
    json arr = json::array();
    for (const auto& r : p.rules) {
      if (r.kind != kind) continue;
      json rj;
      rj["action"] = compact_iri(r.action);
      json cs = json::array();
      for (const auto& item : r.constraints) {
        if (const auto* c = std::get_if<Constraint>(&item)) {
          cs.push_back(detail::constraint_to_json(*c));
          continue;
        }
        const auto& lc = std::get<LogicalConstraint>(item);
        json members = json::array();
        for (const auto& b : lc.branches) {
          if (b.size() == 1) {
            members.push_back(detail::constraint_to_json(b.front()));
          } else {
            json conj = json::array();
            for (const auto& c : b) conj.push_back(detail::constraint_to_json(c));
            members.push_back(json{{"and", conj}});
          }
        }
        cs.push_back(json{{std::string(to_string(lc.connective)), members}});
      }
      if (!cs.empty()) rj["constraint"] = cs;
      arr.push_back(rj);
    }
    if (!arr.empty() || (kind == RuleKind::Permission && p.rules.empty()))
      j[std::string(to_string(kind))] = arr;
  }
  return j;
}

inline std::string serialize_policy(const Policy& p) { return policy_to_json(p).dump(2); }

namespace detail {

inline void add_context_value(ExecutionContext& ctx, const AxisProfile& profile,
                              std::string_view key, std::string_view value) {
  const AxisOperand* op = profile.resolve(key);
  if (!op) throw schema_error("unknown axis operand '" + std::string(key) + "' in context");
  auto v = try_parse_decimal(value);
  if (!v)
    throw schema_error("context value for '" + std::string(key) + "' is not numeric: '" +
                       std::string(value) + "'");
  if (!ctx.values.emplace(op->iri, *v).second)
    throw schema_error("duplicate context key '" + std::string(key) + "' (" + op->compact() + ")");
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Reads an execution context either as a JSON object
/// (`{"oax:absoluteSizeWidth": 1200}`) or as comma-separated pairs
/// (`width=1200,height=400`). Keys resolve through the profile, so short
/// aliases and local names are accepted.
inline ExecutionContext parse_context(std::string_view text,
                                      const AxisProfile& profile = AxisProfile::standard()) {
  ExecutionContext ctx;
  std::string_view body = detail::trim(text);
  if (body.empty()) return ctx;
  if (body.front() == '{') {
    nlohmann::json doc = parse_json_exact(body);
    for (const auto& [key, value] : doc.items()) {
      std::string lexical;
      if (value.is_number_integer()) lexical = value.dump();
      else if (value.is_string()) lexical = value.get<std::string>();
      else throw schema_error("context value for '" + key + "' is not numeric: " + value.dump());
      detail::add_context_value(ctx, profile, key, lexical);
    }
    return ctx;
  }
  while (!body.empty()) {
    auto comma = body.find(',');
    std::string_view pair = detail::trim(body.substr(0, comma));
    body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
    if (pair.empty()) continue;
    auto eq = pair.find('=');
    if (eq == std::string_view::npos)
      throw schema_error("context entry '" + std::string(pair) + "' is not of the form axis=value");
    detail::add_context_value(ctx, profile, detail::trim(pair.substr(0, eq)),
                              detail::trim(pair.substr(eq + 1)));
  }
  return ctx;
}

}  // namespace oax
