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
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "oax/composition.hpp"
#include "oax/denotation.hpp"
#include "oax/errors.hpp"
#include "oax/verdict.hpp"

namespace oax {

// ---------------------------------------------------------------------------
// Formula AST

struct Term {
  enum class Kind { Var, Const, Fn };
  Kind kind = Kind::Var;
  std::string name;
  Rational value{0};                  // Const
  Density sort = Density::Dense;      // Var
  std::vector<Term> args;             // Fn

  static Term var(std::string n, Density s = Density::Dense) { return {Kind::Var, std::move(n), Rational(0), s, {}}; }
  static Term constant(const Rational& v);
  static Term fn(std::string n, std::vector<Term> a) { return {Kind::Fn, std::move(n), Rational(0), Density::Dense, std::move(a)}; }
};

/// `n600`, `n12p5`, `nm90`: m for the minus sign, p for the decimal point.
inline std::string constant_name(const Rational& v) {
  std::string s = "n";
  for (char c : to_decimal_string(v)) {
    if (c == '-') s += 'm';
    else if (c == '.') s += 'p';
    else if (c == '/') s += 'd';
    else s += c;
  }
  return s;
}

inline Term Term::constant(const Rational& v) { return {Kind::Const, constant_name(v), v, Density::Dense, {}}; }

enum class Cmp { Lt, Leq, Eq, Geq, Gt };

struct Formula {
  enum class Kind { True, False, Compare, Pred, Not, And, Or, Implies, Iff, Exists, Forall };
  Kind kind = Kind::True;
  Cmp cmp = Cmp::Eq;
  std::string pred;
  std::vector<Term> terms;  // Compare / Pred arguments; bound variables for quantifiers
  std::vector<Formula> kids;
};

namespace fm {

inline Formula top() { return {}; }
inline Formula bottom() { return {Formula::Kind::False, Cmp::Eq, "", {}, {}}; }
inline Formula compare(Cmp c, Term a, Term b) { return {Formula::Kind::Compare, c, "", {std::move(a), std::move(b)}, {}}; }
inline Formula pred(std::string p, std::vector<Term> args) { return {Formula::Kind::Pred, Cmp::Eq, std::move(p), std::move(args), {}}; }
inline Formula neg(Formula f) { return {Formula::Kind::Not, Cmp::Eq, "", {}, {std::move(f)}}; }

inline Formula nary(Formula::Kind k, std::vector<Formula> fs) {
  const auto unit = k == Formula::Kind::And ? Formula::Kind::True : Formula::Kind::False;
  std::vector<Formula> kept;
  for (auto& f : fs) {
    if (f.kind == unit) continue;
    if (f.kind == k) {
      for (auto& g : f.kids) kept.push_back(std::move(g));
    } else {
      kept.push_back(std::move(f));
    }
  }
  if (kept.empty()) return {unit, Cmp::Eq, "", {}, {}};
  if (kept.size() == 1) return std::move(kept.front());
  return {k, Cmp::Eq, "", {}, std::move(kept)};
}
inline Formula conj(std::vector<Formula> fs) { return nary(Formula::Kind::And, std::move(fs)); }
inline Formula disj(std::vector<Formula> fs) { return nary(Formula::Kind::Or, std::move(fs)); }
inline Formula implies(Formula a, Formula b) { return {Formula::Kind::Implies, Cmp::Eq, "", {}, {std::move(a), std::move(b)}}; }
inline Formula iff(Formula a, Formula b) { return {Formula::Kind::Iff, Cmp::Eq, "", {}, {std::move(a), std::move(b)}}; }
inline Formula exists(std::vector<Term> vars, Formula body) {
  if (vars.empty()) return body;
  return {Formula::Kind::Exists, Cmp::Eq, "", std::move(vars), {std::move(body)}};
}
inline Formula forall(std::vector<Term> vars, Formula body) {
  if (vars.empty()) return body;
  return {Formula::Kind::Forall, Cmp::Eq, "", std::move(vars), {std::move(body)}};
}

}  // namespace fm

inline void collect_constants(const Term& t, std::map<Rational, Term>& out) {
  if (t.kind == Term::Kind::Const) out.emplace(t.value, t);
  for (const auto& a : t.args) collect_constants(a, out);
}

inline void collect_constants(const Formula& f, std::map<Rational, Term>& out) {
  if (f.kind != Formula::Kind::Exists && f.kind != Formula::Kind::Forall)
    for (const auto& t : f.terms) collect_constants(t, out);
  for (const auto& k : f.kids) collect_constants(k, out);
}

inline bool has_quantifier(const Formula& f) {
  if (f.kind == Formula::Kind::Exists || f.kind == Formula::Kind::Forall) return true;
  return std::any_of(f.kids.begin(), f.kids.end(), [](const Formula& k) { return has_quantifier(k); });
}

// ---------------------------------------------------------------------------
// TPTP FOF rendering

namespace detail {

inline std::string tptp_term(const Term& t) {
  if (t.kind != Term::Kind::Fn) return t.name;
  std::string s = t.name + "(";
  for (std::size_t i = 0; i < t.args.size(); ++i) s += (i ? "," : "") + tptp_term(t.args[i]);
  return s + ")";
}

inline std::string join_vars(const std::vector<Term>& vars, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < vars.size(); ++i) s += (i ? sep : "") + vars[i].name;
  return s;
}

}  // namespace detail

inline std::string to_tptp(const Formula& f) {
  using K = Formula::Kind;
  auto binary = [&](const char* op) {
    std::string s = "(";
    for (std::size_t i = 0; i < f.kids.size(); ++i) s += (i ? std::string(" ") + op + " " : "") + to_tptp(f.kids[i]);
    return s + ")";
  };
  switch (f.kind) {
    case K::True: return "$true";
    case K::False: return "$false";
    case K::Compare: {
      const auto a = detail::tptp_term(f.terms[0]);
      const auto b = detail::tptp_term(f.terms[1]);
      switch (f.cmp) {
        case Cmp::Lt: return "lt(" + a + "," + b + ")";
        case Cmp::Gt: return "lt(" + b + "," + a + ")";
        case Cmp::Leq: return "leq(" + a + "," + b + ")";
        case Cmp::Geq: return "geq(" + a + "," + b + ")";
        case Cmp::Eq: return a + " = " + b;
      }
      return "";
    }
    case K::Pred: {
      std::string s = f.pred + "(";
      for (std::size_t i = 0; i < f.terms.size(); ++i) s += (i ? "," : "") + detail::tptp_term(f.terms[i]);
      return s + ")";
    }
    case K::Not: {
      const auto& k = f.kids[0];
      if (k.kind == K::Compare && k.cmp == Cmp::Eq) return "~ (" + to_tptp(k) + ")";
      return "~ " + to_tptp(k);
    }
    case K::And: return binary("&");
    case K::Or: return binary("|");
    case K::Implies: return binary("=>");
    case K::Iff: return binary("<=>");
    case K::Exists:
    case K::Forall: {
      std::string body = to_tptp(f.kids[0]);
      if (f.kids[0].kind == K::Compare && f.kids[0].cmp == Cmp::Eq) body = "(" + body + ")";
      return std::string(f.kind == K::Exists ? "? [" : "! [") + detail::join_vars(f.terms, ",") + "] : " + body;
    }
  }
  return "";
}

// ---------------------------------------------------------------------------
// SMT-LIB rendering. Arithmetic mode reads constants as numbers and
// variables as Real or Int by density. Uninterpreted mode mirrors the FOF
// encoding over a sort U with lt/leq/geq as predicates; it exists so the
// FOF problems can be checked with an SMT solver.

enum class SmtMode { Arithmetic, Uninterpreted };

namespace detail {

inline std::string smt_number(const Rational& v, bool real) {
  std::string digits = to_decimal_string(abs(v));
  if (real && digits.find('.') == std::string::npos) digits += ".0";
  return v < 0 ? "(- " + digits + ")" : digits;
}

inline std::string smt_term(const Term& t, SmtMode mode, bool real_context) {
  switch (t.kind) {
    case Term::Kind::Var:
      if (mode == SmtMode::Arithmetic && real_context && t.sort == Density::IntegerDiscrete)
        return "(to_real " + t.name + ")";
      return t.name;
    case Term::Kind::Const:
      return mode == SmtMode::Arithmetic ? smt_number(t.value, real_context) : t.name;
    case Term::Kind::Fn: {
      std::string s = "(" + t.name;
      for (const auto& a : t.args) s += " " + smt_term(a, mode, real_context);
      return s + ")";
    }
  }
  return "";
}

// A comparison is evaluated over the reals unless every variable in it
// is an integer and every constant integral.
inline bool needs_real(const Formula& f) {
  for (const auto& t : f.terms) {
    if (t.kind == Term::Kind::Var && t.sort == Density::Dense) return true;
    if (t.kind == Term::Kind::Const && !is_integral(t.value)) return true;
  }
  return false;
}

inline bool mixes_sorts(const Formula& f) {
  if (f.kind == Formula::Kind::Compare) {
    bool has_int = false;
    for (const auto& t : f.terms)
      if (t.kind == Term::Kind::Var && t.sort == Density::IntegerDiscrete) has_int = true;
    return has_int && needs_real(f);
  }
  return std::any_of(f.kids.begin(), f.kids.end(), [](const Formula& k) { return mixes_sorts(k); });
}

}  // namespace detail

inline std::string to_smt(const Formula& f, SmtMode mode) {
  using K = Formula::Kind;
  auto nary = [&](const char* op) {
    std::string s = std::string("(") + op;
    for (const auto& k : f.kids) s += " " + to_smt(k, mode);
    return s + ")";
  };
  switch (f.kind) {
    case K::True: return "true";
    case K::False: return "false";
    case K::Compare: {
      if (mode == SmtMode::Uninterpreted) {
        const auto a = detail::smt_term(f.terms[0], mode, false);
        const auto b = detail::smt_term(f.terms[1], mode, false);
        switch (f.cmp) {
          case Cmp::Lt: return "(lt " + a + " " + b + ")";
          case Cmp::Gt: return "(lt " + b + " " + a + ")";
          case Cmp::Leq: return "(leq " + a + " " + b + ")";
          case Cmp::Geq: return "(geq " + a + " " + b + ")";
          case Cmp::Eq: return "(= " + a + " " + b + ")";
        }
      }
      const bool real = detail::needs_real(f);
      const auto a = detail::smt_term(f.terms[0], mode, real);
      const auto b = detail::smt_term(f.terms[1], mode, real);
      static const char* ops[] = {"<", "<=", "=", ">=", ">"};
      return std::string("(") + ops[static_cast<int>(f.cmp)] + " " + a + " " + b + ")";
    }
    case K::Pred: {
      if (mode == SmtMode::Arithmetic) throw error("predicate " + f.pred + " has no arithmetic reading");
      std::string s = "(" + f.pred;
      for (const auto& t : f.terms) s += " " + detail::smt_term(t, mode, false);
      return s + ")";
    }
    case K::Not: return "(not " + to_smt(f.kids[0], mode) + ")";
    case K::And: return nary("and");
    case K::Or: return nary("or");
    case K::Implies: return nary("=>");
    case K::Iff: return nary("=");
    case K::Exists:
    case K::Forall: {
      std::string s = f.kind == K::Exists ? "(exists (" : "(forall (";
      for (std::size_t i = 0; i < f.terms.size(); ++i) {
        const auto& v = f.terms[i];
        std::string sort = mode == SmtMode::Uninterpreted ? "U" : (v.sort == Density::IntegerDiscrete ? "Int" : "Real");
        s += (i ? " (" : "(") + v.name + " " + sort + ")";
      }
      return s + ") " + to_smt(f.kids[0], mode) + ")";
    }
  }
  return "";
}

// ---------------------------------------------------------------------------
// Axioms

struct NamedAxiom {
  std::string name;
  Formula formula;
};

struct AxiomFile {
  std::string name;  // AXIS000-0.ax
  std::string description;
  std::vector<NamedAxiom> axioms;
};

inline std::vector<AxiomFile> axiom_files() {
  using namespace fm;
  const Term X = Term::var("X"), Y = Term::var("Y"), Z = Term::var("Z"), V = Term::var("V");
  const Term A = Term::var("A"), B = Term::var("B");
  auto lt = [](Term a, Term b) { return compare(Cmp::Lt, std::move(a), std::move(b)); };
  auto leq = [](Term a, Term b) { return compare(Cmp::Leq, std::move(a), std::move(b)); };
  auto geq = [](Term a, Term b) { return compare(Cmp::Geq, std::move(a), std::move(b)); };
  auto eq = [](Term a, Term b) { return compare(Cmp::Eq, std::move(a), std::move(b)); };

  AxiomFile axis{"AXIS000-0.ax", "Strict order, derived comparisons and interval membership", {}};
  axis.axioms = {
      {"lt_irreflexive", forall({X}, neg(lt(X, X)))},
      {"lt_transitive", forall({X, Y, Z}, implies(conj({lt(X, Y), lt(Y, Z)}), lt(X, Z)))},
      {"lt_total", forall({X, Y}, disj({lt(X, Y), eq(X, Y), lt(Y, X)}))},
      {"leq_definition", forall({X, Y}, iff(leq(X, Y), disj({lt(X, Y), eq(X, Y)})))},
      {"geq_definition", forall({X, Y}, iff(geq(X, Y), leq(Y, X)))},
      {"in_eq_definition", forall({X, V}, iff(pred("in_eq", {X, V}), eq(X, V)))},
      {"in_lt_definition", forall({X, V}, iff(pred("in_lt", {X, V}), lt(X, V)))},
      {"in_lteq_definition", forall({X, V}, iff(pred("in_lteq", {X, V}), leq(X, V)))},
      {"in_gt_definition", forall({X, V}, iff(pred("in_gt", {X, V}), lt(V, X)))},
      {"in_gteq_definition", forall({X, V}, iff(pred("in_gteq", {X, V}), geq(X, V)))},
  };

  const Term mid = Term::fn("between", {A, B});
  AxiomFile ord{"ORD001-0.ax", "Density and unboundedness of the order", {}};
  ord.axioms = {
      {"lt_dense", forall({A, B}, implies(lt(A, B), conj({lt(A, mid), lt(mid, B)})))},
      {"lt_no_maximum", forall({A}, lt(A, Term::fn("above", {A})))},
      {"lt_no_minimum", forall({A}, lt(Term::fn("below", {A}), A))},
  };
  return {axis, ord};
}

inline std::string render_axiom_file(const AxiomFile& file) {
  std::string s = "%------------------------------------------------------------------------------\n";
  s += "% File     : " + file.name + "\n";
  s += "% Domain   : Axis-specific interval constraints\n";
  s += "% Axioms   : " + file.description + "\n";
  s += "% Count    : " + std::to_string(file.axioms.size()) + "\n";
  s += "%------------------------------------------------------------------------------\n";
  for (const auto& a : file.axioms) s += "fof(" + a.name + ",axiom,\n    " + to_tptp(a.formula) + ").\n\n";
  s += "%------------------------------------------------------------------------------\n";
  return s;
}

/// Axiom files keyed by file name.
inline std::map<std::string, std::string> emit_axiom_files() {
  std::map<std::string, std::string> out;
  for (const auto& f : axiom_files()) out[f.name] = render_axiom_file(f);
  return out;
}

// ---------------------------------------------------------------------------
// Problems

enum class Relation { ConflictCheck, SubsumptionCheck };

inline std::string_view to_string(Relation r) {
  return r == Relation::ConflictCheck ? "conflict" : "subsumption";
}

enum class SzsStatus { Theorem, CounterSatisfiable };
enum class SmtStatus { Sat, Unsat };

inline std::string_view to_string(SzsStatus s) {
  return s == SzsStatus::Theorem ? "Theorem" : "CounterSatisfiable";
}
inline std::string_view to_string(SmtStatus s) { return s == SmtStatus::Sat ? "sat" : "unsat"; }

using ExpectedVerdict = std::variant<Verdict3, SubsumptionVerdict>;

inline std::string verdict_name(const ExpectedVerdict& v) {
  return std::visit([](auto x) { return std::string(to_string(x)); }, v);
}

/// Verdict to prover status. Unknown verdicts are never submitted.
inline std::pair<SzsStatus, SmtStatus> expected_statuses(Relation relation, const ExpectedVerdict& v) {
  if (relation == Relation::ConflictCheck) {
    const auto* v3 = std::get_if<Verdict3>(&v);
    if (!v3) throw error("conflict check needs a Verdict3");
    switch (*v3) {
      case Verdict3::Conflict: return {SzsStatus::Theorem, SmtStatus::Unsat};
      case Verdict3::Compatible: return {SzsStatus::Theorem, SmtStatus::Sat};
      case Verdict3::Unknown: break;
    }
  } else {
    const auto* sv = std::get_if<SubsumptionVerdict>(&v);
    if (!sv) throw error("subsumption check needs a SubsumptionVerdict");
    switch (*sv) {
      case SubsumptionVerdict::Confirmed: return {SzsStatus::Theorem, SmtStatus::Unsat};
      case SubsumptionVerdict::Refuted: return {SzsStatus::CounterSatisfiable, SmtStatus::Sat};
      case SubsumptionVerdict::Unknown: break;
    }
  }
  throw not_submittable("axis unconstrained: an Unknown verdict is not submitted to provers");
}

struct ProverProblem {
  std::string id;  // A01
  char category = 'A';
  std::string description;
  Relation relation = Relation::ConflictCheck;
  Connective connective = Connective::And;
  std::vector<AxisOperand> axes;
  std::vector<ConstraintSet> left;   // branches; one for And
  std::vector<ConstraintSet> right;
  ExpectedVerdict expected = Verdict3::Unknown;
  SzsStatus expected_szs = SzsStatus::Theorem;
  SmtStatus expected_smt = SmtStatus::Unsat;

  std::string category_dir() const { return std::string(1, category); }
};

/// Verdict of the internal engine for the problem's two sides.
inline ExpectedVerdict engine_verdict(const ProverProblem& p) {
  if (p.relation == Relation::SubsumptionCheck) {
    if (p.left.size() != 1 || p.right.size() != 1) throw error(p.id + ": subsumption takes one box per side");
    return box_subsumes(p.left[0], p.right[0], p.axes).verdict;
  }
  switch (p.connective) {
    case Connective::And:
      if (p.left.size() != 1 || p.right.size() != 1) throw error(p.id + ": and takes one box per side");
      return box_verdict(p.left[0], p.right[0], p.axes).verdict;
    case Connective::Or:
      return or_verdict({p.axes, p.left}, {p.axes, p.right}).verdict;
    case Connective::Xone:
      if (p.left.size() >= 2 && p.right.size() >= 2) return xone_verdict({p.axes, p.left}, {p.axes, p.right}).verdict;
      return xone_against({p.axes, p.left}, {p.axes, p.right}).verdict;
  }
  return Verdict3::Unknown;
}

/// Fills in the expected verdict and statuses from the engine. Throws
/// not_submittable for Unknown.
inline ProverProblem finalize(ProverProblem p) {
  p.expected = engine_verdict(p);
  auto [szs, smt] = expected_statuses(p.relation, p.expected);
  p.expected_szs = szs;
  p.expected_smt = smt;
  return p;
}

namespace detail {

inline std::vector<Term> problem_vars(const ProverProblem& p) {
  std::vector<Term> vars;
  for (std::size_t i = 0; i < p.axes.size(); ++i)
    vars.push_back(Term::var(p.axes.size() == 1 ? "X" : "X" + std::to_string(i + 1), p.axes[i].density()));
  return vars;
}

inline Formula interval_formula(const Interval& iv, const Term& x) {
  if (iv.is_empty()) return fm::bottom();
  std::vector<Formula> parts;
  const auto& lo = iv.lower();
  const auto& hi = iv.upper();
  if (lo.finite() && hi.finite() && !lo.open && !hi.open && lo.value == hi.value)
    return fm::compare(Cmp::Eq, x, Term::constant(lo.value));
  if (lo.finite()) parts.push_back(lo.open ? fm::compare(Cmp::Gt, x, Term::constant(lo.value))
                                           : fm::compare(Cmp::Geq, x, Term::constant(lo.value)));
  if (hi.finite()) parts.push_back(hi.open ? fm::compare(Cmp::Lt, x, Term::constant(hi.value))
                                           : fm::compare(Cmp::Leq, x, Term::constant(hi.value)));
  return fm::conj(std::move(parts));
}

// One atom per constraint. On integer axes the FOF side gets the
// constraint's normalised closed interval so that the dense axioms apply;
// the arithmetic side keeps the raw comparison over Int.
inline Formula constraint_formula(const AxisConstraint& c, const Term& x, bool normalise_discrete) {
  if (normalise_discrete && c.operand.density() == Density::IntegerDiscrete)
    return interval_formula(raw_denotation(c), x);
  static const Cmp cmps[] = {Cmp::Eq, Cmp::Lt, Cmp::Leq, Cmp::Gt, Cmp::Geq};
  Cmp cmp;
  switch (c.op) {
    case Operator::Eq: cmp = cmps[0]; break;
    case Operator::Lt: cmp = cmps[1]; break;
    case Operator::Lteq: cmp = cmps[2]; break;
    case Operator::Gt: cmp = cmps[3]; break;
    case Operator::Gteq: cmp = cmps[4]; break;
    default: throw unsupported_operator("operator has no comparison encoding");
  }
  return fm::compare(cmp, x, Term::constant(c.value));
}

inline Formula box_formula(const ConstraintSet& c, const ProverProblem& p, const std::vector<Term>& vars,
                           bool normalise_discrete) {
  std::vector<Formula> parts;
  for (const auto& ac : c) {
    auto it = std::find_if(p.axes.begin(), p.axes.end(), [&](const AxisOperand& a) { return a.iri == ac.operand.iri; });
    if (it == p.axes.end()) throw axis_mismatch(p.id + ": constraint outside the problem axes");
    parts.push_back(constraint_formula(ac, vars[static_cast<std::size_t>(it - p.axes.begin())], normalise_discrete));
  }
  return fm::conj(std::move(parts));
}

inline Formula domain_formula(const ProverProblem& p, const std::vector<Term>& vars) {
  std::vector<Formula> parts;
  for (std::size_t i = 0; i < p.axes.size(); ++i) parts.push_back(interval_formula(p.axes[i].domain, vars[i]));
  return fm::conj(std::move(parts));
}

}  // namespace detail

/// The statement whose satisfiability the SMT file checks. Conflict:
/// some point lies in both sides. Subsumption: some point of the left side
/// escapes the right. Or: some branch pair overlaps. Xone: exactly one
/// branch pair overlaps.
inline Formula witness_formula(const ProverProblem& p, bool normalise_discrete) {
  auto vars = detail::problem_vars(p);
  Formula dom = detail::domain_formula(p, vars);
  auto box = [&](const ConstraintSet& c) { return detail::box_formula(c, p, vars, normalise_discrete); };
  if (p.relation == Relation::SubsumptionCheck)
    return fm::exists(vars, fm::conj({dom, box(p.left[0]), fm::neg(box(p.right[0]))}));
  if (p.connective == Connective::And)
    return fm::exists(vars, fm::conj({dom, box(p.left[0]), box(p.right[0])}));
  std::vector<Formula> pairs;
  for (const auto& l : p.left)
    for (const auto& r : p.right) pairs.push_back(fm::conj({box(l), box(r)}));
  if (p.connective == Connective::Or) return fm::exists(vars, fm::conj({dom, fm::disj(pairs)}));
  std::vector<Formula> overlaps;
  for (auto& pr : pairs) overlaps.push_back(fm::exists(vars, fm::conj({dom, pr})));
  std::vector<Formula> exactly_one;
  for (std::size_t i = 0; i < overlaps.size(); ++i) {
    std::vector<Formula> parts{overlaps[i]};
    for (std::size_t j = 0; j < overlaps.size(); ++j)
      if (j != i) parts.push_back(fm::neg(overlaps[j]));
    exactly_one.push_back(fm::conj(std::move(parts)));
  }
  return fm::disj(std::move(exactly_one));
}

/// FOF conjecture. Conflict checks state the witness when the expected
/// verdict is Compatible and its negation when Conflict, so both are
/// Theorems. Subsumption states that the left side implies the right.
inline Formula conjecture_formula(const ProverProblem& p) {
  if (p.relation == Relation::SubsumptionCheck) {
    auto vars = detail::problem_vars(p);
    Formula dom = detail::domain_formula(p, vars);
    return fm::forall(vars, fm::implies(fm::conj({dom, detail::box_formula(p.left[0], p, vars, true)}),
                                        detail::box_formula(p.right[0], p, vars, true)));
  }
  Formula w = witness_formula(p, true);
  const auto* v = std::get_if<Verdict3>(&p.expected);
  if (v && *v == Verdict3::Compatible) return w;
  return fm::neg(std::move(w));
}

/// Ordering facts over the problem constants: the sorted chain links
/// first, then every remaining pair, C(n,2) facts for n constants.
inline std::vector<Formula> ordering_facts(const std::map<Rational, Term>& constants) {
  std::vector<Term> cs;
  for (const auto& [v, t] : constants) cs.push_back(t);
  std::vector<Formula> out;
  for (std::size_t i = 0; i + 1 < cs.size(); ++i) out.push_back(fm::compare(Cmp::Lt, cs[i], cs[i + 1]));
  for (std::size_t gap = 2; gap < cs.size(); ++gap)
    for (std::size_t i = 0; i + gap < cs.size(); ++i) out.push_back(fm::compare(Cmp::Lt, cs[i], cs[i + gap]));
  return out;
}

inline std::map<Rational, Term> problem_constants(const ProverProblem& p) {
  std::map<Rational, Term> cs;
  collect_constants(conjecture_formula(p), cs);
  return cs;
}

namespace detail {

inline std::string describe_side(const std::vector<ConstraintSet>& branches, Connective c) {
  std::string s;
  for (std::size_t b = 0; b < branches.size(); ++b) {
    if (b) s += std::string(" ") + std::string(to_string(c)) + " ";
    std::string box;
    for (const auto& ac : branches[b])
      box += (box.empty() ? "" : ", ") + std::string(to_string(ac.operand.axis)) + " " +
             std::string(to_string(ac.op)) + " " + to_decimal_string(ac.value);
    s += "{" + box + "}";
  }
  return s;
}

inline std::string header_lines(const ProverProblem& p, const std::string& comment) {
  std::string s;
  s += comment + " Problem   : " + p.id + "\n";
  if (!p.description.empty()) s += comment + " English   : " + p.description + "\n";
  s += comment + " Relation  : " + std::string(to_string(p.relation)) + " (" + std::string(to_string(p.connective)) + ")\n";
  s += comment + " Left      : " + describe_side(p.left, p.connective) + "\n";
  s += comment + " Right     : " + describe_side(p.right, p.connective) + "\n";
  auto vars = problem_vars(p);
  for (std::size_t i = 0; i < vars.size(); ++i)
    s += comment + " Variable  : " + vars[i].name + " = " + p.axes[i].compact() + " " + p.axes[i].domain.to_string() +
         (p.axes[i].density() == Density::IntegerDiscrete ? " integer" : "") + "\n";
  s += comment + " Verdict   : " + verdict_name(p.expected) + "\n";
  return s;
}

}  // namespace detail

inline std::string emit_tptp(const ProverProblem& p) {
  expected_statuses(p.relation, p.expected);  // rejects Unknown
  Formula conjecture = conjecture_formula(p);
  std::map<Rational, Term> constants;
  collect_constants(conjecture, constants);
  auto facts = ordering_facts(constants);

  std::string s = "%------------------------------------------------------------------------------\n";
  s += detail::header_lines(p, "%");
  s += "% Status    : " + std::string(to_string(p.expected_szs)) + "\n";
  if (p.relation == Relation::ConflictCheck)
    s += std::string("% Polarity  : the conjecture ") +
         (p.expected_szs == SzsStatus::Theorem && std::get<Verdict3>(p.expected) == Verdict3::Compatible
              ? "asserts a common witness (expected Compatible)"
              : "denies any common witness (expected Conflict)") +
         "; both read as Theorem\n";
  else
    s += "% Polarity  : the conjecture asserts containment; Theorem when it holds, CounterSatisfiable otherwise\n";
  s += "% Constants : " + std::to_string(constants.size()) + ", ordering facts: " + std::to_string(facts.size()) + "\n";
  s += "%------------------------------------------------------------------------------\n";
  for (const auto& f : axiom_files()) s += "include('ax/" + f.name + "').\n";
  s += "\n";
  for (std::size_t i = 0; i < facts.size(); ++i)
    s += "fof(order_" + std::to_string(i + 1) + ",axiom,\n    " + to_tptp(facts[i]) + ").\n";
  if (!facts.empty()) s += "\n";
  s += "fof(" + p.id + ",conjecture,\n    " + to_tptp(conjecture) + ").\n\n";
  s += "%------------------------------------------------------------------------------\n";
  return s;
}

inline std::string smt_logic(const Formula& w) {
  std::set<Density> sorts;
  std::function<void(const Formula&)> walk = [&](const Formula& f) {
    if (f.kind == Formula::Kind::Exists || f.kind == Formula::Kind::Forall)
      for (const auto& v : f.terms) sorts.insert(v.sort);
    for (const auto& k : f.kids) walk(k);
  };
  walk(w);
  // A top-level existential is declared as constants, so only nested
  // quantifiers make the problem quantified.
  const Formula& body = w.kind == Formula::Kind::Exists ? w.kids[0] : w;
  std::string theory;
  if (detail::mixes_sorts(w) || sorts.size() > 1) theory = "LIRA";
  else if (sorts.count(Density::IntegerDiscrete)) theory = "LIA";
  else theory = "LRA";
  return (has_quantifier(body) ? "" : "QF_") + theory;
}

inline std::string emit_smt(const ProverProblem& p) {
  expected_statuses(p.relation, p.expected);
  Formula w = witness_formula(p, false);
  std::string s = detail::header_lines(p, ";");
  s += "(set-info :smt-lib-version 2.6)\n";
  s += "(set-info :status " + std::string(to_string(p.expected_smt)) + ")\n";
  s += "(set-logic " + smt_logic(w) + ")\n";
  const Formula* body = &w;
  if (w.kind == Formula::Kind::Exists) {
    for (const auto& v : w.terms)
      s += "(declare-const " + v.name + (v.sort == Density::IntegerDiscrete ? " Int)\n" : " Real)\n");
    body = &w.kids[0];
  }
  s += "(assert " + to_smt(*body, SmtMode::Arithmetic) + ")\n";
  s += "(check-sat)\n";
  return s;
}

/// The FOF problem as SMT-LIB over an uninterpreted sort: axioms, ordering
/// facts and the negated conjecture. unsat means the conjecture is a
/// theorem. `skip_axioms` drops named axioms.
inline std::string emit_fof_mirror(const ProverProblem& p, const std::set<std::string>& skip_axioms = {}) {
  Formula conjecture = conjecture_formula(p);
  std::map<Rational, Term> constants;
  collect_constants(conjecture, constants);
  std::string s = "(set-logic UF)\n(declare-sort U 0)\n";
  s += "(declare-fun lt (U U) Bool)\n(declare-fun leq (U U) Bool)\n(declare-fun geq (U U) Bool)\n";
  for (const char* in : {"in_eq", "in_lt", "in_lteq", "in_gt", "in_gteq"})
    s += std::string("(declare-fun ") + in + " (U U) Bool)\n";
  s += "(declare-fun between (U U) U)\n(declare-fun above (U) U)\n(declare-fun below (U) U)\n";
  for (const auto& [v, t] : constants) s += "(declare-const " + t.name + " U)\n";
  for (const auto& file : axiom_files())
    for (const auto& a : file.axioms)
      if (!skip_axioms.count(a.name)) s += "(assert " + to_smt(a.formula, SmtMode::Uninterpreted) + ") ; " + a.name + "\n";
  for (const auto& f : ordering_facts(constants)) s += "(assert " + to_smt(f, SmtMode::Uninterpreted) + ")\n";
  s += "(assert (not " + to_smt(conjecture, SmtMode::Uninterpreted) + "))\n(check-sat)\n";
  return s;
}

}  // namespace oax
