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

// oax: command-line front end for axis-specific ODRL constraint analysis.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "oax/oax.hpp"

namespace fs = std::filesystem;

namespace {

// Exit codes shared by all commands.
constexpr int kOk = 0;
constexpr int kNegative = 1;  // Conflict, Refuted, No, findings
constexpr int kError = 2;
constexpr int kUnknown = 3;

struct Globals {
  std::string config_path;
  std::vector<std::string> discrete;
  oax::Config config;
  oax::AxisProfile profile = oax::AxisProfile::standard();
};

Globals g;

void load_config() {
  std::string path = g.config_path;
  if (path.empty() && fs::exists("oax.toml")) path = "oax.toml";
  if (!path.empty()) g.config = oax::parse_config(oax::read_file(path), path);
  std::vector<std::string> integer = g.config.integer_axes;
  integer.insert(integer.end(), g.discrete.begin(), g.discrete.end());
  g.profile = oax::AxisProfile::standard().with_integer_axes(integer);
}

oax::Policy load_policy(const std::string& path) { return oax::parse_policy(oax::read_file(path)); }

bool want_json(const std::string& format) {
  return (format.empty() ? g.config.format : format) == "json";
}

void print_json(const oax::json& j) { std::cout << j.dump(2) << "\n"; }

int verdict_exit(oax::Verdict3 v) {
  return v == oax::Verdict3::Compatible ? kOk : v == oax::Verdict3::Conflict ? kNegative : kUnknown;
}

int verdict_exit(oax::SubsumptionVerdict v) {
  return v == oax::SubsumptionVerdict::Confirmed ? kOk : v == oax::SubsumptionVerdict::Refuted ? kNegative : kUnknown;
}

std::string opt(const std::optional<oax::Interval>& iv) { return iv ? iv->to_string() : "-"; }

// ---------------------------------------------------------------------------

int cmd_validate(const std::string& path, const std::string& format) {
  auto policy = load_policy(path);
  auto findings = oax::lint_operators(policy, g.profile);
  auto amb = oax::lint_ambiguity(policy, g.profile);
  findings.insert(findings.end(), amb.begin(), amb.end());
  oax::sort_findings(findings);
  if (want_json(format)) print_json({{"policy", policy.uid}, {"findings", oax::to_json(findings)}});
  else if (findings.empty()) std::cout << policy.uid << ": ok\n";
  else std::cout << oax::to_text(findings);
  return findings.empty() ? kOk : kNegative;
}

void print_conflict_text(const oax::ConflictReport& r) {
  std::cout << "verdict: " << oax::to_string(r.verdict) << "\n";
  for (const auto& p : r.pairs) {
    std::cout << "pair " << p.left_rule << " / " << p.right_rule << " (" << oax::compact_iri(p.action) << ", "
              << oax::to_string(p.relation) << "): " << oax::to_string(p.verdict) << "\n";
    if (p.box)
      for (const auto& a : p.box->axes)
        std::cout << "  " << a.operand.compact() << ": " << opt(a.left) << " vs " << opt(a.right) << " -> "
                  << opt(a.intersection) << "  " << oax::to_string(a.verdict) << "\n";
    for (const auto& o : p.operands)
      if (o.source != oax::VerdictSource::Dimensional)
        std::cout << "  " << oax::compact_iri(o.operand) << " [" << oax::to_string(o.source)
                  << "]: " << oax::to_string(o.verdict) << (o.note.empty() ? "" : "  (" + o.note + ")") << "\n";
    if (p.composition)
      std::cout << "  " << oax::to_string(*p.connective) << ": " << p.composition->count(oax::Verdict3::Compatible)
                << " of " << p.composition->pairs() << " branch pairs overlap\n";
  }
  for (const auto& n : r.notes) std::cout << "note: " << n << "\n";
  if (auto e = r.explanation(); !e.empty()) std::cout << e << "\n";
}

int cmd_conflict(const std::string& a, const std::string& b, const std::string& verdicts, const std::string& format) {
  auto p1 = load_policy(a);
  auto p2 = load_policy(b);
  std::vector<oax::LabeledVerdict> side;
  if (!verdicts.empty()) side = oax::parse_labeled_verdicts(oax::read_file(verdicts));
  auto report = oax::evaluate_conflict(p1, p2, side, g.profile);
  if (want_json(format)) print_json(oax::to_json(report));
  else print_conflict_text(report);
  return verdict_exit(report.verdict);
}

void print_subsumption_text(const oax::SubsumptionReport& r) {
  std::cout << "verdict: " << oax::to_string(r.verdict) << "\n";
  for (const auto& p : r.pairs) {
    std::cout << "pair " << p.left_rule << " within " << p.right_rule << " (" << oax::compact_iri(p.action)
              << "): " << oax::to_string(p.verdict) << "\n";
    if (p.box)
      for (const auto& a : p.box->axes)
        std::cout << "  " << a.operand.compact() << ": " << opt(a.left) << " within " << opt(a.right) << "  "
                  << oax::to_string(a.verdict) << "\n";
    for (const auto& [o, v] : p.operands) std::cout << "  " << oax::compact_iri(o) << ": " << oax::to_string(v) << "\n";
    for (const auto& n : p.notes) std::cout << "  note: " << n << "\n";
  }
}

int cmd_subsume(const std::string& narrow, const std::string& wide, const std::string& format) {
  auto report = oax::evaluate_subsumption(load_policy(narrow), load_policy(wide), g.profile);
  if (want_json(format)) print_json(oax::to_json(report));
  else print_subsumption_text(report);
  return verdict_exit(report.verdict);
}

int cmd_request(const std::string& policy_path, const std::string& context, const std::string& action,
                const std::string& format) {
  auto policy = load_policy(policy_path);
  std::string text = fs::is_regular_file(context) ? oax::read_file(context) : context;
  auto ctx = oax::parse_context(text, g.profile);
  std::optional<std::string> act;
  if (!action.empty()) act = action;
  auto report = oax::evaluate_request(policy, ctx, g.profile, act);
  if (want_json(format)) {
    print_json(oax::to_json(report));
  } else {
    std::cout << "satisfied: " << (report.satisfied ? "Yes" : "No") << "\n";
    for (const auto& r : report.rules) {
      std::cout << r.rule << " (" << oax::compact_iri(r.action) << "): " << (r.satisfied ? "Yes" : "No") << "\n";
      for (const auto& a : r.atoms.axes)
        std::cout << "  " << a.operand.compact() << ": " << (a.value ? oax::to_decimal_string(*a.value) : "-")
                  << " in " << opt(a.interval) << "  " << (a.ok ? "ok" : "violated")
                  << (a.note.empty() ? "" : "  (" + a.note + ")") << "\n";
      for (std::size_t i = 0; i < r.branches.size(); ++i)
        std::cout << "  " << oax::to_string(*r.connective) << "[" << i << "]: " << (r.branches[i].satisfied ? "Yes" : "No") << "\n";
      for (const auto& s : r.skipped) std::cout << "  skipped: " << s << "\n";
    }
  }
  return report.satisfied ? kOk : kNegative;
}

int cmd_lint(const std::string& path, const std::string& format) {
  auto policy = load_policy(path);
  auto findings = oax::lint(policy, g.profile);
  if (want_json(format)) print_json(oax::to_json(findings));
  else if (findings.empty()) std::cout << policy.uid << ": no findings\n";
  else std::cout << oax::to_text(findings);
  for (const auto& f : findings)
    if (f.severity != oax::Severity::Info) return kNegative;
  return kOk;
}

int cmd_refine(const std::string& upstream, const std::string& downstream, const std::string& format) {
  auto r = oax::check_refinement(load_policy(upstream), load_policy(downstream), g.profile);
  if (want_json(format)) {
    auto j = oax::to_json(r.report);
    j["findings"] = oax::to_json(r.findings);
    print_json(j);
  } else {
    print_subsumption_text(r.report);
    std::cout << oax::to_text(r.findings);
  }
  return verdict_exit(r.report.verdict);
}

int cmd_emit(const std::string& a, const std::string& b, const std::string& format, const std::string& relation,
             const std::string& axioms_dir, const std::string& out, const std::string& id) {
  if (!axioms_dir.empty())
    for (const auto& [name, text] : oax::emit_axiom_files()) oax::write_file_atomic(fs::path(axioms_dir) / name, text);
  if (a.empty()) return kOk;
  if (b.empty()) throw oax::error("emit needs two policies");
  auto rel = relation == "subsume" ? oax::Relation::SubsumptionCheck : oax::Relation::ConflictCheck;
  auto problem = oax::problem_from_policies(load_policy(a), load_policy(b), rel, g.profile, id);
  std::string text = format == "smt" ? oax::emit_smt(problem) : oax::emit_tptp(problem);
  if (out.empty()) std::cout << text;
  else oax::write_file_atomic(out, text);
  return kOk;
}

int cmd_bench_generate(const std::string& dir, const std::string& format) {
  auto problems = oax::write_suite(dir);
  std::map<char, int> counts;
  for (const auto& p : problems) ++counts[p.category];
  if (want_json(format)) {
    oax::json c = oax::json::object();
    for (auto [cat, n] : counts) c[std::string(1, cat)] = n;
    print_json({{"directory", dir}, {"total", problems.size()}, {"counts", c}});
  } else {
    std::cout << "wrote " << problems.size() << " problems to " << dir << " (";
    bool first = true;
    for (auto [cat, n] : counts) std::cout << (first ? "" : " ") << cat << ":" << n, first = false;
    std::cout << ")\n";
  }
  return kOk;
}

struct BenchRunOptions {
  std::string dir = "bench";
  std::vector<std::string> provers;
  int timeout = 0;
  int jobs = 0;
  std::string vampire;
  std::string z3;
  std::string format;
};

int cmd_bench_run(const BenchRunOptions& o) {
  fs::path root = o.dir;
  if (!fs::exists(root / "manifest.json")) throw oax::environment_error("no manifest in " + root.string() + "; run `oax bench generate` first");
  auto problems = oax::problems_from_manifest(oax::parse_json_exact(oax::read_file(root / "manifest.json")));
  const int timeout = o.timeout > 0 ? o.timeout : g.config.timeout;
  const int jobs = o.jobs > 0 ? o.jobs : g.config.jobs;
  const bool explicit_list = !o.provers.empty();
  auto requested = [&](const char* name) {
    return !explicit_list || std::find(o.provers.begin(), o.provers.end(), name) != o.provers.end();
  };
  for (const auto& p : o.provers)
    if (p != "vampire" && p != "z3") throw oax::environment_error("unknown prover '" + p + "' (expected vampire or z3)");

  auto flag = [](const std::string& s) { return s.empty() ? std::optional<std::string>() : std::optional<std::string>(s); };
  std::optional<std::vector<oax::ProverResult>> fof, smt;
  for (auto kind : {oax::ProverKind::Vampire, oax::ProverKind::Z3}) {
    const bool is_vampire = kind == oax::ProverKind::Vampire;
    if (!requested(is_vampire ? "vampire" : "z3")) continue;
    auto exe = oax::discover_prover(kind, flag(is_vampire ? o.vampire : o.z3), is_vampire ? g.config.vampire : g.config.z3);
    if (!exe) {
      if (explicit_list) throw oax::environment_error(oax::install_hint(kind));
      std::cerr << "skipping " << oax::to_string(kind) << ": " << oax::install_hint(kind) << "\n";
      continue;
    }
    std::vector<std::pair<std::string, fs::path>> tasks;
    for (const auto& p : problems) tasks.emplace_back(p.id, root / (is_vampire ? oax::tptp_path(p) : oax::smt_path(p)));
    auto results = oax::run_all(kind, *exe, tasks, timeout, jobs, root);
    (is_vampire ? fof : smt) = std::move(results);
  }
  auto report = oax::concordance_report(problems, fof ? &*fof : nullptr, smt ? &*smt : nullptr);
  if (want_json(o.format)) print_json(oax::to_json(report));
  else std::cout << oax::to_text(report);
  return report.all_agree() ? kOk : kNegative;
}

int cmd_profile(bool dump, const std::string& format) {
  (void)dump;
  if (want_json(format)) {
    oax::json arr = oax::json::array();
    for (const auto& op : g.profile.operands())
      arr.push_back({{"operand", op.compact()},
                     {"base", oax::compact_iri(op.base)},
                     {"axis", std::string(oax::to_string(op.axis))},
                     {"domain", op.domain.to_string()},
                     {"density", std::string(oax::to_string(op.density()))}});
    print_json(arr);
    return kOk;
  }
  for (const auto& op : g.profile.operands()) {
    std::printf("%-36s %-28s %-16s %s\n", op.compact().c_str(), oax::compact_iri(op.base).c_str(),
                op.domain.to_string().c_str(), std::string(oax::to_string(op.density())).c_str());
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"oax: axis-specific ODRL constraint analysis"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "oax 1.0.0");
  app.add_option("--config", g.config_path, "Configuration file (default: ./oax.toml if present)");
  app.add_option("--discrete", g.discrete, "Treat an axis as integer-valued (repeatable), e.g. --discrete width");
  app.fallthrough();

  std::string format, a, b, c, relation = "conflict", axioms_dir, out, id = "P01", action;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };

  auto* validate = app.add_subcommand("validate", "Check right-operand bounds and dimensional ambiguity");
  validate->add_option("policy", a, "Policy file")->required();
  add_format(validate);

  std::string verdicts;
  auto* conflict = app.add_subcommand("conflict", "Conflict verdict between two policies");
  conflict->add_option("first", a, "First policy")->required();
  conflict->add_option("second", b, "Second policy")->required();
  conflict->add_option("--verdicts", verdicts, "Per-operand verdicts for non-axis operands (JSON)");
  add_format(conflict);

  auto* subsume = app.add_subcommand("subsume", "Does the first policy fit inside the second");
  subsume->add_option("narrow", a, "Policy expected to be narrower")->required();
  subsume->add_option("wide", b, "Policy expected to be wider")->required();
  add_format(subsume);

  auto* request = app.add_subcommand("request", "Evaluate a request (execution context) against a policy");
  request->add_option("policy", a, "Policy file")->required();
  request->add_option("context", b, "Context file or inline list, e.g. width=1200,height=400")->required();
  request->add_option("--action", action, "Only rules with this action");
  add_format(request);

  auto* lint = app.add_subcommand("lint", "Design-time findings for a policy");
  lint->add_option("policy", a, "Policy file")->required();
  add_format(lint);

  auto* refine = app.add_subcommand("refine", "Check that a downstream policy refines an upstream one");
  refine->add_option("upstream", a, "Upstream policy")->required();
  refine->add_option("downstream", b, "Downstream policy")->required();
  add_format(refine);

  std::string emit_format = "tptp";
  auto* emit = app.add_subcommand("emit", "Write a prover problem for two policies");
  emit->add_option("first", a, "First policy");
  emit->add_option("second", b, "Second policy");
  emit->add_option("--format", emit_format, "Problem format")->check(CLI::IsMember({"tptp", "smt"}));
  emit->add_option("--relation", relation, "Relation to check")->check(CLI::IsMember({"conflict", "subsume"}));
  emit->add_option("--axioms", axioms_dir, "Also write the axiom files into this directory");
  emit->add_option("-o,--output", out, "Output file (default: stdout)");
  emit->add_option("--id", id, "Problem name");

  auto* bench = app.add_subcommand("bench", "Benchmark suite");
  bench->require_subcommand(1);
  std::string gen_dir = "bench";
  auto* generate = bench->add_subcommand("generate", "Write the 117-problem suite");
  generate->add_option("--out,--dir", gen_dir, "Output directory");
  add_format(generate);
  BenchRunOptions run_opts;
  auto* run = bench->add_subcommand("run", "Run provers on the suite and report concordance");
  run->add_option("--dir", run_opts.dir, "Suite directory");
  run->add_option("--provers", run_opts.provers, "Provers to run (vampire, z3); missing ones are an error")->delimiter(',');
  run->add_option("--timeout", run_opts.timeout, "Seconds per problem (default 10)")->check(CLI::PositiveNumber);
  run->add_option("--jobs", run_opts.jobs, "Parallel prover processes (default 4)")->check(CLI::PositiveNumber);
  run->add_option("--vampire", run_opts.vampire, "Vampire executable");
  run->add_option("--z3", run_opts.z3, "Z3 executable");
  run->add_option("--format", run_opts.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  bool dump = false;
  auto* profile = app.add_subcommand("profile", "Show the axis profile");
  profile->add_flag("--dump", dump, "Print every axis operand with its domain");
  add_format(profile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kError;
  }

  try {
    load_config();
    if (*validate) return cmd_validate(a, format);
    if (*conflict) return cmd_conflict(a, b, verdicts, format);
    if (*subsume) return cmd_subsume(a, b, format);
    if (*request) return cmd_request(a, b, action, format);
    if (*lint) return cmd_lint(a, format);
    if (*refine) return cmd_refine(a, b, format);
    if (*emit) return cmd_emit(a, b, emit_format, relation, axioms_dir, out, id);
    if (*generate) return cmd_bench_generate(gen_dir, format);
    if (*run) return cmd_bench_run(run_opts);
    if (*profile) return cmd_profile(dump, format);
  } catch (const oax::error& e) {
    std::cerr << "oax: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "oax: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
