#include "selfref/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace selfref {

using json = nlohmann::ordered_json;

bool CheckReport::expectations_met() const {
  return std::all_of(expectations.begin(), expectations.end(),
                     [](const ExpectationResult& e) { return e.ok; });
}

bool ReproReport::ok() const {
  return std::all_of(scenarios.begin(), scenarios.end(),
                     [](const CheckReport& r) { return r.expectations_met(); });
}

namespace {

std::string verdict_word(const Verdict& v) {
  if (v.vacuous) return "vacuous";
  return v.value ? "true" : "false";
}

std::string conflict_label(ConflictKind kind, const Instance& pos, const Instance& neg) {
  return "conflict " + std::string(conflict_kind_name(kind)) + " " + render_instance_spec(pos) + " / " +
         render_instance_spec(neg);
}

bool matches(const ConflictReport& c, const ConflictExpectation& e) {
  return c.kind == e.kind && c.positive.source == e.positive && c.negative.source == e.negative;
}

void check_expectations(CheckReport& r, const Model& model) {
  const Scenario& s = r.scenario;
  for (const auto& e : s.expected_verdicts) {
    const Verdict got = evaluate_instance(model, e.instance).verdict;
    r.expectations.push_back({e.label + " " + render_instance_spec(e.instance), verdict_word(e.verdict),
                              verdict_word(got), got == e.verdict});
  }
  for (const auto& e : s.expected_conflicts) {
    const bool found = std::any_of(r.conflicts.begin(), r.conflicts.end(),
                                   [&](const ConflictReport& c) { return matches(c, e); });
    r.expectations.push_back(
        {conflict_label(e.kind, e.positive, e.negative), "reported", found ? "reported" : "absent", found});
  }
  if (s.no_other_conflicts) {
    const auto extra = std::count(r.listed.begin(), r.listed.end(), false);
    r.expectations.push_back({"no other conflicts", "0 unlisted", std::to_string(extra) + " unlisted",
                              extra == 0});
  }
  if (s.expect_certificate) {
    r.expectations.push_back({"certificate", "issued", r.certificate ? "issued" : "withheld",
                              r.certificate.has_value()});
  }
  for (const auto& e : s.expected_deictic) {
    const DeicticOutcome got = evaluate_deictic(model, e.subject);
    const std::string subject = e.subject ? render(*e.subject) : "open";
    r.expectations.push_back({e.label + " deictic " + subject, std::string(deictic_name(e.outcome)),
                              std::string(deictic_name(got)), got == e.outcome});
  }
}

}  // namespace

CheckReport run_check(const Scenario& scenario, ConflictOptions options) {
  CheckReport r;
  r.scenario = scenario;
  const Model model = scenario.model();
  const auto names = scenario.universe_names();
  r.table = verdict_table(model, scenario.schema, scenario.mode, names, scenario.depth);
  auto result = consistency_certificate(r.table, model, options);
  if (auto* cert = std::get_if<Certificate>(&result)) {
    r.certificate = *cert;
  } else {
    r.conflicts = std::move(std::get<std::vector<ConflictReport>>(result));
  }
  for (const auto& c : r.conflicts) {
    r.listed.push_back(std::any_of(scenario.expected_conflicts.begin(), scenario.expected_conflicts.end(),
                                   [&](const ConflictExpectation& e) { return matches(c, e); }));
  }
  for (const auto& p : scenario.policies) r.policies.push_back(check_policy(model, p));
  check_expectations(r, model);
  return r;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

json trace_json(const SchemaRegistry& schemas, const Trace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    steps.push_back({{"rule", std::string(step_rule(s))}, {"text", render_step(schemas, s)}});
  }
  return steps;
}

json witness_json(const SchemaRegistry& schemas, const AttributedVerdict& w) {
  json j;
  j["subject"] = render(w.subject);
  j["instance"] = render_instance_spec(w.source);
  j["sentence"] = render_instance(schemas, w.source);
  j["verdict"] = verdict_word(w.verdict);
  j["vacuous"] = w.verdict.vacuous;
  j["route"] = std::holds_alternative<LeibnizTransfer>(w.route) ? "leibniz" : "plain";
  j["trace"] = trace_json(schemas, w.trace);
  return j;
}

json scenario_json(const Scenario& s) {
  json j;
  j["name"] = s.name;
  json stips = json::array();
  for (const auto& st : s.stipulations) stips.push_back({{"name", st.name}, {"referent", render(st.referent)}});
  j["stipulations"] = stips;
  j["schema"] = s.schema;
  j["mode"] = std::string(mode_name(s.mode));
  j["universe"] = s.universe_names();
  j["depth"] = s.depth;
  json pols = json::array();
  for (const auto& p : s.policies) pols.push_back(p.name());
  j["policies"] = pols;
  return j;
}

json table_json(const VerdictTable& t) {
  json j;
  j["schema"] = t.schema;
  j["mode"] = std::string(mode_name(t.mode));
  j["names"] = t.names;
  j["depth"] = t.depth;
  json rows = json::array();
  for (const auto& r : t.rows) {
    rows.push_back({{"instance", render_instance_spec(r.instance)},
                    {"csi", r.csi},
                    {"subject", render(r.subject)},
                    {"object", render(r.object)},
                    {"verdict", verdict_word(r.verdict)},
                    {"trace", "t" + std::to_string(r.trace_id)}});
  }
  j["rows"] = rows;
  return j;
}

json certificate_json(const std::optional<Certificate>& c) {
  if (!c) return nullptr;
  json j;
  j["schema"] = c->schema;
  j["mode"] = std::string(mode_name(c->mode));
  j["names"] = c->names;
  j["depth"] = c->depth;
  j["instances_checked"] = c->instances_checked;
  j["statement"] = c->statement();
  return j;
}

json report_json(const CheckReport& r) {
  const SchemaRegistry schemas = r.scenario.registry();
  json j;
  j["scenario"] = scenario_json(r.scenario);
  j["table"] = table_json(r.table);

  json conflicts = json::array();
  for (std::size_t i = 0; i < r.conflicts.size(); ++i) {
    const auto& c = r.conflicts[i];
    json cj;
    cj["kind"] = std::string(conflict_kind_name(c.kind));
    cj["object"] = render(c.object);
    if (c.identity) {
      cj["identity"] = {{"left", render(c.identity->left)},
                        {"right", render(c.identity->right)},
                        {"justification", std::string(justification_name(c.identity->justification))}};
    } else {
      cj["identity"] = nullptr;
    }
    cj["positive"] = witness_json(schemas, c.positive);
    cj["negative"] = witness_json(schemas, c.negative);
    if (!r.scenario.expected_conflicts.empty()) cj["listed"] = static_cast<bool>(r.listed[i]);
    conflicts.push_back(std::move(cj));
  }
  j["conflicts"] = conflicts;
  j["certificate"] = certificate_json(r.certificate);

  json policies = json::array();
  for (const auto& p : r.policies) {
    json violations = json::array();
    for (const auto& v : p.violations) {
      violations.push_back({{"policy", std::string(policy_name(v.policy))}, {"names", v.names}});
    }
    policies.push_back({{"policy", p.policy.name()}, {"passed", p.passed}, {"violations", violations}});
  }
  j["policies"] = policies;

  if (!r.expectations.empty()) {
    json ex = json::array();
    for (const auto& e : r.expectations) {
      ex.push_back({{"label", e.label}, {"expected", e.expected}, {"actual", e.actual}, {"ok", e.ok}});
    }
    j["expectations"] = ex;
  }

  json traces = json::object();
  for (std::size_t i = 0; i < r.table.traces.size(); ++i) {
    traces["t" + std::to_string(i)] = trace_json(schemas, r.table.traces[i]);
  }
  j["traces"] = traces;
  j["version"] = std::string(kVersion);
  return j;
}

// ---------------------------------------------------------------------------
// Text

std::string join(const std::vector<std::string>& xs, std::string_view sep) {
  std::string out;
  for (const auto& x : xs) {
    if (!out.empty()) out += sep;
    out += x;
  }
  return out;
}

void table_text(std::ostream& out, const VerdictTable& t) {
  std::size_t w = 8;
  for (const auto& r : t.rows) w = std::max(w, render_instance_spec(r.instance).size());
  out << "verdict table: " << t.schema << ", mode " << mode_name(t.mode) << ", names {"
      << join(t.names, ", ") << "}, depth " << t.depth << ", " << t.rows.size() << " rows\n";
  for (const auto& r : t.rows) {
    out << "  " << std::left << std::setw(static_cast<int>(w)) << render_instance_spec(r.instance)
        << "  " << std::setw(4) << (r.csi ? "csi" : "") << "  subject " << std::setw(8)
        << render(r.subject) << "  denotes " << std::setw(10) << describe(r.object) << "  "
        << verdict_word(r.verdict) << "\n";
  }
}

void witness_text(std::ostream& out, const SchemaRegistry& schemas, const AttributedVerdict& w,
                  char sign) {
  out << "      " << sign << " " << render_instance_spec(w.source) << " says "
      << render(w.subject) << " is" << (w.verdict.value ? "" : " not") << " "
      << schemas.get(w.source.schema).predicate << (w.verdict.vacuous ? " (vacuously)" : "") << "\n";
  std::istringstream lines(render_trace(schemas, w.trace));
  for (std::string line; std::getline(lines, line);) out << "          " << line << "\n";
}

void report_text(std::ostream& out, const CheckReport& r) {
  const SchemaRegistry schemas = r.scenario.registry();
  out << "scenario: " << (r.scenario.name.empty() ? "(unnamed)" : r.scenario.name) << "\n";
  out << "stipulations:";
  for (const auto& s : r.scenario.stipulations) out << "  " << s.name << " -> " << render(s.referent) << ";";
  out << "\n";
  table_text(out, r.table);

  out << "conflicts: " << r.conflicts.size() << "\n";
  for (std::size_t i = 0; i < r.conflicts.size(); ++i) {
    const auto& c = r.conflicts[i];
    out << "  [" << i + 1 << "] " << conflict_kind_name(c.kind) << " on " << describe(c.object);
    if (c.identity) {
      out << " via " << render(*c.identity) << " ("
          << justification_name(c.identity->justification) << ")";
    }
    if (!r.scenario.expected_conflicts.empty() && !r.listed[i]) out << "  [unlisted]";
    out << "\n";
    witness_text(out, schemas, c.positive, '+');
    witness_text(out, schemas, c.negative, '-');
  }

  if (r.certificate) {
    out << "certificate: " << r.certificate->statement() << "\n";
  } else {
    out << "certificate: withheld\n";
  }

  for (const auto& p : r.policies) {
    out << "policy " << p.policy.name() << ": " << (p.passed ? "pass" : "FAIL");
    for (const auto& v : p.violations) out << "  " << policy_name(v.policy) << " [" << join(v.names, ", ") << "]";
    out << "\n";
  }

  for (const auto& e : r.expectations) {
    out << "expect " << e.label << ": " << e.expected;
    if (e.ok) {
      out << "  ok\n";
    } else {
      out << "  MISMATCH (got " << e.actual << ")\n";
    }
  }
}

}  // namespace

std::string write_report(const CheckReport& report, Format format) {
  if (format == Format::Json) return report_json(report).dump() + "\n";
  std::ostringstream out;
  report_text(out, report);
  out << kVersion << "\n";
  return out.str();
}

std::string write_table(const CheckReport& report, Format format) {
  if (format == Format::Json) return table_json(report.table).dump() + "\n";
  std::ostringstream out;
  table_text(out, report.table);
  return out.str();
}

std::string write_trace(const Model& model, const Instance& inst) {
  const auto ev = evaluate_instance(model, inst);
  const auto& schema = model.schemas().get(inst.schema);
  std::ostringstream out;
  out << render_instance_spec(inst) << (is_csi(inst) ? "" : "  (not coordinated)") << "\n";
  out << render_instance(model.schemas(), inst) << "\n";
  out << render_trace(model.schemas(), ev.trace);
  out << "verdict: " << render(inst.x) << " is" << (ev.verdict.value ? "" : " not") << " "
      << schema.predicate << " per this instance: " << render(ev.verdict) << "\n";
  return out.str();
}

std::string write_repro(const ReproReport& report, Format format) {
  if (format == Format::Json) {
    json j;
    json scenarios = json::array();
    for (const auto& r : report.scenarios) scenarios.push_back(report_json(r));
    j["scenarios"] = scenarios;
    j["ok"] = report.ok();
    j["version"] = std::string(kVersion);
    return j.dump() + "\n";
  }

  std::ostringstream out;
  std::vector<std::string> summary;
  std::vector<std::string> seen;
  std::vector<std::string> deictic;
  std::size_t failures = 0;
  for (const auto& r : report.scenarios) {
    out << "== " << r.scenario.name << " (" << r.scenario.schema << ", mode "
        << mode_name(r.scenario.mode) << ", depth " << r.scenario.depth << ")\n";
    for (const auto& e : r.expectations) {
      out << "  " << (e.ok ? "ok   " : "FAIL ") << e.label << ": expected " << e.expected;
      if (!e.ok) out << ", got " << e.actual;
      out << "\n";
      if (!e.ok) ++failures;
    }
    const Model model = r.scenario.model();
    for (const auto& e : r.scenario.expected_verdicts) {
      if (std::find(seen.begin(), seen.end(), e.label) != seen.end()) continue;
      seen.push_back(e.label);
      const auto got = evaluate_instance(model, e.instance).verdict;
      summary.push_back(e.label + " " + (got.value ? "T" : "F"));
    }
    for (const auto& e : r.scenario.expected_deictic) {
      deictic.push_back(e.label + " " + std::string(deictic_name(evaluate_deictic(model, e.subject))));
    }
    std::size_t unlisted = std::count(r.listed.begin(), r.listed.end(), false);
    if (!r.scenario.expected_conflicts.empty() && unlisted > 0) {
      out << "  note: " << unlisted << " further conflict(s) reported beyond the listed ones\n";
    }
  }
  out << "verdicts: " << join(summary, ", ") << "\n";
  if (!deictic.empty()) out << "deictic: " << join(deictic, ", ") << "\n";
  out << (failures == 0 ? "result: all expectations met\n"
                        : "result: " + std::to_string(failures) + " expectation(s) not met\n");
  out << kVersion << "\n";
  return out.str();
}

ReproReport run_repro(std::span<const Scenario> scenarios) {
  ReproReport report;
  for (const auto& s : scenarios) report.scenarios.push_back(run_check(s));
  return report;
}

std::vector<Scenario> load_builtin_scenarios() {
  std::vector<Scenario> out;
  for (const auto& b : builtin_scenarios()) out.push_back(parse_scenario(b.text));
  return out;
}

}  // namespace selfref
