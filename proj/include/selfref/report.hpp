#pragma once

// Running scenarios and serializing the results.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "selfref/analyzer.hpp"
#include "selfref/naming.hpp"
#include "selfref/scenario.hpp"

namespace selfref {

inline constexpr std::string_view kVersion = "selfref 1.0.0";

enum class Format { Text, Json };

struct ExpectationResult {
  std::string label;     // e.g. "(7) CSI(d)" or "conflict leibniz CSI(d) / CSI('d')"
  std::string expected;
  std::string actual;
  bool ok = false;
};

struct CheckReport {
  Scenario scenario;
  VerdictTable table;
  std::vector<ConflictReport> conflicts;
  /// Parallel to `conflicts`: whether an `expect conflict` line names it.
  std::vector<bool> listed;
  std::optional<Certificate> certificate;
  std::vector<PolicyReport> policies;
  std::vector<ExpectationResult> expectations;

  /// 0 when a certificate was issued, 2 when conflicts were found.
  int exit_code() const { return certificate ? 0 : 2; }
  bool expectations_met() const;
};

/// Builds the model, the verdict table, conflicts, certificate, policy
/// results and expectation checks. Errors propagate as selfref::Error.
CheckReport run_check(const Scenario& scenario, ConflictOptions options = {});

/// Byte-stable for equal inputs. JSON top-level keys: scenario, table,
/// conflicts, certificate, policies, [expectations,] traces, version.
std::string write_report(const CheckReport& report, Format format);
std::string write_table(const CheckReport& report, Format format);

/// Renders one instance with its numbered trace and final verdict.
std::string write_trace(const Model& model, const Instance& inst);

struct ReproReport {
  std::vector<CheckReport> scenarios;
  bool ok() const;
  int exit_code() const { return ok() ? 0 : 2; }
};

/// The built-in reproduction scenarios, as scenario-file text.
struct BuiltinScenario {
  std::string_view file_name;
  std::string_view text;
};
std::span<const BuiltinScenario> builtin_scenarios();
std::vector<Scenario> load_builtin_scenarios();

ReproReport run_repro(std::span<const Scenario> scenarios);
std::string write_repro(const ReproReport& report, Format format);

}  // namespace selfref
