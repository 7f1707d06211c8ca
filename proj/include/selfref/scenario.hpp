#pragma once

// Line-oriented scenario files.
//
//   # comment
//   name <scenario-name>
//   stipulate <name> -> term <term>
//   stipulate <name> -> obj <object-id>
//   define-schema <id> <predicate> x
//   define-schema <id> <predicate> const <term>
//   schema <id>
//   mode csi|all
//   universe <name>...            (default: every stipulated name)
//   depth <k>
//   policy <policy> [& <policy>...]
//   expect verdict <label> <instance> true|false|vacuous
//   expect conflict direct|leibniz <positive-instance> <negative-instance>
//   expect no-other-conflicts
//   expect certificate
//   expect deictic <label> <term>|open true|false|indeterminate
//
// Instances are written CSI(<term>) or Phi(<term>, <term>).

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "selfref/analyzer.hpp"
#include "selfref/evaluator.hpp"
#include "selfref/naming.hpp"
#include "selfref/syntax.hpp"

namespace selfref {

struct VerdictExpectation {
  std::string label;
  Instance instance;
  Verdict verdict;
  friend bool operator==(const VerdictExpectation&, const VerdictExpectation&) = default;
};

struct ConflictExpectation {
  ConflictKind kind;
  Instance positive;
  Instance negative;
  friend bool operator==(const ConflictExpectation&, const ConflictExpectation&) = default;
};

struct DeicticExpectation {
  std::string label;
  std::optional<Term> subject;  // nullopt: open formula
  DeicticOutcome outcome;
  friend bool operator==(const DeicticExpectation&, const DeicticExpectation&) = default;
};

struct Scenario {
  std::string name;
  std::vector<Stipulation> stipulations;
  std::vector<SchemaTemplate> custom_schemas;
  std::string schema = std::string(kLagadonian);
  Mode mode = Mode::CsiOnly;
  std::vector<std::string> universe;  // empty: all stipulated names
  std::size_t depth = 1;
  std::vector<Policy> policies;

  std::vector<VerdictExpectation> expected_verdicts;
  std::vector<ConflictExpectation> expected_conflicts;
  bool no_other_conflicts = false;
  bool expect_certificate = false;
  std::vector<DeicticExpectation> expected_deictic;

  bool has_expectations() const {
    return !expected_verdicts.empty() || !expected_conflicts.empty() || no_other_conflicts ||
           expect_certificate || !expected_deictic.empty();
  }
  /// The universe names actually analysed.
  std::vector<std::string> universe_names() const;
  SchemaRegistry registry() const;
  /// Throws DuplicateStipulation / InvalidIdentifier.
  Model model() const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Throws SyntaxError (with line), DuplicateStipulation, UnknownSchema,
/// InvalidIdentifier or UnstipulatedName (universe name without a
/// stipulation).
Scenario parse_scenario(std::string_view text);
/// Throws IOError when the file cannot be read, otherwise as parse_scenario.
Scenario load_scenario(const std::filesystem::path& path);
/// Canonical text; parse_scenario(write_scenario(s)) == s.
std::string write_scenario(const Scenario& s);

}  // namespace selfref
