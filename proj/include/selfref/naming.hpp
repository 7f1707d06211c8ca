#pragma once

// Naming stipulations and the denotation function.

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "selfref/syntax.hpp"

namespace selfref {

/// What a term denotes: a linguistic expression, or an opaque object with
/// no internal structure. The two namespaces never compare equal.
class Referent {
 public:
  static Referent expression(Term t) { return Referent(std::move(t)); }
  static Referent object(std::string id);

  bool is_expression() const noexcept { return std::holds_alternative<Term>(value_); }
  bool is_object() const noexcept { return !is_expression(); }
  /// Precondition: is_expression().
  const Term& term() const { return std::get<Term>(value_); }
  /// Precondition: is_object().
  const std::string& object_id() const { return std::get<std::string>(value_); }

  friend bool operator==(const Referent&, const Referent&) = default;
  friend std::strong_ordering operator<=>(const Referent& a, const Referent& b);

 private:
  explicit Referent(Term t) : value_(std::move(t)) {}
  explicit Referent(std::string id) : value_(std::move(id)) {}

  std::variant<Term, std::string> value_;
};

/// Scenario-file form: `term <t>` or `obj <id>`.
std::string render(const Referent& r);
/// Short form for traces: the bare expression, or `obj <id>`.
std::string describe(const Referent& r);

struct Stipulation {
  std::string name;
  Referent referent;
  friend bool operator==(const Stipulation&, const Stipulation&) = default;
};

/// An immutable assignment of referents to atomic names, together with the
/// schemas that may be instantiated against it.
class Model {
 public:
  /// Throws InvalidIdentifier or DuplicateStipulation.
  static Model build(std::vector<Stipulation> stipulations, SchemaRegistry schemas = {});

  const std::vector<Stipulation>& stipulations() const noexcept { return stipulations_; }
  const SchemaRegistry& schemas() const noexcept { return schemas_; }
  /// nullptr when `name` is unstipulated.
  const Referent* find(std::string_view name) const;
  bool stipulated(std::string_view name) const { return find(name) != nullptr; }
  std::vector<std::string> names() const;

 private:
  Model() = default;

  std::vector<Stipulation> stipulations_;  // in stipulation order
  SchemaRegistry schemas_;
};

/// Quote(u) denotes u, whatever the model says. Atomic(n) denotes its
/// stipulated referent; throws UnstipulatedName otherwise.
Referent denote(const Model& model, const Term& t);

/// Throws UnstipulatedName.
bool is_self_referring(const Model& model, std::string_view name);

/// Truth of the identity sentence `t1 = t2`.
bool coreferent(const Model& model, const Term& t1, const Term& t2);

enum class Justification { DQ, Stipulated };

std::string_view justification_name(Justification j);

struct IdentityFact {
  Term left;
  Term right;
  Justification justification;
  friend bool operator==(const IdentityFact&, const IdentityFact&) = default;
};

/// `left = right`, e.g. d = 'd'.
std::string render(const IdentityFact& fact);

/// One identity per term-valued stipulation: from "n names u" infer the
/// sentence n = 'u'. Object-valued stipulations contribute nothing.
std::vector<IdentityFact> dq_identities(const Model& model);

/// The identity sentence t1 = t2 when it holds, justified by disquotation
/// if the shared referent is an expression and by stipulation otherwise.
std::optional<IdentityFact> derive_identity(const Model& model, const Term& t1, const Term& t2);

/// Cycles of the graph n -> m where n names the atomic expression m. Each
/// cycle starts at its least name; cycles are sorted.
std::vector<std::vector<std::string>> detect_cycles(const Model& model);

// ---------------------------------------------------------------------------
// Restriction policies

enum class PolicyKind { NoSelfReference, NoNamingCycles, InjectiveNaming, NoTermValuedNames };

std::string_view policy_name(PolicyKind kind);
std::optional<PolicyKind> parse_policy_kind(std::string_view text);

/// A conjunction of restrictions, kept sorted and free of repeats.
class Policy {
 public:
  Policy() = default;
  Policy(PolicyKind kind) : conjuncts_{kind} {}  // NOLINT(google-explicit-constructor)
  Policy(std::initializer_list<PolicyKind> kinds);

  const std::vector<PolicyKind>& conjuncts() const noexcept { return conjuncts_; }
  /// `no-self-reference & injective-naming`.
  std::string name() const;
  /// Inverse of name(); std::nullopt on an unknown conjunct.
  static std::optional<Policy> parse(std::string_view text);

  friend Policy operator&(const Policy& a, const Policy& b);
  friend bool operator==(const Policy&, const Policy&) = default;

 private:
  std::vector<PolicyKind> conjuncts_;
};

struct PolicyViolation {
  PolicyKind policy;
  std::vector<std::string> names;
  friend bool operator==(const PolicyViolation&, const PolicyViolation&) = default;
};

struct PolicyReport {
  Policy policy;
  bool passed = true;
  std::vector<PolicyViolation> violations;
};

PolicyReport check_policy(const Model& model, const Policy& policy);

}  // namespace selfref
