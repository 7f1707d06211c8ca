#pragma once

// Evaluation of schema instances to verdicts, with derivation traces.
//
// An instance Phi(x, y) says: x is P iff <subject> is the first term in S,
// if S is the coordinated instance in which y is the first term. The
// description is resolved through what y denotes: the coordinated instance
// whose first term is that expression. The consequent then holds iff the
// subject denotes exactly the expression standing first in the resolvent.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "selfref/naming.hpp"
#include "selfref/syntax.hpp"

namespace selfref {

/// Two-valued, with a flag for the case where the embedded conditional held
/// only because the description picked out nothing. vacuous implies value.
struct Verdict {
  bool value = false;
  bool vacuous = false;

  static Verdict truth(bool v) { return {v, false}; }
  static Verdict vacuous_truth() { return {true, true}; }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

std::string render(const Verdict& v);

namespace step {

struct YSlotDenotation {
  Term term;
  Referent referent;
  friend bool operator==(const YSlotDenotation&, const YSlotDenotation&) = default;
};
struct DescriptionResolved {
  Instance resolvent;
  friend bool operator==(const DescriptionResolved&, const DescriptionResolved&) = default;
};
struct DescriptionEmpty {
  friend bool operator==(const DescriptionEmpty&, const DescriptionEmpty&) = default;
};
struct ConsequentSubject {
  Term term;
  Referent referent;
  friend bool operator==(const ConsequentSubject&, const ConsequentSubject&) = default;
};
/// `expected` is what the consequent subject denotes, `actual` the
/// resolvent's first term.
struct FirstTermComparison {
  Referent expected;
  Term actual;
  bool match;
  friend bool operator==(const FirstTermComparison&, const FirstTermComparison&) = default;
};
struct VacuityApplied {
  friend bool operator==(const VacuityApplied&, const VacuityApplied&) = default;
};
struct DQApplied {
  IdentityFact identity;
  friend bool operator==(const DQApplied&, const DQApplied&) = default;
};
struct LeibnizApplied {
  Term from;
  Term to;
  friend bool operator==(const LeibnizApplied&, const LeibnizApplied&) = default;
};

}  // namespace step

using TraceStep = std::variant<step::YSlotDenotation, step::DescriptionResolved, step::DescriptionEmpty,
                               step::ConsequentSubject, step::FirstTermComparison,
                               step::VacuityApplied, step::DQApplied, step::LeibnizApplied>;

struct Trace {
  std::vector<TraceStep> steps;
  friend bool operator==(const Trace&, const Trace&) = default;
};

/// Short rule tag for a step, e.g. "denote", "describe", "vacuity".
std::string_view step_rule(const TraceStep& s);
/// One line of prose for a step.
std::string render_step(const SchemaRegistry& schemas, const TraceStep& s);
/// Numbered lines, one per step.
std::string render_trace(const SchemaRegistry& schemas, const Trace& trace);

/// The coordinated instance whose first term is the expression `y`
/// denotes; std::nullopt when `y` denotes a non-linguistic object.
std::optional<Instance> resolve_description(const Model& model, std::string_view schema,
                                            const Term& y);

/// The term whose denotation the consequent compares against the
/// resolvent's first term.
const Term& consequent_subject(const SchemaTemplate& schema, const Instance& inst);

struct Evaluation {
  Verdict verdict;
  Trace trace;
};

/// Throws UnstipulatedName or UnknownSchema.
Evaluation evaluate_instance(const Model& model, const Instance& inst);

/// Re-derives the verdict from a trace produced by evaluate_instance,
/// checking every denotation and resolution it records against `model`.
/// Throws std::logic_error on the first step that does not replay.
Verdict replay_trace(const Model& model, const Instance& inst, const Trace& trace);

struct PlainEvaluation {
  friend bool operator==(const PlainEvaluation&, const PlainEvaluation&) = default;
};
struct LeibnizTransfer {
  IdentityFact identity;
  friend bool operator==(const LeibnizTransfer&, const LeibnizTransfer&) = default;
};
using Route = std::variant<PlainEvaluation, LeibnizTransfer>;

/// A verdict about the predicate holding of `subject`, with its provenance.
struct AttributedVerdict {
  Term subject;
  Referent object;  // denote(subject)
  Verdict verdict;
  Instance source;
  Route route;
  Trace trace;
};

/// Evaluates `inst` and attributes the verdict to its x-slot term.
AttributedVerdict attribute(const Model& model, const Instance& inst);

/// Carries the attribution over to a co-denoting subject term. The instance
/// is left alone; only the predication moves. Throws NotCoreferent.
AttributedVerdict leibniz_transfer(const Model& model, const AttributedVerdict& av,
                                   const Term& to);

enum class DeicticOutcome { True, False, Indeterminate };

std::string_view deictic_name(DeicticOutcome o);

/// `subject` replaces x in the self-describing open formula; std::nullopt
/// models a variable that only has an assignment and no replacement.
DeicticOutcome evaluate_deictic(const Model& model, const std::optional<Term>& subject);

}  // namespace selfref
