#pragma once

// Verdict tables over bounded term universes, noncontradiction checking and
// consistency certificates.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "selfref/evaluator.hpp"
#include "selfref/naming.hpp"
#include "selfref/syntax.hpp"

namespace selfref {

/// Which substitution instances count as laying down a condition.
///   CsiOnly       Phi(a, 'a') for every a in the universe.
///   AllInstances  Phi(x, y) for x in the universe and y in the universe
///                 extended by one quotation level, so that every CsiOnly
///                 instance is also an AllInstances instance.
enum class Mode { CsiOnly, AllInstances };

std::string_view mode_name(Mode m);  // "csi" / "all"
std::optional<Mode> parse_mode(std::string_view text);

struct TableRow {
  Instance instance;
  bool csi = false;
  Term subject;
  Referent object;
  Verdict verdict;
  std::size_t trace_id = 0;
};

struct VerdictTable {
  std::string schema;
  Mode mode = Mode::CsiOnly;
  std::vector<std::string> names;
  std::size_t depth = 0;
  std::vector<TableRow> rows;
  std::vector<Trace> traces;  // indexed by TableRow::trace_id

  /// Row indices grouped by subject referent, each group in row order.
  std::map<Referent, std::vector<std::size_t>> rows_by_object() const;
};

/// Throws UnstipulatedName or UnknownSchema. Rows appear in universe order
/// (x-major, then y for AllInstances). An empty name list gives an empty
/// table.
VerdictTable verdict_table(const Model& model, std::string_view schema, Mode mode,
                           std::span<const std::string> names, std::size_t depth);

enum class ConflictKind { Direct, Leibniz };

std::string_view conflict_kind_name(ConflictKind k);  // "direct" / "leibniz"

/// Opposite verdicts on one object. For Direct both witnesses share a
/// subject term. For Leibniz the positive witness has been transferred onto
/// the negative witness's subject through `identity`.
struct ConflictReport {
  Referent object;
  ConflictKind kind;
  AttributedVerdict positive;
  AttributedVerdict negative;
  std::optional<IdentityFact> identity;  // set for Leibniz
  std::size_t positive_row = 0;
  std::size_t negative_row = 0;

  /// The subject the positive verdict was originally evaluated for.
  const Term& positive_subject() const { return positive.source.x; }
};

struct ConflictOptions {
  bool include_vacuous = false;
};

/// One report per (positive subject, negative subject) pair on the same
/// object. Witnesses prefer coordinated instances, then instances whose
/// y-slot is a quote-name, then earlier rows. Sorted by object, kind,
/// positive subject, negative subject.
std::vector<ConflictReport> find_conflicts(const VerdictTable& table, const Model& model,
                                           ConflictOptions options = {});

/// Claims consistency only up to the stated bound.
struct Certificate {
  std::string schema;
  Mode mode = Mode::CsiOnly;
  std::vector<std::string> names;
  std::size_t depth = 0;
  std::size_t instances_checked = 0;

  std::string statement() const;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

using ConsistencyResult = std::variant<Certificate, std::vector<ConflictReport>>;

ConsistencyResult consistency_certificate(const Model& model, std::string_view schema, Mode mode,
                                          std::span<const std::string> names, std::size_t depth,
                                          ConflictOptions options = {});

/// Same as above for an already-built table.
ConsistencyResult consistency_certificate(const VerdictTable& table, const Model& model,
                                          ConflictOptions options = {});

/// The terms a of the universe whose coordinated instance comes out
/// non-vacuously true.
std::vector<Term> characterize_exceptions(const Model& model, std::string_view schema,
                                          std::span<const std::string> names, std::size_t depth);

}  // namespace selfref
