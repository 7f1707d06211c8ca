#pragma once

// Object-language syntax: terms, definition schemas and their substitution
// instances. Everything here is purely syntactic; nothing consults what a
// name denotes.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace selfref {

bool is_valid_identifier(std::string_view text);

/// A term is an atomic name wrapped in zero or more quotation marks.
///
/// The grammar has exactly two constructors, Atomic(name) and Quote(term),
/// so every term is Quote^k(Atomic(name)) and is stored as (name, k).
/// Equality is type identity: two terms are equal iff they are spelled the
/// same. There is no notion of a token or occurrence.
class Term {
 public:
  /// Throws InvalidIdentifier unless `name` matches [A-Za-z][A-Za-z0-9_]*.
  static Term atomic(std::string name);

  bool is_atomic() const noexcept { return depth_ == 0; }
  std::size_t depth() const noexcept { return depth_; }
  /// The atomic name at the core of the term.
  const std::string& base() const noexcept { return name_; }

  friend bool operator==(const Term&, const Term&) = default;
  friend std::strong_ordering operator<=>(const Term&, const Term&) = default;

 private:
  friend Term quote(const Term& t);
  friend Term unquote(const Term& t);

  Term(std::string name, std::size_t depth) : name_(std::move(name)), depth_(depth) {}

  std::string name_;
  std::size_t depth_ = 0;
};

Term quote(const Term& t);
/// Strips one quotation. Throws NotAQuotation on an atomic term.
Term unquote(const Term& t);

/// Apostrophe syntax: `d`, `'d'`, `''d''`. Throws SyntaxError.
Term parse_term(std::string_view text);
std::string render(const Term& t);

/// Quote^k(Atomic(n)) for each n in `names` (in order), 0 <= k <= max_depth.
std::vector<Term> term_universe(std::span<const std::string> names, std::size_t max_depth);

// ---------------------------------------------------------------------------
// Schemas

/// The consequent subject is whatever term fills the x-slot.
struct XSlot {
  friend bool operator==(const XSlot&, const XSlot&) = default;
};

/// The consequent subject is a fixed term, independent of the slots.
struct ConstSubject {
  Term term;
  friend bool operator==(const ConstSubject&, const ConstSubject&) = default;
};

using SubjectSelector = std::variant<XSlot, ConstSubject>;

/// A definition schema of the shape
///   x is P iff: <subject> is the first term in S,
///     if S is the coordinated substitution instance of (label) in which y is the first term.
/// Only x and y are substitutable; S is bound by the description.
struct SchemaTemplate {
  std::string id;         // upper-case key, e.g. LAGADONIAN
  std::string predicate;  // display form, e.g. Lagadonian
  std::string label;      // display form of the schema's own name, e.g. (*)
  SubjectSelector subject;

  friend bool operator==(const SchemaTemplate&, const SchemaTemplate&) = default;
};

inline constexpr std::string_view kLagadonian = "LAGADONIAN";
inline constexpr std::string_view kLaputan = "LAPUTAN";

SchemaTemplate lagadonian_schema();
/// Consequent subject is the quote-name 'a'.
SchemaTemplate laputan_schema();

std::string normalize_schema_id(std::string_view id);

/// Schemas known to a model. Always contains the two built-ins.
class SchemaRegistry {
 public:
  SchemaRegistry();

  /// Throws InvalidIdentifier for a malformed id or one already registered.
  void add(SchemaTemplate schema);
  bool contains(std::string_view id) const;
  /// Throws UnknownSchema.
  const SchemaTemplate& get(std::string_view id) const;
  std::vector<std::string> ids() const;

  friend bool operator==(const SchemaRegistry&, const SchemaRegistry&) = default;

 private:
  std::map<std::string, SchemaTemplate, std::less<>> schemas_;
};

// ---------------------------------------------------------------------------
// Instances

/// Phi(x, y): a schema with both free variables replaced. The x-slot is the
/// leftmost term position of every rendered instance.
struct Instance {
  std::string schema;
  Term x;
  Term y;

  friend bool operator==(const Instance&, const Instance&) = default;
  friend std::strong_ordering operator<=>(const Instance&, const Instance&) = default;
};

/// Throws UnknownSchema. Makes no admissibility judgment.
Instance make_instance(const SchemaRegistry& schemas, std::string_view schema, Term x, Term y);
/// Phi(alpha, 'alpha').
Instance make_csi(const SchemaRegistry& schemas, std::string_view schema, const Term& alpha);

inline bool is_csi(const Instance& inst) { return inst.y == quote(inst.x); }
inline const Term& first_term(const Instance& inst) { return inst.x; }

/// English rendering in the schema's own layout.
std::string render_instance(const SchemaRegistry& schemas, const Instance& inst);

/// Compact form used on the command line and in scenario files:
/// `CSI(<term>)` or `Phi(<term>, <term>)`.
std::string render_instance_spec(const Instance& inst);

/// Parses an instance spec starting at `pos` (whitespace skipped) and
/// advances `pos` past it. Throws SyntaxError.
Instance parse_instance_spec(std::string_view text, std::size_t& pos, std::string_view schema);
/// Whole-string variant; trailing garbage is a SyntaxError.
Instance parse_instance_spec(std::string_view text, std::string_view schema);

/// An instance of the open formula
///   x is the first term of this very substitution instance of (#).
/// whose description denotes the containing sentence itself.
struct DeicticInstance {
  Term subject;
  friend bool operator==(const DeicticInstance&, const DeicticInstance&) = default;
};

inline const Term& first_term(const DeicticInstance& inst) { return inst.subject; }
std::string render_deictic(const DeicticInstance& inst);

}  // namespace selfref
