#pragma once

// Independent reference semantics used by the tests. Denotation is
// recomputed here from the rendered apostrophe syntax and a plain string
// table, without going through selfref::denote, resolve_description or
// evaluate_instance.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "selfref/naming.hpp"
#include "selfref/syntax.hpp"

namespace oracle {

/// name -> "E:<expression>" or "O:<object id>".
using Table = std::map<std::string, std::string>;

inline Table table_of(const std::vector<selfref::Stipulation>& stips) {
  Table t;
  for (const auto& s : stips) {
    t[s.name] = s.referent.is_expression() ? "E:" + selfref::render(s.referent.term())
                                            : "O:" + s.referent.object_id();
  }
  return t;
}

/// Denotation key of a rendered term; nullopt when an atomic name is
/// unstipulated.
inline std::optional<std::string> denote(const Table& t, const std::string& rendered) {
  if (rendered.size() >= 2 && rendered.front() == '\'') {
    return "E:" + rendered.substr(1, rendered.size() - 2);
  }
  auto it = t.find(rendered);
  if (it == t.end()) return std::nullopt;
  return it->second;
}

struct Outcome {
  bool value;
  bool vacuous;
  bool operator==(const Outcome&) const = default;
};

/// Closed-form rule: vacuous iff y denotes an object; otherwise true iff the
/// consequent subject and y denote the same thing.
inline Outcome closed_form(const Table& t, const std::string& subject, const std::string& y) {
  const auto dy = denote(t, y);
  if (dy->rfind("O:", 0) == 0) return {true, true};
  return {denote(t, subject) == dy, false};
}

/// Rendered consequent subject for the two built-in schemas.
inline std::string subject_of(const std::string& schema, const std::string& x) {
  return schema == "LAPUTAN" ? std::string("'a'") : x;
}

/// Brute-force description resolution: scan every coordinated instance over
/// the bounded universe for those whose first term is the expression y
/// denotes. Returns the first terms found (rendered).
inline std::vector<std::string> scan_resolvents(const Table& t, const std::vector<std::string>& names,
                                                std::size_t depth, const std::string& y) {
  std::vector<std::string> found;
  const auto dy = denote(t, y);
  for (const auto& n : names) {
    std::string term = n;
    for (std::size_t k = 0; k <= depth; ++k) {
      if (dy && *dy == "E:" + term) found.push_back(term);
      term = "'" + term + "'";
    }
  }
  return found;
}

}  // namespace oracle
