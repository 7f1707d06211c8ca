#include "selfref/syntax.hpp"

#include <algorithm>
#include <cctype>

#include "selfref/error.hpp"

namespace selfref {

bool is_valid_identifier(std::string_view text) {
  if (text.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(text.front()))) return false;
  return std::all_of(text.begin() + 1, text.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Term Term::atomic(std::string name) {
  if (!is_valid_identifier(name)) {
    throw Error(ErrorKind::InvalidIdentifier, "invalid identifier '" + name + "'");
  }
  return Term(std::move(name), 0);
}

Term quote(const Term& t) { return Term(t.name_, t.depth_ + 1); }

Term unquote(const Term& t) {
  if (t.is_atomic()) {
    throw Error(ErrorKind::NotAQuotation, "'" + t.name_ + "' is atomic and has no inner term");
  }
  return Term(t.name_, t.depth_ - 1);
}

Term parse_term(std::string_view text) {
  if (text.empty()) throw Error(ErrorKind::SyntaxError, "empty term");

  std::size_t open = 0;
  while (open < text.size() && text[open] == '\'') ++open;
  std::size_t close = 0;
  while (close < text.size() - open && text[text.size() - 1 - close] == '\'') ++close;

  const std::string_view core = text.substr(open, text.size() - open - close);
  if (core.empty()) {
    throw Error(ErrorKind::SyntaxError, "term '" + std::string(text) + "' has no name");
  }
  if (open != close) {
    throw Error(ErrorKind::SyntaxError, "unbalanced quotation marks in '" + std::string(text) + "'");
  }
  if (!is_valid_identifier(core)) {
    throw Error(ErrorKind::SyntaxError, "illegal identifier '" + std::string(core) + "'");
  }
  Term t = Term::atomic(std::string(core));
  for (std::size_t i = 0; i < open; ++i) t = quote(t);
  return t;
}

std::string render(const Term& t) {
  const std::string marks(t.depth(), '\'');
  return marks + t.base() + marks;
}

std::vector<Term> term_universe(std::span<const std::string> names, std::size_t max_depth) {
  std::vector<Term> out;
  out.reserve(names.size() * (max_depth + 1));
  for (const auto& n : names) {
    Term t = Term::atomic(n);
    for (std::size_t k = 0; k <= max_depth; ++k) {
      out.push_back(t);
      t = quote(t);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

SchemaTemplate lagadonian_schema() {
  return SchemaTemplate{std::string(kLagadonian), "Lagadonian", "(*)", XSlot{}};
}

SchemaTemplate laputan_schema() {
  return SchemaTemplate{std::string(kLaputan), "Laputan", "(†)",
                        ConstSubject{quote(Term::atomic("a"))}};
}

std::string normalize_schema_id(std::string_view id) {
  std::string out(id);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

SchemaRegistry::SchemaRegistry() {
  schemas_.emplace(std::string(kLagadonian), lagadonian_schema());
  schemas_.emplace(std::string(kLaputan), laputan_schema());
}

void SchemaRegistry::add(SchemaTemplate schema) {
  if (!is_valid_identifier(schema.id)) {
    throw Error(ErrorKind::InvalidIdentifier, "invalid schema id '" + schema.id + "'");
  }
  schema.id = normalize_schema_id(schema.id);
  if (schemas_.contains(schema.id)) {
    throw Error(ErrorKind::InvalidIdentifier, "schema '" + schema.id + "' is already registered");
  }
  auto id = schema.id;
  schemas_.emplace(std::move(id), std::move(schema));
}

bool SchemaRegistry::contains(std::string_view id) const {
  return schemas_.contains(normalize_schema_id(id));
}

const SchemaTemplate& SchemaRegistry::get(std::string_view id) const {
  auto it = schemas_.find(normalize_schema_id(id));
  if (it == schemas_.end()) {
    throw Error(ErrorKind::UnknownSchema, "unknown schema '" + std::string(id) + "'");
  }
  return it->second;
}

std::vector<std::string> SchemaRegistry::ids() const {
  std::vector<std::string> out;
  for (const auto& [id, _] : schemas_) out.push_back(id);
  return out;
}

// ---------------------------------------------------------------------------

Instance make_instance(const SchemaRegistry& schemas, std::string_view schema, Term x, Term y) {
  return Instance{schemas.get(schema).id, std::move(x), std::move(y)};
}

Instance make_csi(const SchemaRegistry& schemas, std::string_view schema, const Term& alpha) {
  return make_instance(schemas, schema, alpha, quote(alpha));
}

std::string render_instance(const SchemaRegistry& schemas, const Instance& inst) {
  const SchemaTemplate& s = schemas.get(inst.schema);
  const Term& subject =
      std::holds_alternative<XSlot>(s.subject) ? inst.x : std::get<ConstSubject>(s.subject).term;
  return render(inst.x) + " is " + s.predicate + " iff: " + render(subject) +
         " is the first term in S, if S is the coordinated substitution instance of " + s.label +
         " in which " + render(inst.y) + " is the first term.";
}

std::string render_instance_spec(const Instance& inst) {
  if (is_csi(inst)) return "CSI(" + render(inst.x) + ")";
  return "Phi(" + render(inst.x) + ", " + render(inst.y) + ")";
}

namespace {

void skip_space(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

void expect_char(std::string_view text, std::size_t& pos, char c) {
  skip_space(text, pos);
  if (pos >= text.size() || text[pos] != c) {
    throw Error(ErrorKind::SyntaxError,
                std::string("expected '") + c + "' in instance spec '" + std::string(text) + "'");
  }
  ++pos;
}

Term read_term(std::string_view text, std::size_t& pos) {
  skip_space(text, pos);
  const std::size_t start = pos;
  while (pos < text.size() && text[pos] != ',' && text[pos] != ')' &&
         !std::isspace(static_cast<unsigned char>(text[pos]))) {
    ++pos;
  }
  return parse_term(text.substr(start, pos - start));
}

}  // namespace

Instance parse_instance_spec(std::string_view text, std::size_t& pos, std::string_view schema) {
  skip_space(text, pos);
  const std::size_t start = pos;
  while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
  const std::string head = normalize_schema_id(text.substr(start, pos - start));

  expect_char(text, pos, '(');
  Term x = read_term(text, pos);
  if (head == "CSI") {
    expect_char(text, pos, ')');
    Term y = quote(x);
    return Instance{normalize_schema_id(schema), std::move(x), std::move(y)};
  }
  if (head == "PHI") {
    expect_char(text, pos, ',');
    Term y = read_term(text, pos);
    expect_char(text, pos, ')');
    return Instance{normalize_schema_id(schema), std::move(x), std::move(y)};
  }
  throw Error(ErrorKind::SyntaxError,
              "instance spec must be CSI(<term>) or Phi(<term>, <term>), got '" + std::string(text) +
                  "'");
}

Instance parse_instance_spec(std::string_view text, std::string_view schema) {
  std::size_t pos = 0;
  Instance inst = parse_instance_spec(text, pos, schema);
  skip_space(text, pos);
  if (pos != text.size()) {
    throw Error(ErrorKind::SyntaxError, "trailing text in instance spec '" + std::string(text) + "'");
  }
  return inst;
}

std::string render_deictic(const DeicticInstance& inst) {
  return render(inst.subject) + " is the first term of this very substitution instance of (#).";
}

}  // namespace selfref
