#include "selfref/scenario.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "selfref/error.hpp"

namespace selfref {

std::vector<std::string> Scenario::universe_names() const {
  if (!universe.empty()) return universe;
  std::vector<std::string> out;
  for (const auto& s : stipulations) out.push_back(s.name);
  return out;
}

SchemaRegistry Scenario::registry() const {
  SchemaRegistry reg;
  for (const auto& s : custom_schemas) reg.add(s);
  return reg;
}

Model Scenario::model() const { return Model::build(stipulations, registry()); }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

// Reads one whitespace-delimited word starting at pos.
std::string_view next_word(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  const std::size_t start = pos;
  while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  return s.substr(start, pos - start);
}

class Parser {
 public:
  Scenario run(std::string_view text) {
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t nl = text.find('\n', pos);
      if (nl == std::string_view::npos) nl = text.size();
      ++line_no;
      line_ = line_no;
      std::string_view line = text.substr(pos, nl - pos);
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      line = trim(line);
      if (!line.empty()) directive(line);
      pos = nl + 1;
    }
    finish();
    return std::move(s_);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::SyntaxError, msg, line_);
  }

  // Rethrows library errors with the current line attached.
  template <class F>
  auto at_line(F&& f) const {
    try {
      return f();
    } catch (const Error& e) {
      if (e.line() != 0) throw;
      std::string msg = e.what();
      if (auto colon = msg.find(": "); colon != std::string::npos) msg = msg.substr(colon + 2);
      throw Error(e.kind(), msg, line_);
    }
  }

  Term term(std::string_view text) const {
    return at_line([&] { return parse_term(text); });
  }

  void directive(std::string_view line) {
    const auto words = split_words(line);
    const std::string_view head = words.front();
    if (head == "name") {
      if (words.size() < 2) fail("name needs a value");
      s_.name = std::string(trim(line.substr(4)));
    } else if (head == "stipulate") {
      stipulate(words);
    } else if (head == "define-schema") {
      define_schema(words);
    } else if (head == "schema") {
      if (words.size() != 2) fail("usage: schema <id>");
      s_.schema = normalize_schema_id(words[1]);
      schema_line_ = line_;
    } else if (head == "mode") {
      if (words.size() != 2) fail("usage: mode csi|all");
      auto m = parse_mode(words[1]);
      if (!m) fail("unknown mode '" + std::string(words[1]) + "'");
      s_.mode = *m;
    } else if (head == "universe") {
      if (words.size() < 2) fail("universe needs at least one name");
      for (std::size_t i = 1; i < words.size(); ++i) {
        if (!is_valid_identifier(words[i])) fail("illegal identifier '" + std::string(words[i]) + "'");
        s_.universe.emplace_back(words[i]);
      }
      universe_line_ = line_;
    } else if (head == "depth") {
      if (words.size() != 2) fail("usage: depth <k>");
      std::size_t k = 0;
      auto [end, ec] = std::from_chars(words[1].data(), words[1].data() + words[1].size(), k);
      if (ec != std::errc{} || end != words[1].data() + words[1].size()) {
        fail("depth must be a nonnegative integer");
      }
      s_.depth = k;
    } else if (head == "policy") {
      auto p = Policy::parse(trim(line.substr(6)));
      if (!p) fail("unknown policy '" + std::string(trim(line.substr(6))) + "'");
      s_.policies.push_back(*p);
    } else if (head == "expect") {
      expect(line.substr(6), words);
    } else {
      fail("unknown directive '" + std::string(head) + "'");
    }
  }

  void stipulate(const std::vector<std::string_view>& w) {
    if (w.size() != 5 || w[2] != "->") fail("usage: stipulate <name> -> term <term> | obj <id>");
    if (!is_valid_identifier(w[1])) fail("illegal identifier '" + std::string(w[1]) + "'");
    std::string name(w[1]);
    if (!names_.insert(name).second) {
      throw Error(ErrorKind::DuplicateStipulation, "name '" + name + "' is stipulated twice", line_);
    }
    if (w[3] == "term") {
      s_.stipulations.push_back({name, Referent::expression(term(w[4]))});
    } else if (w[3] == "obj") {
      if (!is_valid_identifier(w[4])) fail("illegal object id '" + std::string(w[4]) + "'");
      s_.stipulations.push_back({name, Referent::object(std::string(w[4]))});
    } else {
      fail("referent must be 'term <term>' or 'obj <id>'");
    }
  }

  void define_schema(const std::vector<std::string_view>& w) {
    if (w.size() < 4) fail("usage: define-schema <id> <predicate> x | const <term>");
    if (!is_valid_identifier(w[1])) fail("illegal schema id '" + std::string(w[1]) + "'");
    const std::string id = normalize_schema_id(w[1]);
    SchemaTemplate t{id, std::string(w[2]), "(" + id + ")", XSlot{}};
    if (w[3] == "x" && w.size() == 4) {
    } else if (w[3] == "const" && w.size() == 5) {
      t.subject = ConstSubject{term(w[4])};
    } else {
      fail("usage: define-schema <id> <predicate> x | const <term>");
    }
    for (const auto& existing : s_.custom_schemas) {
      if (existing.id == id) fail("schema '" + id + "' defined twice");
    }
    if (id == kLagadonian || id == kLaputan) fail("schema '" + id + "' is built in");
    s_.custom_schemas.push_back(std::move(t));
  }

  Instance instance(std::string_view text, std::size_t& pos) const {
    // The schema is patched in finish(), once the schema line has been seen.
    return at_line([&] { return parse_instance_spec(text, pos, ""); });
  }

  void expect(std::string_view rest, const std::vector<std::string_view>& words) {
    if (words.size() < 2) fail("expect needs a kind");
    const std::string_view kind = words[1];
    std::size_t pos = 0;
    next_word(rest, pos);  // kind

    if (kind == "verdict") {
      const std::string label(next_word(rest, pos));
      if (label.empty()) fail("usage: expect verdict <label> <instance> true|false|vacuous");
      Instance inst = instance(rest, pos);
      const std::string_view value = next_word(rest, pos);
      Verdict v;
      if (value == "true") v = Verdict::truth(true);
      else if (value == "false") v = Verdict::truth(false);
      else if (value == "vacuous") v = Verdict::vacuous_truth();
      else fail("verdict must be true, false or vacuous");
      if (!trim(rest.substr(pos)).empty()) fail("trailing text after verdict");
      s_.expected_verdicts.push_back({label, std::move(inst), v});
    } else if (kind == "conflict") {
      const std::string_view k = next_word(rest, pos);
      ConflictKind ck;
      if (k == "direct") ck = ConflictKind::Direct;
      else if (k == "leibniz") ck = ConflictKind::Leibniz;
      else fail("conflict kind must be direct or leibniz");
      Instance p = instance(rest, pos);
      Instance n = instance(rest, pos);
      if (!trim(rest.substr(pos)).empty()) fail("trailing text after conflict");
      s_.expected_conflicts.push_back({ck, std::move(p), std::move(n)});
    } else if (kind == "no-other-conflicts" && words.size() == 2) {
      s_.no_other_conflicts = true;
    } else if (kind == "certificate" && words.size() == 2) {
      s_.expect_certificate = true;
    } else if (kind == "deictic") {
      if (words.size() != 5) fail("usage: expect deictic <label> <term>|open true|false|indeterminate");
      std::optional<Term> subject;
      if (words[3] != "open") subject = term(words[3]);
      DeicticOutcome o;
      if (words[4] == "true") o = DeicticOutcome::True;
      else if (words[4] == "false") o = DeicticOutcome::False;
      else if (words[4] == "indeterminate") o = DeicticOutcome::Indeterminate;
      else fail("deictic outcome must be true, false or indeterminate");
      s_.expected_deictic.push_back({std::string(words[2]), subject, o});
    } else {
      fail("unknown expectation '" + std::string(kind) + "'");
    }
  }

  void finish() {
    line_ = schema_line_;
    at_line([&] { return s_.registry().get(s_.schema); });
    for (auto& e : s_.expected_verdicts) e.instance.schema = s_.schema;
    for (auto& e : s_.expected_conflicts) {
      e.positive.schema = s_.schema;
      e.negative.schema = s_.schema;
    }
    line_ = universe_line_;
    for (const auto& n : s_.universe) {
      if (!names_.contains(n)) {
        throw Error(ErrorKind::UnstipulatedName, "universe name '" + n + "' has no stipulation", line_);
      }
    }
  }

  Scenario s_;
  std::set<std::string, std::less<>> names_;
  int line_ = 0;
  int schema_line_ = 0;
  int universe_line_ = 0;
};

std::string verdict_token(const Verdict& v) {
  if (v.vacuous) return "vacuous";
  return v.value ? "true" : "false";
}

}  // namespace

Scenario parse_scenario(std::string_view text) { return Parser{}.run(text); }

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IOError, "cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string write_scenario(const Scenario& s) {
  std::ostringstream out;
  if (!s.name.empty()) out << "name " << s.name << "\n";
  for (const auto& st : s.stipulations) out << "stipulate " << st.name << " -> " << render(st.referent) << "\n";
  for (const auto& t : s.custom_schemas) {
    out << "define-schema " << t.id << " " << t.predicate;
    if (const auto* c = std::get_if<ConstSubject>(&t.subject)) {
      out << " const " << render(c->term) << "\n";
    } else {
      out << " x\n";
    }
  }
  out << "schema " << s.schema << "\n";
  out << "mode " << mode_name(s.mode) << "\n";
  if (!s.universe.empty()) {
    out << "universe";
    for (const auto& n : s.universe) out << " " << n;
    out << "\n";
  }
  out << "depth " << s.depth << "\n";
  for (const auto& p : s.policies) out << "policy " << p.name() << "\n";
  for (const auto& e : s.expected_verdicts) {
    out << "expect verdict " << e.label << " " << render_instance_spec(e.instance) << " "
        << verdict_token(e.verdict) << "\n";
  }
  for (const auto& e : s.expected_conflicts) {
    out << "expect conflict " << conflict_kind_name(e.kind) << " " << render_instance_spec(e.positive)
        << " " << render_instance_spec(e.negative) << "\n";
  }
  if (s.no_other_conflicts) out << "expect no-other-conflicts\n";
  if (s.expect_certificate) out << "expect certificate\n";
  for (const auto& e : s.expected_deictic) {
    out << "expect deictic " << e.label << " " << (e.subject ? render(*e.subject) : "open") << " "
        << deictic_name(e.outcome) << "\n";
  }
  return out.str();
}

}  // namespace selfref
