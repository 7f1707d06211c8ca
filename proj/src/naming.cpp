#include "selfref/naming.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "selfref/error.hpp"

namespace selfref {

Referent Referent::object(std::string id) {
  if (!is_valid_identifier(id)) {
    throw Error(ErrorKind::InvalidIdentifier, "invalid object id '" + id + "'");
  }
  return Referent(std::move(id));
}

std::strong_ordering operator<=>(const Referent& a, const Referent& b) {
  if (a.is_expression() != b.is_expression()) {
    return a.is_expression() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (a.is_expression()) return a.term() <=> b.term();
  return a.object_id() <=> b.object_id();
}

std::string render(const Referent& r) {
  return r.is_expression() ? "term " + render(r.term()) : "obj " + r.object_id();
}

std::string describe(const Referent& r) {
  return r.is_expression() ? render(r.term()) : "obj " + r.object_id();
}

Model Model::build(std::vector<Stipulation> stipulations, SchemaRegistry schemas) {
  std::set<std::string, std::less<>> seen;
  for (const auto& s : stipulations) {
    if (!is_valid_identifier(s.name)) {
      throw Error(ErrorKind::InvalidIdentifier, "invalid name '" + s.name + "'");
    }
    if (!seen.insert(s.name).second) {
      throw Error(ErrorKind::DuplicateStipulation, "name '" + s.name + "' is stipulated twice");
    }
  }
  Model m;
  m.stipulations_ = std::move(stipulations);
  m.schemas_ = std::move(schemas);
  return m;
}

const Referent* Model::find(std::string_view name) const {
  for (const auto& s : stipulations_) {
    if (s.name == name) return &s.referent;
  }
  return nullptr;
}

std::vector<std::string> Model::names() const {
  std::vector<std::string> out;
  out.reserve(stipulations_.size());
  for (const auto& s : stipulations_) out.push_back(s.name);
  return out;
}

Referent denote(const Model& model, const Term& t) {
  if (!t.is_atomic()) return Referent::expression(unquote(t));
  const Referent* r = model.find(t.base());
  if (r == nullptr) {
    throw Error(ErrorKind::UnstipulatedName, "name '" + t.base() + "' has no stipulation");
  }
  return *r;
}

bool is_self_referring(const Model& model, std::string_view name) {
  const Term t = Term::atomic(std::string(name));
  return denote(model, t) == Referent::expression(t);
}

bool coreferent(const Model& model, const Term& t1, const Term& t2) {
  return denote(model, t1) == denote(model, t2);
}

std::string_view justification_name(Justification j) {
  return j == Justification::DQ ? "DQ" : "stipulated";
}

std::string render(const IdentityFact& fact) {
  return render(fact.left) + " = " + render(fact.right);
}

std::vector<IdentityFact> dq_identities(const Model& model) {
  std::vector<IdentityFact> out;
  for (const auto& s : model.stipulations()) {
    if (!s.referent.is_expression()) continue;
    out.push_back({Term::atomic(s.name), quote(s.referent.term()), Justification::DQ});
  }
  return out;
}

std::optional<IdentityFact> derive_identity(const Model& model, const Term& t1, const Term& t2) {
  const Referent r = denote(model, t1);
  if (r != denote(model, t2)) return std::nullopt;
  return IdentityFact{t1, t2, r.is_expression() ? Justification::DQ : Justification::Stipulated};
}

std::vector<std::vector<std::string>> detect_cycles(const Model& model) {
  // Each name has at most one successor, so following successors from any
  // start either leaves the stipulated names or enters exactly one cycle.
  std::map<std::string, std::string, std::less<>> next;
  for (const auto& s : model.stipulations()) {
    if (s.referent.is_expression() && s.referent.term().is_atomic()) {
      next.emplace(s.name, s.referent.term().base());
    }
  }

  std::set<std::vector<std::string>> cycles;
  for (const auto& [start, _] : next) {
    std::vector<std::string> path;
    std::string cur = start;
    while (true) {
      auto seen = std::find(path.begin(), path.end(), cur);
      if (seen != path.end()) {
        std::vector<std::string> cycle(seen, path.end());
        std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
        cycles.insert(std::move(cycle));
        break;
      }
      path.push_back(cur);
      auto it = next.find(cur);
      if (it == next.end()) break;
      cur = it->second;
    }
  }
  return {cycles.begin(), cycles.end()};
}

// ---------------------------------------------------------------------------

std::string_view policy_name(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::NoSelfReference: return "no-self-reference";
    case PolicyKind::NoNamingCycles: return "no-naming-cycles";
    case PolicyKind::InjectiveNaming: return "injective-naming";
    case PolicyKind::NoTermValuedNames: return "no-term-valued-names";
  }
  return "";
}

std::optional<PolicyKind> parse_policy_kind(std::string_view text) {
  for (auto k : {PolicyKind::NoSelfReference, PolicyKind::NoNamingCycles,
                 PolicyKind::InjectiveNaming, PolicyKind::NoTermValuedNames}) {
    if (policy_name(k) == text) return k;
  }
  return std::nullopt;
}

Policy::Policy(std::initializer_list<PolicyKind> kinds) : conjuncts_(kinds) {
  std::sort(conjuncts_.begin(), conjuncts_.end());
  conjuncts_.erase(std::unique(conjuncts_.begin(), conjuncts_.end()), conjuncts_.end());
}

Policy operator&(const Policy& a, const Policy& b) {
  Policy out;
  std::set_union(a.conjuncts_.begin(), a.conjuncts_.end(), b.conjuncts_.begin(),
                 b.conjuncts_.end(), std::back_inserter(out.conjuncts_));
  return out;
}

std::string Policy::name() const {
  std::string out;
  for (auto k : conjuncts_) {
    if (!out.empty()) out += " & ";
    out += policy_name(k);
  }
  return out;
}

std::optional<Policy> Policy::parse(std::string_view text) {
  Policy out;
  bool any = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t amp = text.find('&', pos);
    if (amp == std::string_view::npos) amp = text.size();
    std::string_view part = text.substr(pos, amp - pos);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    auto kind = parse_policy_kind(part);
    if (!kind) return std::nullopt;
    out = out & Policy(*kind);
    any = true;
    pos = amp + 1;
  }
  if (!any) return std::nullopt;
  return out;
}

namespace {

std::vector<std::string> violators(const Model& model, PolicyKind kind) {
  std::vector<std::string> out;
  switch (kind) {
    case PolicyKind::NoSelfReference:
      for (const auto& s : model.stipulations()) {
        if (is_self_referring(model, s.name)) out.push_back(s.name);
      }
      break;
    case PolicyKind::NoNamingCycles: {
      std::set<std::string> in_cycle;
      for (const auto& c : detect_cycles(model)) in_cycle.insert(c.begin(), c.end());
      out.assign(in_cycle.begin(), in_cycle.end());
      break;
    }
    case PolicyKind::InjectiveNaming: {
      std::map<Referent, std::vector<std::string>> by_referent;
      for (const auto& s : model.stipulations()) by_referent[s.referent].push_back(s.name);
      std::set<std::string> shared;
      for (const auto& [_, names] : by_referent) {
        if (names.size() > 1) shared.insert(names.begin(), names.end());
      }
      out.assign(shared.begin(), shared.end());
      break;
    }
    case PolicyKind::NoTermValuedNames:
      for (const auto& s : model.stipulations()) {
        if (s.referent.is_expression()) out.push_back(s.name);
      }
      break;
  }
  return out;
}

}  // namespace

PolicyReport check_policy(const Model& model, const Policy& policy) {
  PolicyReport report{policy, true, {}};
  for (auto kind : policy.conjuncts()) {
    auto names = violators(model, kind);
    if (names.empty()) continue;
    report.passed = false;
    report.violations.push_back({kind, std::move(names)});
  }
  return report;
}

}  // namespace selfref
