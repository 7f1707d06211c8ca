#include "doctest.h"
#include "oracle.hpp"
#include "selfref/analyzer.hpp"
#include "selfref/error.hpp"

using namespace selfref;

namespace {

Term T(const char* s) { return parse_term(s); }
Referent E(const char* s) { return Referent::expression(parse_term(s)); }
Referent O(const char* s) { return Referent::object(s); }
Instance lag(const char* x, const char* y) { return Instance{"LAGADONIAN", T(x), T(y)}; }
Instance lap(const char* x, const char* y) { return Instance{"LAPUTAN", T(x), T(y)}; }

using Names = std::vector<std::string>;

std::vector<bool> verdicts(const VerdictTable& t) {
  std::vector<bool> out;
  for (const auto& r : t.rows) out.push_back(r.verdict.value);
  return out;
}

// Verdicts for each coordinated instance computed by the closed-form oracle.
std::vector<bool> oracle_csi_verdicts(const Model& m, const std::string& schema, const Names& names,
                                      std::size_t depth) {
  const auto table = oracle::table_of(m.stipulations());
  std::vector<bool> out;
  for (const auto& alpha : term_universe(names, depth)) {
    const std::string x = render(alpha);
    out.push_back(oracle::closed_form(table, oracle::subject_of(schema, x), "'" + x + "'").value);
  }
  return out;
}

}  // namespace

TEST_CASE("Lagadonian coordinated table for the self-naming model") {
  const Model m = Model::build({{"d", E("d")}});
  const auto t = verdict_table(m, kLagadonian, Mode::CsiOnly, Names{"d"}, 2);
  REQUIRE(t.rows.size() == 3);
  CHECK(t.rows[0].instance == lag("d", "'d'"));
  CHECK(t.rows[2].instance == lag("''d''", "'''d'''"));
  CHECK(verdicts(t) == std::vector<bool>{true, false, false});
  CHECK(t.rows[1].object == E("d"));
  CHECK(t.traces.size() == 3);
}

TEST_CASE("Laputan coordinated table") {
  const Model m = Model::build({{"a", O("v")}, {"b", O("v")}});
  const auto t = verdict_table(m, kLaputan, Mode::CsiOnly, Names{"a", "b"}, 1);
  REQUIRE(t.rows.size() == 4);
  // a, 'a', b, 'b'
  CHECK(verdicts(t) == std::vector<bool>{true, false, false, false});
}

TEST_CASE("a model with no self-reference gives all-false coordinated rows") {
  const Model m = Model::build({{"c", O("v")}});
  const auto t = verdict_table(m, kLagadonian, Mode::CsiOnly, Names{"c"}, 2);
  CHECK(verdicts(t) == oracle_csi_verdicts(m, "LAGADONIAN", Names{"c"}, 2));
  CHECK(verdicts(t) == std::vector<bool>{false, false, false});
}

TEST_CASE("all-instances table shape") {
  const Model m = Model::build({{"d", E("d")}});
  const auto t = verdict_table(m, kLagadonian, Mode::AllInstances, Names{"d"}, 2);
  CHECK(t.rows.size() == 3 * 4);
  CHECK(t.rows[0].instance == lag("d", "d"));
  CHECK(t.rows[1].instance == lag("d", "'d'"));
  for (const auto& csi : verdict_table(m, kLagadonian, Mode::CsiOnly, Names{"d"}, 2).rows) {
    CHECK(std::any_of(t.rows.begin(), t.rows.end(), [&](const TableRow& r) { return r.instance == csi.instance; }));
  }
  CHECK(verdict_table(m, kLagadonian, Mode::AllInstances, Names{}, 2).rows.empty());
}

TEST_CASE("table errors") {
  const Model m = Model::build({{"d", E("d")}});
  CHECK_THROWS_AS(verdict_table(m, kLagadonian, Mode::CsiOnly, Names{"e"}, 1), Error);
  CHECK_THROWS_AS(verdict_table(m, "NOPE", Mode::CsiOnly, Names{"d"}, 1), Error);
}

TEST_CASE("rows grouped by object") {
  const Model m = Model::build({{"d", E("d")}});
  const auto groups = verdict_table(m, kLagadonian, Mode::CsiOnly, Names{"d"}, 2).rows_by_object();
  REQUIRE(groups.size() == 2);
  CHECK(groups.at(E("d")) == std::vector<std::size_t>{0, 1});
  CHECK(groups.at(E("'d'")) == std::vector<std::size_t>{2});
}

TEST_CASE("the coordinated Lagadonian conflict is a single Leibniz clash on d") {
  const Model m = Model::build({{"d", E("d")}});
  const auto t = verdict_table(m, kLagadonian, Mode::CsiOnly, Names{"d"}, 2);
  const auto cs = find_conflicts(t, m);
  REQUIRE(cs.size() == 1);
  const auto& c = cs[0];
  CHECK(c.kind == ConflictKind::Leibniz);
  CHECK(c.object == E("d"));
  CHECK(c.positive.source == lag("d", "'d'"));
  CHECK(c.negative.source == lag("'d'", "''d''"));
  CHECK(c.positive.subject == T("'d'"));
  CHECK(c.negative.subject == T("'d'"));
  REQUIRE(c.identity);
  CHECK(render(*c.identity) == "d = 'd'");
  CHECK(c.identity->justification == Justification::DQ);
  CHECK(c.positive.verdict.value);
  CHECK_FALSE(c.negative.verdict.value);
}

TEST_CASE("all instances add the direct clash (8+) against (8)") {
  const Model m = Model::build({{"d", E("d")}});
  const auto t = verdict_table(m, kLagadonian, Mode::AllInstances, Names{"d"}, 2);
  const auto cs = find_conflicts(t, m);
  auto has = [&](ConflictKind k, const Instance& p, const Instance& n) {
    return std::any_of(cs.begin(), cs.end(), [&](const ConflictReport& c) {
      return c.kind == k && c.positive.source == p && c.negative.source == n;
    });
  };
  CHECK(has(ConflictKind::Direct, lag("'d'", "'d'"), lag("'d'", "''d''")));
  CHECK(has(ConflictKind::Leibniz, lag("d", "'d'"), lag("'d'", "''d''")));
  for (const auto& c : cs) {
    if (c.kind == ConflictKind::Direct) CHECK_FALSE(c.identity);
    CHECK(c.positive.object == c.object);
    CHECK(c.negative.object == c.object);
  }
}

TEST_CASE("Laputan conflicts") {
  const Model m = Model::build({{"a", O("v")}, {"b", O("v")}});
  const auto csi = find_conflicts(verdict_table(m, kLaputan, Mode::CsiOnly, Names{"a", "b"}, 1), m);
  REQUIRE(csi.size() == 1);
  CHECK(csi[0].kind == ConflictKind::Leibniz);
  CHECK(csi[0].object == O("v"));
  CHECK(csi[0].positive.source == lap("a", "'a'"));
  CHECK(csi[0].negative.source == lap("b", "'b'"));
  CHECK(csi[0].identity->justification == Justification::Stipulated);

  const auto all = find_conflicts(verdict_table(m, kLaputan, Mode::AllInstances, Names{"a", "b"}, 1), m);
  CHECK(std::any_of(all.begin(), all.end(), [&](const ConflictReport& c) {
    return c.kind == ConflictKind::Direct && c.positive.source == lap("b", "'a'") &&
           c.negative.source == lap("b", "'b'");
  }));
}

TEST_CASE("a single plain name clashes under all instances") {
  // Phi(a, 'a') holds while Phi(a, ''a'') fails, with a naming an object.
  const Model m = Model::build({{"a", O("v")}});
  const auto cs = find_conflicts(verdict_table(m, kLaputan, Mode::AllInstances, Names{"a"}, 1), m);
  CHECK(std::any_of(cs.begin(), cs.end(), [&](const ConflictReport& c) {
    return c.kind == ConflictKind::Direct && c.positive.source == lap("a", "'a'") &&
           c.negative.source == lap("a", "''a''");
  }));
}

TEST_CASE("vacuous rows only witness conflicts on request") {
  const Model m = Model::build({{"a", O("v")}, {"b", O("w")}});
  // Phi(a, b) is vacuously true; Phi(a, 'a') is false; nothing makes a non-vacuously Lagadonian.
  const auto t = verdict_table(m, kLagadonian, Mode::AllInstances, Names{"a", "b"}, 1);
  const auto strict = find_conflicts(t, m);
  const auto loose = find_conflicts(t, m, ConflictOptions{true});
  auto on_v = [](const ConflictReport& c) { return c.object == Referent::object("v"); };
  CHECK(std::none_of(strict.begin(), strict.end(), on_v));
  CHECK(std::any_of(loose.begin(), loose.end(), on_v));
  CHECK(std::any_of(loose.begin(), loose.end(), [](const ConflictReport& c) { return c.positive.verdict.vacuous; }));
  CHECK(std::none_of(strict.begin(), strict.end(), [](const ConflictReport& c) { return c.positive.verdict.vacuous; }));
}

TEST_CASE("certificates") {
  const Model plain = Model::build({{"a", O("v")}});
  const auto r1 = consistency_certificate(plain, kLagadonian, Mode::CsiOnly, Names{"a"}, 3);
  REQUIRE(std::holds_alternative<Certificate>(r1));
  const auto& cert = std::get<Certificate>(r1);
  CHECK(cert.instances_checked == 4);
  CHECK(cert.statement() ==
        "no conflicts among 4 coordinated instances of LAGADONIAN over names {a} up to quotation depth 3");
  CHECK(oracle_csi_verdicts(plain, "LAGADONIAN", Names{"a"}, 3) == std::vector<bool>(4, false));

  const Model d = Model::build({{"d", E("d")}});
  const auto r2 = consistency_certificate(d, kLagadonian, Mode::CsiOnly, Names{"d"}, 2);
  REQUIRE(std::holds_alternative<std::vector<ConflictReport>>(r2));
  CHECK_FALSE(std::get<std::vector<ConflictReport>>(r2).empty());

  const Model distinct = Model::build({{"a", O("v")}, {"b", O("w")}});
  const auto r3 = consistency_certificate(distinct, kLaputan, Mode::CsiOnly, Names{"a", "b"}, 1);
  REQUIRE(std::holds_alternative<Certificate>(r3));
  CHECK(oracle_csi_verdicts(distinct, "LAPUTAN", Names{"a", "b"}, 1) ==
        std::vector<bool>{true, false, false, false});

  // Reproducible, bound statement included.
  CHECK(std::get<Certificate>(consistency_certificate(plain, kLagadonian, Mode::CsiOnly, Names{"a"}, 3)) == cert);
}

TEST_CASE("exceptions") {
  const Model d = Model::build({{"d", E("d")}});
  CHECK(characterize_exceptions(d, kLagadonian, Names{"d"}, 3) == std::vector<Term>{T("d")});
  const Model ab = Model::build({{"a", O("v")}, {"b", O("v")}});
  CHECK(characterize_exceptions(ab, kLaputan, Names{"a", "b"}, 2) == std::vector<Term>{T("a")});
  const Model plain = Model::build({{"a", O("v")}});
  CHECK(characterize_exceptions(plain, kLagadonian, Names{"a"}, 3).empty());
}

TEST_CASE("conflict order is deterministic") {
  const Model m = Model::build({{"d", E("d")}});
  const auto t = verdict_table(m, kLagadonian, Mode::AllInstances, Names{"d"}, 2);
  const auto a = find_conflicts(t, m);
  const auto b = find_conflicts(t, m);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].positive_row == b[i].positive_row);
    CHECK(a[i].negative_row == b[i].negative_row);
  }
}
