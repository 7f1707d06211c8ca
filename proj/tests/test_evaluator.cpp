#include "doctest.h"
#include "oracle.hpp"
#include "selfref/error.hpp"
#include "selfref/evaluator.hpp"

using namespace selfref;

namespace {

Term T(const char* s) { return parse_term(s); }
Referent E(const char* s) { return Referent::expression(parse_term(s)); }
Referent O(const char* s) { return Referent::object(s); }

const Model& d_model() {
  static const Model m = Model::build({{"d", E("d")}});
  return m;
}
const Model& ab_model() {
  static const Model m = Model::build({{"a", O("v")}, {"b", O("v")}});
  return m;
}
// b co-denotes with the quote-name 'a'.
const Model& agreement_model() {
  static const Model m = Model::build({{"a", O("v")}, {"b", E("a")}});
  return m;
}

Instance lag(const char* x, const char* y) { return Instance{"LAGADONIAN", T(x), T(y)}; }
Instance lap(const char* x, const char* y) { return Instance{"LAPUTAN", T(x), T(y)}; }

Verdict eval(const Model& m, const Instance& i) { return evaluate_instance(m, i).verdict; }

}  // namespace

TEST_CASE("description resolution goes through what the y-slot denotes") {
  CHECK(resolve_description(d_model(), kLagadonian, T("'d'")) == lag("d", "'d'"));
  CHECK(resolve_description(d_model(), kLagadonian, T("''d''")) == lag("'d'", "''d''"));

  const Model w = Model::build({{"a", O("v")}, {"b", O("v")}, {"w", O("v")}});
  CHECK_FALSE(resolve_description(w, kLaputan, T("w")));
  // Exhaustive scan over the bounded universe agrees: no coordinated
  // instance has the object as its first term.
  CHECK(oracle::scan_resolvents(oracle::table_of(w.stipulations()), {"a", "b", "w"}, 4, "w").empty());
  CHECK(oracle::scan_resolvents(oracle::table_of(d_model().stipulations()), {"d"}, 4, "''d''") ==
        std::vector<std::string>{"'d'"});
}

TEST_CASE("the Lagadonian instances") {
  SUBCASE("(5) fails for 'a'") { CHECK(eval(agreement_model(), lag("'a'", "''a''")) == Verdict::truth(false)); }
  SUBCASE("(6) fails for b") { CHECK(eval(agreement_model(), lag("b", "'b'")) == Verdict::truth(false)); }
  SUBCASE("(7) holds for d") { CHECK(eval(d_model(), lag("d", "'d'")) == Verdict::truth(true)); }
  SUBCASE("(8) fails for 'd'") { CHECK(eval(d_model(), lag("'d'", "''d''")) == Verdict::truth(false)); }
  SUBCASE("(8+) holds for 'd'") { CHECK(eval(d_model(), lag("'d'", "'d'")) == Verdict::truth(true)); }
}

TEST_CASE("the Laputan instances") {
  CHECK(eval(ab_model(), lap("a", "'a'")) == Verdict::truth(true));    // (9)
  CHECK(eval(ab_model(), lap("b", "'b'")) == Verdict::truth(false));   // (10)
  CHECK(eval(ab_model(), lap("b", "'a'")) == Verdict::truth(true));    // (9+)
}

TEST_CASE("trace of (7)") {
  const auto ev = evaluate_instance(d_model(), lag("d", "'d'"));
  REQUIRE(ev.trace.steps.size() == 4);
  CHECK(ev.trace.steps[0] == TraceStep{step::YSlotDenotation{T("'d'"), E("d")}});
  CHECK(ev.trace.steps[1] == TraceStep{step::DescriptionResolved{lag("d", "'d'")}});
  CHECK(ev.trace.steps[2] == TraceStep{step::ConsequentSubject{T("d"), E("d")}});
  CHECK(ev.trace.steps[3] == TraceStep{step::FirstTermComparison{E("d"), T("d"), true}});
}

TEST_CASE("trace of (8) records the mismatch") {
  const auto ev = evaluate_instance(d_model(), lag("'d'", "''d''"));
  CHECK(ev.trace.steps.back() == TraceStep{step::FirstTermComparison{E("d"), T("'d'"), false}});
  const std::string text = render_trace(d_model().schemas(), ev.trace);
  CHECK(text.find("4. [first-term] expected first term d, found 'd': mismatch") != std::string::npos);
}

TEST_CASE("(8+) resolves to (7)") {
  const auto ev = evaluate_instance(d_model(), lag("'d'", "'d'"));
  CHECK(ev.trace.steps[1] == TraceStep{step::DescriptionResolved{lag("d", "'d'")}});
}

TEST_CASE("an object-valued y-slot makes the instance vacuously true") {
  const auto ev = evaluate_instance(ab_model(), lap("a", "b"));
  CHECK(ev.verdict == Verdict::vacuous_truth());
  REQUIRE(ev.trace.steps.size() == 3);
  CHECK(std::holds_alternative<step::DescriptionEmpty>(ev.trace.steps[1]));
  CHECK(std::holds_alternative<step::VacuityApplied>(ev.trace.steps[2]));
}

TEST_CASE("an object-valued consequent subject never matches") {
  const Model m = Model::build({{"a", O("v")}, {"d", E("d")}});
  CHECK(eval(m, lag("a", "'d'")) == Verdict::truth(false));
  const auto ev = evaluate_instance(m, lag("a", "'d'"));
  CHECK(ev.trace.steps[3] == TraceStep{step::FirstTermComparison{O("v"), T("d"), false}});
}

TEST_CASE("evaluation errors") {
  CHECK_THROWS_AS(evaluate_instance(d_model(), lag("c", "'c'")), Error);
  CHECK_THROWS_AS(evaluate_instance(d_model(), Instance{"NOPE", T("d"), T("'d'")}), Error);
  // The Laputan subject 'a' needs no stipulation, but a y-slot name does.
  CHECK(eval(d_model(), lap("d", "'a'")) == Verdict::truth(true));
  CHECK_THROWS_AS(evaluate_instance(d_model(), lap("d", "a")), Error);
}

TEST_CASE("traces replay and are deterministic") {
  for (const auto& inst : {lag("d", "'d'"), lag("'d'", "''d''"), lag("'d'", "'d'"), lag("d", "d")}) {
    const auto a = evaluate_instance(d_model(), inst);
    const auto b = evaluate_instance(d_model(), inst);
    CHECK(a.trace == b.trace);
    CHECK(render_trace(d_model().schemas(), a.trace) == render_trace(d_model().schemas(), b.trace));
    CHECK(replay_trace(d_model(), inst, a.trace) == a.verdict);
  }
  const auto vac = evaluate_instance(ab_model(), lap("a", "b"));
  CHECK(replay_trace(ab_model(), lap("a", "b"), vac.trace) == vac.verdict);
}

TEST_CASE("replay rejects a tampered trace") {
  auto ev = evaluate_instance(d_model(), lag("'d'", "''d''"));
  std::get<step::FirstTermComparison>(ev.trace.steps[3]).match = true;
  CHECK_THROWS_AS(replay_trace(d_model(), lag("'d'", "''d''"), ev.trace), std::logic_error);
  auto ev2 = evaluate_instance(d_model(), lag("d", "'d'"));
  std::get<step::DescriptionResolved>(ev2.trace.steps[1]).resolvent = lag("'d'", "''d''");
  CHECK_THROWS_AS(replay_trace(d_model(), lag("d", "'d'"), ev2.trace), std::logic_error);
}

TEST_CASE("Leibniz transfer moves the predication, not the instance") {
  const auto seven = attribute(d_model(), lag("d", "'d'"));
  CHECK(seven.object == E("d"));
  const auto moved = leibniz_transfer(d_model(), seven, T("'d'"));
  CHECK(moved.subject == T("'d'"));
  CHECK(moved.source == lag("d", "'d'"));
  CHECK(moved.verdict == Verdict::truth(true));
  REQUIRE(std::holds_alternative<LeibnizTransfer>(moved.route));
  CHECK(render(std::get<LeibnizTransfer>(moved.route).identity) == "d = 'd'");
  CHECK(moved.trace.steps.back() == TraceStep{step::LeibnizApplied{T("d"), T("'d'")}});
  CHECK(std::holds_alternative<step::DQApplied>(moved.trace.steps[moved.trace.steps.size() - 2]));

  const auto nine = attribute(ab_model(), lap("a", "'a'"));
  const auto b = leibniz_transfer(ab_model(), nine, T("b"));
  CHECK(b.subject == T("b"));
  CHECK(b.verdict.value);
  CHECK(std::get<LeibnizTransfer>(b.route).identity.justification == Justification::Stipulated);

  try {
    leibniz_transfer(d_model(), seven, T("''d''"));
    FAIL("expected NotCoreferent");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotCoreferent);
  }
}

TEST_CASE("the self-describing open formula") {
  CHECK(evaluate_deictic(d_model(), T("d")) == DeicticOutcome::True);     // (3)
  CHECK(evaluate_deictic(d_model(), T("'d'")) == DeicticOutcome::False);  // (4)
  CHECK(evaluate_deictic(d_model(), std::nullopt) == DeicticOutcome::Indeterminate);
  CHECK_THROWS_AS(evaluate_deictic(d_model(), T("c")), Error);
}
