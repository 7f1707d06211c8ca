#include "selfref/evaluator.hpp"

#include <stdexcept>

#include "selfref/error.hpp"

namespace selfref {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string render(const Verdict& v) {
  if (v.vacuous) return "true (vacuous)";
  return v.value ? "true" : "false";
}

std::string_view step_rule(const TraceStep& s) {
  return std::visit(overloaded{
                        [](const step::YSlotDenotation&) { return "denote"; },
                        [](const step::DescriptionResolved&) { return "describe"; },
                        [](const step::DescriptionEmpty&) { return "describe"; },
                        [](const step::ConsequentSubject&) { return "subject"; },
                        [](const step::FirstTermComparison&) { return "first-term"; },
                        [](const step::VacuityApplied&) { return "vacuity"; },
                        [](const step::DQApplied&) { return "DQ"; },
                        [](const step::LeibnizApplied&) { return "leibniz"; },
                    },
                    s);
}

std::string render_step(const SchemaRegistry& schemas, const TraceStep& s) {
  return std::visit(
      overloaded{
          [](const step::YSlotDenotation& st) {
            return "y-slot " + render(st.term) + " denotes " + describe(st.referent);
          },
          [&](const step::DescriptionResolved& st) {
            return "S is " + render_instance_spec(st.resolvent) + ": " +
                   render_instance(schemas, st.resolvent);
          },
          [](const step::DescriptionEmpty&) {
            return std::string("no coordinated instance has a non-expression as its first term");
          },
          [](const step::ConsequentSubject& st) {
            return "consequent subject " + render(st.term) + " denotes " + describe(st.referent);
          },
          [](const step::FirstTermComparison& st) {
            return "expected first term " + describe(st.expected) + ", found " + render(st.actual) +
                   (st.match ? ": match" : ": mismatch");
          },
          [](const step::VacuityApplied&) {
            return std::string("embedded conditional holds vacuously");
          },
          [](const step::DQApplied& st) {
            return render(st.identity) + " by " + std::string(justification_name(st.identity.justification));
          },
          [](const step::LeibnizApplied& st) {
            return "verdict for " + render(st.from) + " transferred to " + render(st.to) +
                   " by indiscernibility of identicals";
          },
      },
      s);
}

std::string render_trace(const SchemaRegistry& schemas, const Trace& trace) {
  std::string out;
  int n = 1;
  for (const auto& s : trace.steps) {
    out += std::to_string(n++) + ". [" + std::string(step_rule(s)) + "] " + render_step(schemas, s) + "\n";
  }
  return out;
}

std::optional<Instance> resolve_description(const Model& model, std::string_view schema,
                                            const Term& y) {
  const Referent r = denote(model, y);
  if (!r.is_expression()) return std::nullopt;
  return make_csi(model.schemas(), schema, r.term());
}

const Term& consequent_subject(const SchemaTemplate& schema, const Instance& inst) {
  if (const auto* c = std::get_if<ConstSubject>(&schema.subject)) return c->term;
  return inst.x;
}

Evaluation evaluate_instance(const Model& model, const Instance& inst) {
  const SchemaTemplate& schema = model.schemas().get(inst.schema);
  Evaluation ev;
  auto& steps = ev.trace.steps;

  steps.push_back(step::YSlotDenotation{inst.y, denote(model, inst.y)});
  const auto resolvent = resolve_description(model, inst.schema, inst.y);
  if (!resolvent) {
    steps.push_back(step::DescriptionEmpty{});
    steps.push_back(step::VacuityApplied{});
    ev.verdict = Verdict::vacuous_truth();
    return ev;
  }
  steps.push_back(step::DescriptionResolved{*resolvent});

  const Term& subject = consequent_subject(schema, inst);
  const Referent subject_ref = denote(model, subject);
  steps.push_back(step::ConsequentSubject{subject, subject_ref});

  const Term& first = first_term(*resolvent);
  const bool match = subject_ref == Referent::expression(first);
  steps.push_back(step::FirstTermComparison{subject_ref, first, match});
  ev.verdict = Verdict::truth(match);
  return ev;
}

namespace {

template <class Step>
const Step& expect_step(const Trace& trace, std::size_t i) {
  if (i >= trace.steps.size()) throw std::logic_error("trace ends early at step " + std::to_string(i + 1));
  const auto* s = std::get_if<Step>(&trace.steps[i]);
  if (s == nullptr) throw std::logic_error("unexpected rule at step " + std::to_string(i + 1));
  return *s;
}

}  // namespace

Verdict replay_trace(const Model& model, const Instance& inst, const Trace& trace) {
  const auto& yd = expect_step<step::YSlotDenotation>(trace, 0);
  if (yd.term != inst.y || yd.referent != denote(model, yd.term)) {
    throw std::logic_error("step 1: y-slot denotation does not replay");
  }
  if (std::holds_alternative<step::DescriptionEmpty>(trace.steps.at(1))) {
    if (yd.referent.is_expression()) throw std::logic_error("step 2: description has a resolvent");
    expect_step<step::VacuityApplied>(trace, 2);
    return Verdict::vacuous_truth();
  }
  const auto& dr = expect_step<step::DescriptionResolved>(trace, 1);
  if (!yd.referent.is_expression() || !is_csi(dr.resolvent) ||
      first_term(dr.resolvent) != yd.referent.term() || dr.resolvent.schema != inst.schema) {
    throw std::logic_error("step 2: resolvent is not the coordinated instance y picks out");
  }
  const auto& cs = expect_step<step::ConsequentSubject>(trace, 2);
  if (cs.term != consequent_subject(model.schemas().get(inst.schema), inst) ||
      cs.referent != denote(model, cs.term)) {
    throw std::logic_error("step 3: consequent subject does not replay");
  }
  const auto& cmp = expect_step<step::FirstTermComparison>(trace, 3);
  if (cmp.expected != cs.referent || cmp.actual != first_term(dr.resolvent) ||
      cmp.match != (cmp.expected == Referent::expression(cmp.actual))) {
    throw std::logic_error("step 4: comparison does not replay");
  }
  return Verdict::truth(cmp.match);
}

AttributedVerdict attribute(const Model& model, const Instance& inst) {
  auto ev = evaluate_instance(model, inst);
  return AttributedVerdict{inst.x, denote(model, inst.x), ev.verdict, inst, PlainEvaluation{},
                           std::move(ev.trace)};
}

AttributedVerdict leibniz_transfer(const Model& model, const AttributedVerdict& av, const Term& to) {
  auto identity = derive_identity(model, av.subject, to);
  if (!identity) {
    throw Error(ErrorKind::NotCoreferent,
                render(av.subject) + " and " + render(to) + " denote different things");
  }
  AttributedVerdict out = av;
  out.subject = to;
  out.route = LeibnizTransfer{*identity};
  if (identity->justification == Justification::DQ) {
    out.trace.steps.push_back(step::DQApplied{*identity});
  }
  out.trace.steps.push_back(step::LeibnizApplied{av.subject, to});
  return out;
}

std::string_view deictic_name(DeicticOutcome o) {
  switch (o) {
    case DeicticOutcome::True: return "true";
    case DeicticOutcome::False: return "false";
    case DeicticOutcome::Indeterminate: return "indeterminate";
  }
  return "";
}

DeicticOutcome evaluate_deictic(const Model& model, const std::optional<Term>& subject) {
  if (!subject) return DeicticOutcome::Indeterminate;
  const DeicticInstance inst{*subject};
  return denote(model, *subject) == Referent::expression(first_term(inst)) ? DeicticOutcome::True
                                                                          : DeicticOutcome::False;
}

}  // namespace selfref
