#include "selfref/analyzer.hpp"

#include <algorithm>
#include <tuple>

namespace selfref {

std::string_view mode_name(Mode m) { return m == Mode::CsiOnly ? "csi" : "all"; }

std::optional<Mode> parse_mode(std::string_view text) {
  if (text == "csi") return Mode::CsiOnly;
  if (text == "all") return Mode::AllInstances;
  return std::nullopt;
}

std::string_view conflict_kind_name(ConflictKind k) {
  return k == ConflictKind::Direct ? "direct" : "leibniz";
}

std::map<Referent, std::vector<std::size_t>> VerdictTable::rows_by_object() const {
  std::map<Referent, std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < rows.size(); ++i) out[rows[i].object].push_back(i);
  return out;
}

namespace {

void add_row(VerdictTable& table, const Model& model, Instance inst) {
  auto ev = evaluate_instance(model, inst);
  TableRow row{inst, is_csi(inst), inst.x, denote(model, inst.x), ev.verdict, table.traces.size()};
  table.traces.push_back(std::move(ev.trace));
  table.rows.push_back(std::move(row));
}

}  // namespace

VerdictTable verdict_table(const Model& model, std::string_view schema, Mode mode,
                           std::span<const std::string> names, std::size_t depth) {
  VerdictTable table;
  table.schema = model.schemas().get(schema).id;
  table.mode = mode;
  table.names.assign(names.begin(), names.end());
  table.depth = depth;

  const auto xs = term_universe(names, depth);
  if (mode == Mode::CsiOnly) {
    for (const auto& alpha : xs) add_row(table, model, make_csi(model.schemas(), schema, alpha));
  } else {
    const auto ys = term_universe(names, depth + 1);
    for (const auto& x : xs) {
      for (const auto& y : ys) add_row(table, model, make_instance(model.schemas(), schema, x, y));
    }
  }
  return table;
}

namespace {

// Lower is preferred.
auto witness_key(const VerdictTable& table, std::size_t row) {
  const auto& r = table.rows[row];
  return std::make_tuple(!r.csi, r.instance.y.is_atomic(), row);
}

}  // namespace

std::vector<ConflictReport> find_conflicts(const VerdictTable& table, const Model& model,
                                           ConflictOptions options) {
  std::vector<ConflictReport> out;

  for (const auto& [object, group] : table.rows_by_object()) {
    // Best witness per subject term, for each polarity.
    std::map<Term, std::size_t> best_pos;
    std::map<Term, std::size_t> best_neg;
    for (std::size_t i : group) {
      const auto& r = table.rows[i];
      if (r.verdict.vacuous && !options.include_vacuous) continue;
      auto& best = r.verdict.value ? best_pos : best_neg;
      auto [it, fresh] = best.emplace(r.subject, i);
      if (!fresh && witness_key(table, i) < witness_key(table, it->second)) it->second = i;
    }

    for (const auto& [pos_subject, pi] : best_pos) {
      for (const auto& [neg_subject, ni] : best_neg) {
        const auto& pr = table.rows[pi];
        const auto& nr = table.rows[ni];
        AttributedVerdict positive{pr.subject, pr.object, pr.verdict, pr.instance, PlainEvaluation{},
                                   table.traces[pr.trace_id]};
        AttributedVerdict negative{nr.subject, nr.object, nr.verdict, nr.instance, PlainEvaluation{},
                                   table.traces[nr.trace_id]};
        ConflictReport report{object, ConflictKind::Direct, std::move(positive), std::move(negative),
                              std::nullopt, pi, ni};
        if (pos_subject != neg_subject) {
          report.kind = ConflictKind::Leibniz;
          report.positive = leibniz_transfer(model, report.positive, neg_subject);
          report.identity = std::get<LeibnizTransfer>(report.positive.route).identity;
        }
        out.push_back(std::move(report));
      }
    }
  }

  std::stable_sort(out.begin(), out.end(), [](const ConflictReport& a, const ConflictReport& b) {
    return std::tie(a.object, a.kind, a.positive_subject(), a.negative.subject) <
           std::tie(b.object, b.kind, b.positive_subject(), b.negative.subject);
  });
  return out;
}

std::string Certificate::statement() const {
  std::string names_text;
  for (const auto& n : names) {
    if (!names_text.empty()) names_text += ", ";
    names_text += n;
  }
  return "no conflicts among " + std::to_string(instances_checked) + " " +
         (mode == Mode::CsiOnly ? "coordinated instances" : "substitution instances") + " of " +
         schema + " over names {" + names_text + "} up to quotation depth " +
         std::to_string(depth);
}

ConsistencyResult consistency_certificate(const VerdictTable& table, const Model& model,
                                          ConflictOptions options) {
  auto conflicts = find_conflicts(table, model, options);
  if (!conflicts.empty()) return conflicts;
  return Certificate{table.schema, table.mode, table.names, table.depth, table.rows.size()};
}

ConsistencyResult consistency_certificate(const Model& model, std::string_view schema, Mode mode,
                                          std::span<const std::string> names, std::size_t depth,
                                          ConflictOptions options) {
  return consistency_certificate(verdict_table(model, schema, mode, names, depth), model, options);
}

std::vector<Term> characterize_exceptions(const Model& model, std::string_view schema,
                                          std::span<const std::string> names, std::size_t depth) {
  std::vector<Term> out;
  for (const auto& row : verdict_table(model, schema, Mode::CsiOnly, names, depth).rows) {
    if (row.verdict.value && !row.verdict.vacuous) out.push_back(row.subject);
  }
  return out;
}

}  // namespace selfref
