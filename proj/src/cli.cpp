#include "selfref/cli.hpp"

#include <algorithm>
#include <vector>

#include "CLI11.hpp"
#include "selfref/error.hpp"
#include "selfref/report.hpp"
#include "selfref/scenario.hpp"

namespace selfref {

namespace {

Format parse_format(const std::string& f) { return f == "json" ? Format::Json : Format::Text; }

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evaluates self-referential definition schemas over quotational naming models."};
  app.require_subcommand(1);

  std::string file;
  std::string format = "text";
  bool include_vacuous = false;
  std::string spec;

  auto* check = app.add_subcommand("check", "Analyse a scenario; exit 0 on a certificate, 2 on conflicts");
  check->add_option("file", file, "scenario file")->required();
  check->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  check->add_flag("--include-vacuous", include_vacuous, "let vacuously true rows witness conflicts");

  auto* trace = app.add_subcommand("trace", "Print the derivation of one instance");
  trace->add_option("file", file, "scenario file")->required();
  trace->add_option("instance", spec, "CSI(<term>) or Phi(<term>, <term>)")->required();

  auto* table = app.add_subcommand("table", "Print the verdict table of a scenario");
  table->add_option("file", file, "scenario file")->required();
  table->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* repro = app.add_subcommand("repro-paper", "Run the built-in reproduction scenarios");
  repro->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());  // CLI11 consumes a reversed vector
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 1;
  }

  try {
    if (*check) {
      const auto report = run_check(load_scenario(file), ConflictOptions{include_vacuous});
      out << write_report(report, parse_format(format));
      return report.exit_code();
    }
    if (*trace) {
      const auto scenario = load_scenario(file);
      const auto model = scenario.model();
      const auto inst = parse_instance_spec(spec, model.schemas().get(scenario.schema).id);
      out << write_trace(model, inst);
      return 0;
    }
    if (*table) {
      const auto report = run_check(load_scenario(file));
      out << write_table(report, parse_format(format));
      return 0;
    }
    if (*repro) {
      const auto scenarios = load_builtin_scenarios();
      const auto report = run_repro(scenarios);
      out << write_repro(report, parse_format(format));
      return report.exit_code();
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace selfref
