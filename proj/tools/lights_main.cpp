// Command-line front end: evaluate positions, synthesize winning turns,
// list component values, and run the solver-vs-oracle verifier.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lights/moves.hpp"
#include "lights/oracle.hpp"
#include "lights/report.hpp"
#include "lights/sampling.hpp"
#include "lights/solver.hpp"
#include "lights/strategy.hpp"

namespace {

using namespace lights;

std::string show(GrundyValue value, bool unicode) {
  if (value.is_moon()) return unicode ? "☾" : "moon";
  return value.to_string();
}

void print_components(const AnalysisReport& report, bool unicode) {
  for (std::size_t i = 0; i < report.components.size(); ++i) {
    const ComponentReport& entry = report.components[i];
    std::cout << "component " << i << ": ";
    if (entry.chars.empty()) {
      std::cout << "(empty)";
    } else {
      std::cout << entry.chars << "  (" << entry.runs << ")";
    }
    std::cout << "  grundy " << show(entry.grundy, unicode) << "\n";
  }
}

int run_value(const std::string& text, bool json, bool unicode) {
  const AnalysisReport report = analyze(text, /*with_line=*/false);
  if (json) {
    std::cout << to_json(report).dump() << "\n";
    return 0;
  }
  print_components(report, unicode);
  std::cout << "sum: " << show(report.sum, unicode) << "\n";
  std::cout << "outcome: " << to_string(report.outcome) << "\n";
  return 0;
}

int run_best(const std::string& text, bool json, bool unicode) {
  const AnalysisReport report = analyze(text, /*with_line=*/true);
  if (json) {
    std::cout << to_json(report).dump() << "\n";
    return 0;
  }
  if (report.outcome == Outcome::P) {
    std::cout << "P-position\n";
    return 0;
  }
  print_components(report, unicode);
  std::cout << "sum: " << show(report.sum, unicode) << "\n";
  if (!report.line) {
    std::cout << "N-position; no winning turn found\n";
    return 1;
  }
  const WinningLine& line = *report.line;
  std::cout << "N-position; winning turn (" << line.moves.size() << " move"
            << (line.moves.size() == 1 ? "" : "s") << "):\n";
  for (std::size_t i = 0; i < line.moves.size(); ++i) {
    std::cout << "  " << i + 1 << ". " << describe(line.moves[i]) << "\n";
  }
  std::cout << "final value: " << show(*report.final_value, unicode) << "\n";
  return 0;
}

int run_table(int max_len, bool json, bool unicode) {
  Json rows = Json::array();
  for (int len = 1; len <= max_len; ++len) {
    const std::uint64_t count = std::uint64_t{1} << len;
    for (std::uint64_t bits = 0; bits < count; ++bits) {
      const Component c = component_from_index(static_cast<std::size_t>(len), bits);
      const GrundyValue value = grundy_fast(c);
      if (json) {
        rows.push_back(Json{{"input", c.to_string()},
                            {"runs", c.run_form()},
                            {"grundy", value.to_string()}});
      } else {
        std::cout << c.to_string() << "  " << c.run_form() << "  "
                  << show(value, unicode) << "\n";
      }
    }
  }
  if (json) std::cout << rows.dump() << "\n";
  return 0;
}

int run_verify(int max_len, const std::vector<std::uint64_t>& playout,
               std::optional<std::uint64_t> seed_override, bool json) {
  const VerifyReport report = verify_range(max_len);
  std::optional<PlayoutCheck> check;
  if (!playout.empty()) {
    const std::uint64_t seed = seed_override.value_or(playout[3]);
    check = playout_consistency(static_cast<int>(playout[0]),
                                static_cast<int>(playout[1]), playout[2], seed);
  }
  const bool ok = report.ok() && (!check || check->ok());

  if (json) {
    Json out = to_json(report);
    if (check) out["playout"] = to_json(*check);
    std::cout << out.dump() << "\n";
    return ok ? 0 : 1;
  }
  std::cout << "checked " << report.checked << " components up to length "
            << report.max_len << "\n";
  std::cout << "mismatches: " << report.mismatches.size() << "\n";
  for (const VerifyMismatch& m : report.mismatches) {
    std::cout << "  " << m.component << "  fast " << m.fast.to_string()
              << "  oracle " << m.oracle.to_string() << "\n";
  }
  std::cout << "histogram:";
  for (const auto& [value, count] : report.histogram) {
    std::cout << " " << value.to_string() << ":" << count;
  }
  std::cout << "\n";
  if (check) {
    std::cout << "playout: " << check->agreements << "/" << check->samples
              << " agree (pieces<=" << check->max_pieces << " components<="
              << check->max_components << " seed=" << check->seed << ")\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"christmas lights fixture: game values, winning turns, verification"};
  app.require_subcommand(1);

  std::string position_text;
  bool json = false;
  bool unicode = false;

  CLI::App* value_cmd = app.add_subcommand(
      "value", "evaluate a position (per-component values, sum, outcome)");
  value_cmd->add_option("position", position_text, "position, e.g. \"bsb + b2s1\"")
      ->required();
  value_cmd->add_flag("--json", json, "emit the JSON report");
  value_cmd->add_flag("--unicode", unicode, "print moon as a crescent");

  CLI::App* best_cmd = app.add_subcommand(
      "best", "synthesize a winning turn, or report a P-position");
  best_cmd->add_option("position", position_text, "position to win")->required();
  best_cmd->add_flag("--json", json, "emit the JSON report");
  best_cmd->add_flag("--unicode", unicode, "print moon as a crescent");

  int table_len = 0;
  CLI::App* table_cmd = app.add_subcommand(
      "table", "list all components up to a length with their values");
  table_cmd->add_option("--len", table_len, "maximum component length")
      ->required()
      ->check(CLI::Range(1, 20));
  table_cmd->add_flag("--json", json, "emit rows as JSON");
  table_cmd->add_flag("--unicode", unicode, "print moon as a crescent");

  int verify_len = 0;
  std::vector<std::uint64_t> playout;
  std::uint64_t seed = 0;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "exhaustively check the fast solver against the oracle");
  verify_cmd->add_option("--len", verify_len, "check all components up to this length")
      ->required()
      ->check(CLI::Range(0, 22));
  verify_cmd
      ->add_option("--playout", playout,
                   "also cross-check play-out outcomes against the nim-sum "
                   "rule: pieces components samples seed")
      ->expected(4);
  CLI::Option* seed_opt =
      verify_cmd->add_option("--seed", seed, "override the --playout seed");
  verify_cmd->add_flag("--json", json, "emit the JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (value_cmd->parsed()) return run_value(position_text, json, unicode);
    if (best_cmd->parsed()) return run_best(position_text, json, unicode);
    if (table_cmd->parsed()) return run_table(table_len, json, unicode);
    if (verify_cmd->parsed()) {
      std::optional<std::uint64_t> seed_override;
      if (seed_opt->count() > 0) seed_override = seed;
      return run_verify(verify_len, playout, seed_override, json);
    }
  } catch (const lights::ParseError& e) {
    std::cerr << "parse error at offset " << e.offset() << ": " << e.what()
              << "\n";
    return 2;
  }
  return 2;
}
