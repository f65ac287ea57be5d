#include "lights/report.hpp"

#include "lights/algebra.hpp"
#include "lights/solver.hpp"

namespace lights {

AnalysisReport analyze(std::string_view position_text, bool with_line) {
  AnalysisReport report;
  const Position position = parse_position(position_text);
  const std::vector<Fragment> fragments = position_fragments(position_text);

  GrundyValue sum = GrundyValue::finite(0);
  for (std::size_t i = 0; i < position.components.size(); ++i) {
    const Component& c = position.components[i];
    const GrundyValue value = grundy_fast(c);
    report.components.push_back(
        {fragments[i].text, c.to_string(), c.run_form(), value});
    sum = gsum(sum, value);
  }
  report.sum = sum;
  report.outcome = outcome(position);

  if (with_line && report.outcome == Outcome::N) {
    report.line = best_line(position);
    if (report.line) {
      Position current = position;
      for (const Move& move : report.line->moves) current = apply(current, move);
      report.final_value = position_value(current);
    }
  }
  return report;
}

Json to_json(const Move& move) {
  return Json{{"component", move.component},
              {"index", move.index},
              {"kind", kind_name(move.kind)}};
}

Json to_json(const AnalysisReport& report) {
  Json components = Json::array();
  for (const ComponentReport& entry : report.components) {
    components.push_back(Json{{"input", entry.input},
                              {"runs", entry.runs},
                              {"grundy", entry.grundy.to_string()}});
  }
  Json out{{"components", std::move(components)},
           {"sum", report.sum.to_string()},
           {"outcome", to_string(report.outcome)}};
  if (report.line) {
    Json moves = Json::array();
    for (const Move& move : report.line->moves) moves.push_back(to_json(move));
    out["line"] = std::move(moves);
    if (report.final_value) out["final_value"] = report.final_value->to_string();
  }
  return out;
}

Json to_json(const VerifyReport& report) {
  Json mismatches = Json::array();
  for (const VerifyMismatch& m : report.mismatches) {
    mismatches.push_back(Json{{"component", m.component},
                              {"fast", m.fast.to_string()},
                              {"oracle", m.oracle.to_string()}});
  }
  Json histogram = Json::object();
  for (const auto& [value, count] : report.histogram) {
    histogram[value.to_string()] = count;
  }
  return Json{{"max_len", report.max_len},
              {"checked", report.checked},
              {"mismatches", std::move(mismatches)},
              {"histogram", std::move(histogram)}};
}

Json to_json(const PlayoutCheck& check) {
  return Json{{"pieces", check.max_pieces},
              {"components", check.max_components},
              {"samples", check.samples},
              {"seed", check.seed},
              {"agreements", check.agreements}};
}

}  // namespace lights
