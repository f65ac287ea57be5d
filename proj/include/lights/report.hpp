// Analysis reports and their JSON encoding, the CLI's wire format.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lights/grundy.hpp"
#include "lights/oracle.hpp"
#include "lights/strategy.hpp"

namespace lights {

using Json = nlohmann::ordered_json;

struct ComponentReport {
  std::string input;  // as typed (trimmed)
  std::string chars;  // canonical char form
  std::string runs;   // run form
  GrundyValue grundy;
};

struct AnalysisReport {
  std::vector<ComponentReport> components;
  GrundyValue sum;  // gsum-fold of the component values
  Outcome outcome = Outcome::P;
  std::optional<WinningLine> line;        // filled on request for N-positions
  std::optional<GrundyValue> final_value; // value after the line (0 if valid)
};

// Parses, evaluates, and (if with_line) synthesizes a winning turn.
// Propagates ParseError.
AnalysisReport analyze(std::string_view position_text, bool with_line);

Json to_json(const Move& move);
Json to_json(const AnalysisReport& report);
Json to_json(const VerifyReport& report);
Json to_json(const PlayoutCheck& check);

}  // namespace lights
