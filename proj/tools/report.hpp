#pragma once

#include <optional>
#include <string>

#include <json.hpp>

namespace blockdet::cli {

// One det/per computation as printed by `blockdet det|per`.
struct RunReport {
  std::string input;        // "file:<path>" or "family:<descriptor>"
  std::string quantity;     // "det" or "per"
  std::string method;       // method actually used (auto resolved)
  std::string value;        // exact decimal
  double elapsed_ms = 0.0;
  std::string cross_check;  // "agree", "mismatch: <method> gave <v>", "skipped"
  std::optional<double> float_check;

  bool operator==(const RunReport&) const = default;
};

nlohmann::json to_json(const RunReport& r);
RunReport report_from_json(const nlohmann::json& j);

}  // namespace blockdet::cli
