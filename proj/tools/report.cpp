#include "report.hpp"

namespace blockdet::cli {

nlohmann::json to_json(const RunReport& r) {
  // nlohmann::json keeps object keys sorted, so the dump order is stable.
  nlohmann::json j = {
      {"input", r.input},     {"quantity", r.quantity},       {"method", r.method},
      {"value", r.value},     {"elapsed_ms", r.elapsed_ms},   {"cross_check", r.cross_check},
  };
  if (r.float_check) j["float_check"] = *r.float_check;
  return j;
}

RunReport report_from_json(const nlohmann::json& j) {
  RunReport r;
  j.at("input").get_to(r.input);
  j.at("quantity").get_to(r.quantity);
  j.at("method").get_to(r.method);
  j.at("value").get_to(r.value);
  j.at("elapsed_ms").get_to(r.elapsed_ms);
  j.at("cross_check").get_to(r.cross_check);
  if (j.contains("float_check")) r.float_check = j.at("float_check").get<double>();
  return r;
}

}  // namespace blockdet::cli
