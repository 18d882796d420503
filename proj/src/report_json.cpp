#include "splitsys/report_json.hpp"

#include "splitsys/text_format.hpp"

namespace splitsys {

nlohmann::json toJson(const SearchReport& report) {
  nlohmann::json j;
  j["n"] = report.n;
  j["quantity"] = quantityName(report.quantity);
  if (report.exact())
    j["value"] = report.value();
  else
    j["value"] = {{"lower", report.lower}, {"upper", report.upper}};
  j["witness"] =
      report.witness ? nlohmann::json(toText(*report.witness)) : nlohmann::json();
  j["method"] = methodName(report.method);
  j["nodes_explored"] = report.nodesExplored;
  j["elapsed_seconds"] = report.elapsedSeconds;
  return j;
}

}  // namespace splitsys
