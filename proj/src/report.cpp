#include "ybl/report.hpp"

namespace ybl {

Json to_json(const CheckResult& c) {
  Json j;
  j["check"] = c.name;
  j["anchor"] = c.anchor;
  j["pass"] = c.pass;
  if (!c.witness.is_null()) j["witness"] = c.witness;
  return j;
}

Json checks_to_json(const std::vector<CheckResult>& checks) {
  Json arr = Json::array();
  for (const auto& c : checks) arr.push_back(to_json(c));
  return arr;
}

bool all_pass(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

Json RunReport::to_json() const {
  Json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["checks"] = checks_to_json(checks);
  if (!result.is_null()) j["result"] = result;
  j["all_pass"] = all_pass(checks);
  // Wall time lives outside the checks section so reports stay byte-stable.
  j["wall_seconds"] = wall_seconds;
  return j;
}

}  // namespace ybl
