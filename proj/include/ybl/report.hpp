// Machine-readable check results. Every check carries a stable anchor string
// naming the identity it verifies, so reports diff cleanly across runs.

#ifndef YBL_REPORT_HPP
#define YBL_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace ybl {

using Json = nlohmann::ordered_json;

struct CheckResult {
  std::string name;
  std::string anchor;
  bool pass = false;
  Json witness;  // null when the check passed

  static CheckResult passed(std::string name, std::string anchor) {
    return {std::move(name), std::move(anchor), true, Json()};
  }
  static CheckResult failed(std::string name, std::string anchor, Json witness) {
    return {std::move(name), std::move(anchor), false, std::move(witness)};
  }
};

Json to_json(const CheckResult& c);
Json checks_to_json(const std::vector<CheckResult>& checks);
bool all_pass(const std::vector<CheckResult>& checks);

struct RunReport {
  std::string command;
  Json inputs;
  std::vector<CheckResult> checks;
  Json result;  // constructed objects, for commands that build something
  double wall_seconds = 0.0;

  int exit_code() const { return all_pass(checks) ? 0 : 1; }
  Json to_json() const;
};

}  // namespace ybl

#endif
