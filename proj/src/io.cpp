#include "ybl/io.hpp"

#include <fstream>

namespace ybl {

namespace {

OpTable table_from_json(const Json& j, const std::string& name, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw IoError(name + ": expected " + std::to_string(n) + " rows");
  OpTable t;
  for (int r = 0; r < n; ++r) {
    const Json& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw IoError(name + " row " + std::to_string(r) + ": expected " + std::to_string(n) +
                    " entries");
    std::vector<int> out;
    for (int c = 0; c < n; ++c) {
      const Json& v = row[c];
      if (!v.is_number_integer())
        throw IoError(name + " entry (" + std::to_string(r) + "," + std::to_string(c) +
                      "): not an integer");
      int e = v.get<int>();
      if (e < 0 || e >= n)
        throw IoError(name + " entry (" + std::to_string(r) + "," + std::to_string(c) +
                      ") = " + std::to_string(e) + ": out of range [0," + std::to_string(n) +
                      ")");
      out.push_back(e);
    }
    t.push_back(std::move(out));
  }
  return t;
}

int size_from_json(const Json& j) {
  if (!j.contains("size") || !j["size"].is_number_integer() || j["size"].get<int>() < 1)
    throw IoError("missing or invalid \"size\"");
  return j["size"].get<int>();
}

Json table_to_json(const OpTable& t) {
  Json rows = Json::array();
  for (const auto& row : t) rows.push_back(row);
  return rows;
}

Json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const std::exception& e) {
    throw IoError(path + ": " + e.what());
  }
  return j;
}

}  // namespace

FiniteRing ring_from_json(const Json& j) {
  int n = size_from_json(j);
  if (!j.contains("add") || !j.contains("mul"))
    throw IoError("ring file needs \"add\" and \"mul\" tables");
  return {n, table_from_json(j["add"], "add", n), table_from_json(j["mul"], "mul", n)};
}

FiniteBrace brace_from_json(const Json& j) {
  int n = size_from_json(j);
  if (!j.contains("add") || !j.contains("circle"))
    throw IoError("brace file needs \"add\" and \"circle\" tables");
  return {n, table_from_json(j["add"], "add", n), table_from_json(j["circle"], "circle", n)};
}

OpTable derive_tau(const OpTable& sigma) {
  const int n = static_cast<int>(sigma.size());
  OpTable sigma_inv(n, std::vector<int>(n, -1));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int v = sigma[x][y];
      if (v < 0 || v >= n || sigma_inv[x][v] != -1)
        throw IoError("derive_tau: sigma row " + std::to_string(x) + " is not a permutation");
      sigma_inv[x][v] = y;
    }
  OpTable tau(n, std::vector<int>(n, 0));
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) tau[y][x] = sigma_inv[sigma[x][y]][x];
  return tau;
}

SetSolution solution_from_json(const Json& j) {
  int n = size_from_json(j);
  if (!j.contains("sigma")) throw IoError("solution file needs a \"sigma\" table");
  SetSolution s;
  s.size = n;
  s.sigma = table_from_json(j["sigma"], "sigma", n);
  if (j.contains("tau")) {
    s.tau = table_from_json(j["tau"], "tau", n);
  } else if (j.value("derive_tau_from", "") == std::string("involutivity")) {
    s.tau = derive_tau(s.sigma);
  } else {
    throw IoError("solution file needs \"tau\" or \"derive_tau_from\": \"involutivity\"");
  }
  SolutionReport rep = validate(s);
  if (!rep.ok())
    throw IoError("solution fails validation (" +
                  (rep.witness ? rep.witness->check : std::string("unknown")) + ")");
  return s;
}

Json ring_to_json(const FiniteRing& r) {
  Json j;
  j["size"] = r.size;
  j["add"] = table_to_json(r.add);
  j["mul"] = table_to_json(r.mul);
  return j;
}

Json brace_to_json(const FiniteBrace& b) {
  Json j;
  j["size"] = b.size;
  j["add"] = table_to_json(b.add);
  j["circle"] = table_to_json(b.circle);
  return j;
}

Json solution_to_json(const SetSolution& s, const std::string& name) {
  Json j;
  if (!name.empty()) j["name"] = name;
  j["size"] = s.size;
  j["sigma"] = table_to_json(s.sigma);
  j["tau"] = table_to_json(s.tau);
  return j;
}

FiniteRing load_ring(const std::string& path) { return ring_from_json(parse_file(path)); }
FiniteBrace load_brace(const std::string& path) { return brace_from_json(parse_file(path)); }
SetSolution load_solution(const std::string& path) {
  return solution_from_json(parse_file(path));
}

}  // namespace ybl
