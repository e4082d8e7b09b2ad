#include "ybl/corpus.hpp"

#include <filesystem>

#include "ybl/io.hpp"

namespace ybl {

namespace {

std::vector<long> parse_params(const std::string& s, std::size_t expected,
                               const std::string& what) {
  std::vector<long> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string piece = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stol(piece, &used));
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::exception&) {
      throw IoError(what + ": bad parameter \"" + piece + "\"");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.size() != expected)
    throw IoError(what + ": expected " + std::to_string(expected) + " parameters");
  return out;
}

}  // namespace

FiniteRing parse_ring_spec(const std::string& spec) {
  auto colon = spec.find(':');
  std::string head = spec.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (head == "mod") {
    auto p = parse_params(rest, 2, "mod ring");
    return scaled_mod_ring(static_cast<int>(p[0]), p[1]);
  }
  if (head == "tpoly") {
    auto p = parse_params(rest, 2, "truncated polynomial ring");
    return truncated_poly_ring(static_cast<int>(p[0]), static_cast<int>(p[1]));
  }
  if (std::filesystem::exists(spec)) return load_ring(spec);
  throw IoError("unknown ring spec \"" + spec + "\"");
}

FiniteBrace parse_brace_spec(const std::string& spec) {
  auto colon = spec.find(':');
  std::string head = spec.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (head == "ring") return ring_to_brace(parse_ring_spec(rest));
  if (head == "trivial") {
    auto p = parse_params(rest, 1, "trivial brace");
    return trivial_brace(static_cast<int>(p[0]));
  }
  if (std::filesystem::exists(spec)) return load_brace(spec);
  throw IoError("unknown brace spec \"" + spec + "\"");
}

NamedSolution parse_solution_spec(const std::string& spec) {
  auto colon = spec.find(':');
  std::string head = spec.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (head == "trivial") {
    auto p = parse_params(rest, 1, "trivial solution");
    return {spec, trivial_solution(static_cast<int>(p[0])), std::nullopt};
  }
  if (head == "lyubashenko") {
    auto p = parse_params(rest, 1, "lyubashenko solution");
    return {spec, lyubashenko(static_cast<int>(p[0])), std::nullopt};
  }
  if (head == "brace") {
    BraceSolution bs = solution_from_brace(parse_brace_spec(rest));
    return {spec, bs.sol, bs};
  }
  if (head == "union") {
    auto plus = rest.find('+');
    if (plus == std::string::npos) throw IoError("union spec needs two parts joined by +");
    NamedSolution a = parse_solution_spec(rest.substr(0, plus));
    NamedSolution b = parse_solution_spec(rest.substr(plus + 1));
    SetSolution u = disjoint_union(a.sol, b.sol);
    if (!validate(u).ok()) throw IoError("union of solutions fails validation");
    return {spec, u, std::nullopt};
  }
  if (std::filesystem::exists(spec)) return {spec, load_solution(spec), std::nullopt};
  throw IoError("unknown solution spec \"" + spec + "\"");
}

std::vector<NamedSolution> default_corpus() {
  std::vector<NamedSolution> out;
  for (int n = 2; n <= 4; ++n) out.push_back(parse_solution_spec("trivial:" + std::to_string(n)));
  for (int m = 2; m <= 4; ++m)
    out.push_back(parse_solution_spec("lyubashenko:" + std::to_string(m)));
  out.push_back(parse_solution_spec("brace:ring:mod:4,2"));
  out.push_back(parse_solution_spec("brace:ring:tpoly:2,3"));
  return out;
}

}  // namespace ybl
