// report.hpp — the solve-result record and its JSON wire format.
//
// One schema serves every algorithm: the solution links, the certified
// lower bound, the exact ratio as a p/q string, wall time, and a two-number
// trace summary. Serialization is key-ordered and round-trips exactly
// (modulo nothing: parse(serialize(r)) == r), so golden files are stable.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "errors.hpp"
#include "instance.hpp"
#include "rational.hpp"

namespace vca {

struct SolveResult {
  int n{0};
  std::string algo;
  std::vector<Chord> solution;
  int size{0};
  long long lower_bound{0};
  std::optional<Rational> lp_bound;
  Rational ratio;
  long long time_ms{0};
  int trace_iterations{0};
  int trace_passes{0};

  friend bool operator==(const SolveResult& x, const SolveResult& y) {
    return x.n == y.n && x.algo == y.algo && x.solution == y.solution &&
           x.size == y.size && x.lower_bound == y.lower_bound &&
           x.lp_bound == y.lp_bound && x.ratio == y.ratio &&
           x.time_ms == y.time_ms &&
           x.trace_iterations == y.trace_iterations &&
           x.trace_passes == y.trace_passes;
  }
};

inline std::string serialize_solve_result(const SolveResult& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["algo"] = r.algo;
  auto solution = nlohmann::ordered_json::array();
  for (const Chord& c : r.solution)
    solution.push_back(nlohmann::ordered_json::array({c.a, c.b}));
  j["solution"] = std::move(solution);
  j["size"] = r.size;
  j["lower_bound"] = r.lower_bound;
  if (r.lp_bound)
    j["lp_bound"] = format_rational(*r.lp_bound);
  else
    j["lp_bound"] = nullptr;
  j["ratio"] = format_rational(r.ratio);
  j["time_ms"] = r.time_ms;
  j["trace"] = {{"iterations", r.trace_iterations},
                {"passes", r.trace_passes}};
  return j.dump() + "\n";
}

inline SolveResult parse_solve_result(const std::string& bytes) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad solve-result JSON: ") + e.what());
  }
  const char* required[] = {"n",     "algo",  "solution", "size",    "lower_bound",
                            "lp_bound", "ratio", "time_ms",  "trace"};
  for (const char* key : required)
    if (!j.is_object() || !j.contains(key))
      throw FormatError(std::string("solve result must contain \"") + key +
                        "\"");
  SolveResult r;
  r.n = j["n"].get<int>();
  r.algo = j["algo"].get<std::string>();
  for (const auto& item : j["solution"]) {
    if (!item.is_array() || item.size() != 2)
      throw FormatError("solution entries must be [a, b] pairs");
    r.solution.push_back(
        make_chord(item[0].get<int>(), item[1].get<int>(), r.n));
  }
  r.size = j["size"].get<int>();
  r.lower_bound = j["lower_bound"].get<long long>();
  if (!j["lp_bound"].is_null())
    r.lp_bound = parse_rational(j["lp_bound"].get<std::string>());
  r.ratio = parse_rational(j["ratio"].get<std::string>());
  r.time_ms = j["time_ms"].get<long long>();
  if (!j["trace"].is_object() || !j["trace"].contains("iterations") ||
      !j["trace"].contains("passes"))
    throw FormatError("trace must contain \"iterations\" and \"passes\"");
  r.trace_iterations = j["trace"]["iterations"].get<int>();
  r.trace_passes = j["trace"]["passes"].get<int>();
  return r;
}

}  // namespace vca
