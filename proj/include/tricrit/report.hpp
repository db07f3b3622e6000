#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "tricrit/closure.hpp"
#include "tricrit/verify.hpp"

namespace tricrit::verify {

struct Options {
  std::vector<unsigned> ranks = {3, 4, 5, 6};
  bool check_aut = true;
  bool check_sl = true;
  bool check_tree = true;
  std::size_t cap = closure::kDefaultClosureCap;
  unsigned bfs_depth = 0;  // 0 = use the recorded per-rank depth
  std::uint64_t seed = 42;
  unsigned iterations = 1000;
  bool json = false;
};

struct RunResult {
  nlohmann::ordered_json report;  // timings under the separate "timings_ms" key
  int exit_code = 0;              // 0 pass, 1 fail, 2 inconclusive
};

/// Run the selected checks and assemble the report. Identical options (and
/// seed) produce byte-identical reports apart from "timings_ms".
RunResult run(const Options& opts);

std::string render_text(const nlohmann::ordered_json& report);

nlohmann::ordered_json to_json(const AutSection& s);
nlohmann::ordered_json to_json(const SlOddSection& s);
nlohmann::ordered_json to_json(const SlEvenSection& s);
nlohmann::ordered_json to_json(const TreeSection& s);

}  // namespace tricrit::verify
