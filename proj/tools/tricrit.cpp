// Command-line front end: runs the verification suites and prints a report.

#include "CLI11.hpp"

#include "tricrit/report.hpp"

#include <charconv>
#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

constexpr unsigned kMinRank = 3;
constexpr unsigned kMaxRank = 8;

unsigned parse_rank(std::string_view text) {
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("'" + std::string(text) + "' is not a rank");
  }
  if (value < kMinRank || value > kMaxRank) {
    throw std::invalid_argument("rank " + std::to_string(value) + " is outside the supported range " +
                                std::to_string(kMinRank) + ".." + std::to_string(kMaxRank));
  }
  return value;
}

std::vector<unsigned> parse_rank_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    return {parse_rank(text)};
  }
  const unsigned lo = parse_rank(std::string_view(text).substr(0, dots));
  const unsigned hi = parse_rank(std::string_view(text).substr(dots + 2));
  if (lo > hi) {
    throw std::invalid_argument("empty rank range '" + text + "'");
  }
  std::vector<unsigned> ranks;
  for (unsigned n = lo; n <= hi; ++n) {
    ranks.push_back(n);
  }
  return ranks;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "tricrit: certifies the finite-subgroup and fixed-point machinery behind\n"
      "property FA for Aut(F_n) and SL(n,Z), plus the supporting tree lemmas."};
  app.set_version_flag("--version", "tricrit 1.0.0");

  std::string ranks_arg = "3..6";
  std::string check = "all";
  std::size_t cap = tricrit::closure::kDefaultClosureCap;
  unsigned bfs_depth = 0;
  std::uint64_t seed = 42;
  unsigned iterations = 1000;
  std::string format = "text";

  app.add_option("--n", ranks_arg,
                 "rank or inclusive rank range to check, e.g. 4 or 3..6 (supported: 3..8)")
      ->capture_default_str();
  app.add_option("--check", check, "which suite to run")
      ->check(CLI::IsMember({"aut", "sl", "tree", "all"}))
      ->capture_default_str();
  app.add_option("--cap", cap, "element cap for closure enumerations")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--bfs-depth", bfs_depth,
                 "override the elementary-matrix search depth for even ranks (0 = recorded depth)")
      ->capture_default_str();
  app.add_option("--seed", seed, "seed for the randomized tree suite")->capture_default_str();
  app.add_option("--iters", iterations, "iterations for the randomized tree suite")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help / --version
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return 64;
  }

  tricrit::verify::Options opts;
  try {
    opts.ranks = parse_rank_range(ranks_arg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "--n: " << e.what() << "\n" << app.help();
    return 64;
  }
  opts.check_aut = check == "aut" || check == "all";
  opts.check_sl = check == "sl" || check == "all";
  opts.check_tree = check == "tree" || check == "all";
  opts.cap = cap;
  opts.bfs_depth = bfs_depth;
  opts.seed = seed;
  opts.iterations = iterations;
  opts.json = format == "json";

  const auto result = tricrit::verify::run(opts);
  if (opts.json) {
    std::cout << result.report.dump(2) << "\n";
  } else {
    std::cout << tricrit::verify::render_text(result.report);
  }
  return result.exit_code;
}
