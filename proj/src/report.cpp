#include "tricrit/report.hpp"

#include <chrono>

#include "tricrit/pinned.hpp"

namespace tricrit::verify {

using nlohmann::ordered_json;

namespace {

ordered_json dihedral_json(const closure::DihedralCertificate& c) {
  ordered_json j;
  j["ok"] = c.ok;
  j["m"] = c.m;
  j["group_order"] = c.group_order;
  if (!c.ok) j["failure"] = c.failure;
  return j;
}

ordered_json product_json(const closure::DirectProductCertificate& c) {
  ordered_json j;
  j["ok"] = c.ok;
  j["left_order"] = c.left_order;
  j["right_order"] = c.right_order;
  j["total_order"] = c.total_order;
  if (!c.ok) j["failure"] = c.failure;
  return j;
}

double elapsed_ms(std::chrono::steady_clock::time_point from) {
  using namespace std::chrono;
  return duration<double, std::milli>(steady_clock::now() - from).count();
}

}  // namespace

ordered_json to_json(const AutSection& s) {
  ordered_json j;
  j["n"] = s.n;
  j["status"] = status_name(s.status);
  j["heavy_skipped"] = s.heavy_skipped;
  j["orders"] = {{"theta", s.orders.theta},         {"tau", s.orders.tau},
                 {"eta", s.orders.eta},             {"alpha", s.orders.alpha},
                 {"theta_eta", s.orders.theta_eta}, {"theta_tau", s.orders.theta_tau},
                 {"ok", s.orders.ok}};
  j["a23"] = dihedral_json(s.a23_dihedral);
  {
    ordered_json orders;
    for (const auto& [order, count] : s.a23_orders) orders[std::to_string(order)] = count;
    j["a23"]["element_orders"] = std::move(orders);
  }
  if (!s.heavy_skipped) {
    j["a12"] = product_json(s.a12_product);
    j["a12"]["expected_order"] = s.a12_expected_order;
    j["a13"] = {{"order", s.a13_order},
                {"complete", s.a13_complete},
                {"monomial", s.a13_monomial},
                {"order_divides_w", s.a13_order_divides},
                {"w_order", s.a13_w_order}};
  }
  j["witnesses"] = {{"entries", s.witness_entries},
                    {"max_word", s.witness_max_word},
                    {"ok", s.witnesses_ok},
                    {"anchors_ok", s.anchors_ok}};
  return j;
}

ordered_json to_json(const SlOddSection& s) {
  ordered_json j;
  j["n"] = s.n;
  j["status"] = status_name(s.status);
  j["case"] = "odd";
  j["generators"] = s.generators;
  j["all_gen_dets_one"] = s.all_gen_dets_one;
  j["h12_order"] = s.h12_order;
  j["h13_order"] = s.h13_order;
  j["h23_order"] = s.h23_order;
  j["closures_complete"] = s.closures_complete;
  j["closures_in_sl"] = s.closures_in_sl;
  j["entries_checked"] = s.entries_checked;
  j["transfer_ok"] = s.transfer_ok;
  j["elementary_targets"] = s.elementary_targets;
  j["elementary_hit"] = s.elementary_hit;
  return j;
}

ordered_json to_json(const SlEvenSection& s) {
  ordered_json j;
  j["n"] = s.n;
  j["status"] = status_name(s.status);
  j["case"] = "even";
  j["depth"] = s.depth;
  j["depth_was_pinned"] = s.depth_was_pinned;
  j["closures"] = {{"a12_order", s.a12_order},
                   {"a13_order", s.a13_order},
                   {"a23_order", s.a23_order},
                   {"complete", s.closures_complete}};
  j["forward_ball"] = s.forward_ball;
  j["targets_total"] = s.targets_total;
  j["found"] = ordered_json::object();
  for (const auto& [name, word] : s.found) {
    std::string flat;
    for (const std::string& label : word) {
      if (!flat.empty()) flat += ' ';
      flat += label;
    }
    j["found"][name] = flat;
  }
  j["missing"] = s.missing;
  j["max_word_length"] = s.max_word_length;
  return j;
}

ordered_json to_json(const TreeSection& s) {
  ordered_json j;
  j["status"] = status_name(s.status);
  j["seed"] = s.seed;
  j["iterations"] = s.iterations;
  j["helly"] = {{"runs", s.helly_runs},
                {"engaged", s.helly_engaged},
                {"violations", s.helly_violations}};
  j["fixed_identity"] = {{"runs", s.fixed_identity_runs},
                         {"violations", s.fixed_identity_violations}};
  j["triangle"] = {{"runs", s.triangle_runs}, {"violations", s.triangle_violations}};
  j["circumcentre"] = {{"runs", s.circumcentre_runs},
                       {"moved", s.circumcentre_moved},
                       {"violations", s.circumcentre_violations}};
  j["product"] = {{"runs", s.product_runs}, {"violations", s.product_violations}};
  j["free_product_ball"] = {{"m", 2},
                            {"k", 3},
                            {"radius", 8},
                            {"vertices", s.ball_vertices},
                            {"displacement_a", s.disp_a},
                            {"displacement_b", s.disp_b},
                            {"displacement_ab", s.disp_ab},
                            {"displacement_abab", s.disp_abab},
                            {"ok", s.ball_ok}};
  return j;
}

RunResult run(const Options& opts) {
  auto started = std::chrono::steady_clock::now();
  ordered_json report;
  report["tool"] = "tricrit";
  report["options"] = {{"ranks", opts.ranks},
                       {"check_aut", opts.check_aut},
                       {"check_sl", opts.check_sl},
                       {"check_tree", opts.check_tree},
                       {"cap", opts.cap},
                       {"bfs_depth", opts.bfs_depth},
                       {"seed", opts.seed},
                       {"iterations", opts.iterations}};
  report["conventions"] = {
      {"composition", "right-to-left: a word f g h applies h first"},
      {"abelianization", "column j carries the exponent sums of the image of a_j"},
      {"distances", "tree distances count half-edges of the barycentric subdivision"}};

  ordered_json timings = ordered_json::object();
  bool any_fail = false, any_inconclusive = false;
  auto note = [&](Status s) {
    if (s == Status::kFail) any_fail = true;
    if (s == Status::kInconclusive) any_inconclusive = true;
  };

  if (opts.check_aut) {
    ordered_json aut = ordered_json::object();
    for (unsigned n : opts.ranks) {
      auto t0 = std::chrono::steady_clock::now();
      AutSection s = verify_aut(n, opts.cap);
      timings["aut_n" + std::to_string(n)] = elapsed_ms(t0);
      note(s.status);
      aut[std::to_string(n)] = to_json(s);
    }
    report["aut"] = std::move(aut);
  }

  if (opts.check_sl) {
    ordered_json sl = ordered_json::object();
    for (unsigned n : opts.ranks) {
      auto t0 = std::chrono::steady_clock::now();
      ordered_json entry;
      if (n % 2 == 1) {
        SlOddSection s = verify_sl_odd(n, opts.cap);
        note(s.status);
        entry = to_json(s);
      } else if (n > kMaxEnumerationRank) {
        entry = {{"n", n}, {"status", status_name(Status::kSkipped)}, {"case", "even"},
                 {"reason", "enumeration disabled above rank 6"}};
      } else {
        SlEvenSection s = verify_sl_even(n, opts.cap, opts.bfs_depth);
        note(s.status);
        entry = to_json(s);
      }
      timings["sl_n" + std::to_string(n)] = elapsed_ms(t0);
      sl[std::to_string(n)] = std::move(entry);
    }
    report["sl"] = std::move(sl);
  }

  if (opts.check_tree) {
    auto t0 = std::chrono::steady_clock::now();
    TreeSection s = run_tree_suite(opts.seed, opts.iterations);
    timings["tree"] = elapsed_ms(t0);
    note(s.status);
    report["tree"] = to_json(s);
  }

  report["verdict"] = any_fail ? "FAIL" : any_inconclusive ? "INCONCLUSIVE" : "PASS";
  timings["total"] = elapsed_ms(started);
  report["timings_ms"] = std::move(timings);

  RunResult result;
  result.report = std::move(report);
  result.exit_code = any_fail ? 1 : any_inconclusive ? 2 : 0;
  return result;
}

namespace {

void render_section(std::string& out, const std::string& head, const ordered_json& j) {
  out += "  " + head;
  if (j.contains("status")) out += "  [" + j["status"].get<std::string>() + "]";
  out += "\n";
}

}  // namespace

std::string render_text(const ordered_json& report) {
  std::string out;
  out += "tricrit verification report\n";
  out += "verdict: " + report["verdict"].get<std::string>() + "\n";
  if (report.contains("aut")) {
    out += "automorphism side:\n";
    for (const auto& [key, j] : report["aut"].items()) {
      std::string head = "rank " + key + ": orders";
      head += j["orders"]["ok"].get<bool>() ? "+" : "-";
      head += " a23=" + std::to_string(j["a23"]["group_order"].get<std::size_t>());
      if (j.contains("a12"))
        head += " a12=" + std::to_string(j["a12"]["total_order"].get<std::size_t>());
      if (j.contains("a13"))
        head += " a13=" + std::to_string(j["a13"]["order"].get<std::size_t>());
      head += " witnesses=" + std::to_string(j["witnesses"]["entries"].get<std::size_t>());
      render_section(out, head, j);
    }
  }
  if (report.contains("sl")) {
    out += "integral linear side:\n";
    for (const auto& [key, j] : report["sl"].items()) {
      std::string head = "rank " + key + " (" + j["case"].get<std::string>() + ")";
      if (j.contains("elementary_hit"))
        head += ": elementary " + std::to_string(j["elementary_hit"].get<std::size_t>()) + "/" +
                std::to_string(j["elementary_targets"].get<std::size_t>());
      if (j.contains("missing"))
        head += ": missing " + std::to_string(j["missing"].size()) + " of " +
                std::to_string(j["targets_total"].get<std::size_t>());
      render_section(out, head, j);
    }
  }
  if (report.contains("tree")) {
    out += "tree side:\n";
    const auto& j = report["tree"];
    std::string head = "helly " + std::to_string(j["helly"]["violations"].get<unsigned>()) +
                       " viol, fixed-identity " +
                       std::to_string(j["fixed_identity"]["violations"].get<unsigned>()) +
                       " viol, triangle " +
                       std::to_string(j["triangle"]["violations"].get<unsigned>()) +
                       " viol, circumcentre " +
                       std::to_string(j["circumcentre"]["violations"].get<unsigned>()) +
                       " viol, product " +
                       std::to_string(j["product"]["violations"].get<unsigned>()) + " viol";
    render_section(out, head, j);
    render_section(out,
                   "ball displacements: a=" +
                       std::to_string(j["free_product_ball"]["displacement_a"].get<unsigned>()) +
                       " b=" +
                       std::to_string(j["free_product_ball"]["displacement_b"].get<unsigned>()) +
                       " ab=" +
                       std::to_string(j["free_product_ball"]["displacement_ab"].get<unsigned>()),
                   ordered_json::object());
  }
  return out;
}

}  // namespace tricrit::verify
