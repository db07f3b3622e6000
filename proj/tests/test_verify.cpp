#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <string>

#include "tricrit/generating_sets.hpp"
#include "tricrit/report.hpp"
#include "tricrit/verify.hpp"
#include "tricrit/witness.hpp"

using namespace tricrit;
using verify::Status;

TEST_CASE("expected subgroup orders") {
  CHECK(verify::expected_a12_order(3) == 12);
  CHECK(verify::expected_a12_order(4) == 48);
  CHECK(verify::expected_a12_order(5) == 288);
  CHECK(verify::expected_a12_order(6) == 2304);
  CHECK(verify::signed_permutation_order(3) == 48);
  CHECK(verify::signed_permutation_order(4) == 384);
  CHECK(verify::signed_permutation_order(5) == 3840);
  CHECK(verify::signed_permutation_order(6) == 46080);
  CHECK(verify::tlabel(4, 3) == "t34");
  CHECK(verify::tlabel(3, 4) == "t34");
}

TEST_CASE("generating sets carry the documented labels") {
  const auto s3 = verify::build_generating_sets(3);
  REQUIRE(s3.a1.size() == 2);
  CHECK(s3.a1[0].label == "eps3");
  CHECK(s3.a1[1].label == "eta");
  REQUIRE(s3.a2.size() == 1);
  CHECK(s3.a2[0].label == "theta");
  REQUIRE(s3.a3.size() == 1);
  CHECK(s3.a3[0].label == "tau");

  const auto s5 = verify::build_generating_sets(5);
  CHECK(s5.a1.size() == 4);  // eps5, eta, t34, t45
  CHECK(s5.label_table().size() == 6);
  CHECK(s5.a12().size() == 5);
  CHECK(s5.all().size() == 6);

  CHECK_THROWS_AS(verify::build_generating_sets(2), std::invalid_argument);
}

TEST_CASE("witness tables self-verify and carry every transvection") {
  const std::map<unsigned, std::size_t> expected_entries = {
      {3, 11}, {4, 20}, {5, 32}, {6, 47}};
  for (const auto& [n, entries] : expected_entries) {
    CAPTURE(n);
    const verify::WitnessTable w = verify::build_witness_table(n);
    CHECK(w.entries.size() == entries);
    CHECK(w.max_word_length == 5);
    CHECK_NOTHROW(verify::verify_anchor_identities(w));
    for (unsigned i = 1; i <= n; ++i)
      for (unsigned j = 1; j <= n; ++j) {
        if (i == j) continue;
        const std::string name = "rho" + std::to_string(i) + std::to_string(j);
        CHECK(w.table.count(name) == 1);
      }
  }
  CHECK_THROWS_AS(verify::build_witness_table(2), std::invalid_argument);
}

TEST_CASE("automorphism section certifies rank 3 end to end") {
  const verify::AutSection a = verify::verify_aut(3, closure::kDefaultClosureCap);
  CHECK(a.status == Status::kPass);
  CHECK_FALSE(a.heavy_skipped);
  CHECK(a.orders.ok);
  CHECK(a.a23_dihedral.ok);
  CHECK(a.a23_dihedral.group_order == 8);
  const std::map<std::size_t, std::size_t> d8 = {{1, 1}, {2, 5}, {4, 2}};
  CHECK(a.a23_orders == d8);
  CHECK(a.a12_product.ok);
  CHECK(a.a12_product.total_order == 12);
  CHECK(a.a13_complete);
  CHECK(a.a13_order == 48);
  CHECK(a.a13_monomial);
  CHECK(a.a13_order_divides);
  CHECK(a.witnesses_ok);
  CHECK(a.anchors_ok);
}

TEST_CASE("starved cap fails loudly instead of passing vacuously") {
  const verify::AutSection a = verify::verify_aut(3, 4);
  CHECK(a.status == Status::kFail);
  CHECK_FALSE(a.a23_dihedral.ok);
  CHECK_FALSE(a.a13_complete);
  // witness checking is cap-independent and still succeeds
  CHECK(a.witnesses_ok);
}

TEST_CASE("ranks above the enumeration bound skip the heavy parts only") {
  const verify::AutSection a = verify::verify_aut(7, closure::kDefaultClosureCap);
  CHECK(a.heavy_skipped);
  CHECK(a.status == Status::kPass);
  CHECK(a.orders.ok);
  CHECK(a.a23_dihedral.ok);  // H23 has 8 elements at any rank
  CHECK(a.witnesses_ok);
  CHECK(a.a13_order == 0);  // never attempted
}

TEST_CASE("odd-rank SL section") {
  const verify::SlOddSection s = verify::verify_sl_odd(3);
  CHECK(s.status == Status::kPass);
  CHECK(s.all_gen_dets_one);
  CHECK(s.closures_complete);
  CHECK(s.closures_in_sl);
  CHECK(s.h23_order == 8);
  CHECK(s.transfer_ok);
  CHECK(s.entries_checked == 11);
  CHECK(s.elementary_targets == 6);
  CHECK(s.elementary_hit == 6);

  CHECK_THROWS_AS(verify::verify_sl_odd(4), std::invalid_argument);
}

TEST_CASE("even-rank SL section finds every elementary matrix at the recorded depth") {
  const verify::SlEvenSection s = verify::verify_sl_even(4, closure::kDefaultClosureCap, 0);
  CHECK(s.status == Status::kPass);
  CHECK(s.depth == 14);
  CHECK(s.depth_was_pinned);
  CHECK(s.closures_complete);
  CHECK(s.a23_order == 8);
  CHECK(s.targets_total == 12);
  CHECK(s.found.size() == 12);
  CHECK(s.missing.empty());
  CHECK(s.max_word_length <= s.depth);
  CHECK(s.forward_ball > 0);

  CHECK_THROWS_AS(verify::verify_sl_even(3, closure::kDefaultClosureCap, 0),
                  std::invalid_argument);
}

TEST_CASE("an insufficient search depth is INCONCLUSIVE, never a silent pass") {
  const verify::SlEvenSection s = verify::verify_sl_even(4, closure::kDefaultClosureCap, 4);
  CHECK(s.status == Status::kInconclusive);
  CHECK_FALSE(s.depth_was_pinned);
  CHECK_FALSE(s.missing.empty());
}

TEST_CASE("tree suite runs clean on a fresh seed") {
  const verify::TreeSection t = verify::run_tree_suite(7, 60);
  CHECK(t.status == Status::kPass);
  CHECK(t.helly_runs == 60);
  CHECK(t.helly_violations == 0);
  CHECK(t.fixed_identity_runs == 30);
  CHECK(t.fixed_identity_violations == 0);
  CHECK(t.triangle_violations == 0);
  CHECK(t.circumcentre_violations == 0);
  CHECK(t.product_violations == 0);
  CHECK(t.ball_vertices == 91);
  CHECK(t.ball_ok);
  CHECK(t.disp_ab == 2);
}

TEST_CASE("reports are deterministic and exit codes reflect the verdict") {
  verify::Options opts;
  opts.ranks = {3};
  opts.iterations = 50;

  const verify::RunResult r1 = verify::run(opts);
  const verify::RunResult r2 = verify::run(opts);
  CHECK(r1.exit_code == 0);
  CHECK(r1.report.at("verdict") == "PASS");
  auto strip = [](nlohmann::ordered_json j) {
    j.erase("timings_ms");
    return j.dump();
  };
  CHECK(strip(r1.report) == strip(r2.report));

  verify::Options starved;
  starved.ranks = {3};
  starved.check_sl = false;
  starved.check_tree = false;
  starved.cap = 4;
  const verify::RunResult rf = verify::run(starved);
  CHECK(rf.exit_code == 1);
  CHECK(rf.report.at("verdict") == "FAIL");

  verify::Options shallow;
  shallow.ranks = {4};
  shallow.check_aut = false;
  shallow.check_tree = false;
  shallow.bfs_depth = 4;
  const verify::RunResult ri = verify::run(shallow);
  CHECK(ri.exit_code == 2);
  CHECK(ri.report.at("verdict") == "INCONCLUSIVE");
}
