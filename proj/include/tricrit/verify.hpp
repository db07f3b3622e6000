#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tricrit/closure.hpp"
#include "tricrit/freegroup.hpp"
#include "tricrit/intmat.hpp"

namespace tricrit::verify {

enum class Status { kPass, kFail, kInconclusive, kSkipped };

std::string status_name(Status s);

/// Orders of the named generators and their certifying products.
struct OrderChecks {
  unsigned theta = 0, tau = 0, eta = 0, alpha = 0;
  unsigned theta_eta = 0;  // expected 3
  unsigned theta_tau = 0;  // expected 4
  bool ok = false;
};

/// Everything certified about the three sets at one rank on the
/// automorphism side.
struct AutSection {
  unsigned n = 0;
  bool heavy_skipped = false;  // subgroup enumerations disabled at this rank
  OrderChecks orders;

  closure::DihedralCertificate a23_dihedral;  // <A2 u A3> = D8
  std::map<std::size_t, std::size_t> a23_orders;

  closure::DirectProductCertificate a12_product;  // <A1 u A2> = W_{n-2} x D6
  std::size_t a12_expected_order = 0;

  std::size_t a13_order = 0;
  bool a13_complete = false;
  bool a13_monomial = false;      // abelianizations are signed permutations
  bool a13_order_divides = false; // |<A1 u A3>| divides |W_n|
  std::size_t a13_w_order = 0;

  std::size_t witness_entries = 0;
  std::size_t witness_max_word = 0;
  bool witnesses_ok = false;
  bool anchors_ok = false;

  Status status = Status::kFail;
};

AutSection verify_aut(unsigned n, std::size_t cap);

/// Odd-rank SL check: the determinant twist g -> det(g)g sends the generator
/// images into SL(n,Z), and re-evaluating every witness word over the twisted
/// matrices reproduces the twisted targets; in particular every transvection
/// word lands exactly on its elementary matrix.
struct SlOddSection {
  unsigned n = 0;
  std::size_t generators = 0;
  bool all_gen_dets_one = false;
  std::size_t h12_order = 0, h13_order = 0, h23_order = 0;  // twisted pairwise closures
  bool closures_complete = false;
  bool closures_in_sl = false;    // det == 1 across every enumerated element
  std::size_t entries_checked = 0;
  bool transfer_ok = false;       // twisted word value == twist of target, all entries
  std::size_t elementary_targets = 0;
  std::size_t elementary_hit = 0; // rho words equal to E_ji(1) exactly
  Status status = Status::kFail;
};

SlOddSection verify_sl_odd(unsigned n, std::size_t cap = closure::kDefaultClosureCap);

/// Even-rank SL check: rank n-1 generators are twisted and embedded, the
/// extra rotation block matrix abar is adjoined, the finite pairwise closures
/// are re-certified, and a bounded meet-in-the-middle search must write every
/// elementary matrix E_ij(1) as a word in the generators. No word within the
/// recorded depth means INCONCLUSIVE, never a silent pass.
struct SlEvenSection {
  unsigned n = 0;
  unsigned depth = 0;           // total MITM depth in use
  bool depth_was_pinned = false;
  std::size_t a12_order = 0, a13_order = 0, a23_order = 0;
  bool closures_complete = false;
  std::size_t forward_ball = 0;
  std::size_t targets_total = 0;
  std::vector<std::pair<std::string, std::vector<std::string>>> found;  // target -> word
  std::vector<std::string> missing;
  std::size_t max_word_length = 0;
  Status status = Status::kFail;
};

SlEvenSection verify_sl_even(unsigned n, std::size_t cap, unsigned depth_override);

/// Randomized finite-tree suites plus the fixed free-product ball demo.
struct TreeSection {
  std::uint64_t seed = 0;
  unsigned iterations = 0;

  unsigned helly_runs = 0, helly_engaged = 0, helly_violations = 0;
  unsigned fixed_identity_runs = 0, fixed_identity_violations = 0;
  unsigned triangle_runs = 0, triangle_violations = 0;
  unsigned circumcentre_runs = 0, circumcentre_moved = 0, circumcentre_violations = 0;
  unsigned product_runs = 0, product_violations = 0;

  unsigned ball_vertices = 0;
  unsigned disp_a = ~0u, disp_b = ~0u, disp_ab = ~0u, disp_abab = ~0u;
  bool ball_ok = false;

  Status status = Status::kFail;
};

TreeSection run_tree_suite(std::uint64_t seed, unsigned iterations);

}  // namespace tricrit::verify
