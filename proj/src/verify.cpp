#include "tricrit/verify.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "tricrit/bass_serre.hpp"
#include "tricrit/generating_sets.hpp"
#include "tricrit/pinned.hpp"
#include "tricrit/random_trees.hpp"
#include "tricrit/witness.hpp"

namespace tricrit::verify {

using freegroup::Basis;
using freegroup::FreeAut;
using freegroup::NamedGenerator;
using intmat::Int;
using intmat::IntMatrix;
using AutGen = closure::LabeledGen<FreeAut>;
using MatGen = closure::LabeledGen<IntMatrix>;

std::string status_name(Status s) {
  switch (s) {
    case Status::kPass: return "PASS";
    case Status::kFail: return "FAIL";
    case Status::kInconclusive: return "INCONCLUSIVE";
    case Status::kSkipped: return "SKIPPED";
  }
  return "?";
}

AutSection verify_aut(unsigned n, std::size_t cap) {
  AutSection s;
  s.n = n;
  Basis basis(n);
  const FreeAut id = FreeAut::identity(basis);
  const FreeAut theta = aut_from_generator(NamedGenerator::theta(), basis);
  const FreeAut tau = aut_from_generator(NamedGenerator::tau(), basis);
  const FreeAut eta = aut_from_generator(NamedGenerator::eta(), basis);
  const FreeAut alpha = aut_from_generator(NamedGenerator::alpha(), basis);

  auto ord = [](const FreeAut& f) { return aut_order(f, 64).value_or(0); };
  s.orders.theta = ord(theta);
  s.orders.tau = ord(tau);
  s.orders.eta = ord(eta);
  s.orders.alpha = ord(alpha);
  s.orders.theta_eta = ord(theta * eta);
  s.orders.theta_tau = ord(theta * tau);
  s.orders.ok = s.orders.theta == 2 && s.orders.tau == 2 && s.orders.eta == 2 &&
                s.orders.alpha == 4 && s.orders.theta_eta == 3 && s.orders.theta_tau == 4;

  GeneratingSets sets = build_generating_sets(n);

  // <A2 u A3> = <theta, tau>: dihedral of order 8.
  s.a23_dihedral = closure::check_dihedral(theta, tau, id, 4, cap);
  {
    auto gens = sets.a23();
    auto h23 = closure::enumerate_closure(id, std::span<const AutGen>(gens), cap);
    if (h23.complete) s.a23_orders = closure::order_multiset(h23, id, 16);
  }

  // Witness table: constructing it *is* the verification of every entry.
  try {
    WitnessTable table = build_witness_table(n);
    verify_anchor_identities(table);
    s.witness_entries = table.entries.size();
    s.witness_max_word = table.max_word_length;
    s.witnesses_ok = true;
    s.anchors_ok = true;
  } catch (const std::logic_error&) {
    s.witnesses_ok = false;
    s.anchors_ok = false;
  }

  if (n > kMaxEnumerationRank) {
    s.heavy_skipped = true;
    s.status = s.orders.ok && s.a23_dihedral.ok && s.witnesses_ok ? Status::kPass : Status::kFail;
    return s;
  }

  // <A1 u A2> = W_{n-2} x D6, factored as <eps_n, transpositions> x <theta, eta>.
  {
    std::vector<AutGen> w_factor, d_factor;
    for (const AutGen& g : sets.a1)
      if (g.label != "eta") w_factor.push_back(g);
    d_factor.push_back({"theta", theta});
    d_factor.push_back({"eta", eta});
    s.a12_product = closure::check_direct_product(id, std::span<const AutGen>(w_factor),
                                                  std::span<const AutGen>(d_factor), cap);
    s.a12_expected_order = expected_a12_order(n);
  }

  // <A1 u A3>: complete, inside the signed-permutation subgroup.
  {
    auto gens = sets.a13();
    auto h13 = closure::enumerate_closure(id, std::span<const AutGen>(gens), cap);
    s.a13_complete = h13.complete;
    s.a13_order = h13.order();
    s.a13_w_order = signed_permutation_order(n);
    if (h13.complete) {
      auto monomial = closure::check_containment(
          h13, [](const FreeAut& f) { return intmat::is_monomial(freegroup::abelianize(f)); });
      s.a13_monomial = monomial.all;
      s.a13_order_divides = s.a13_w_order % h13.order() == 0;
    }
  }

  bool pass = s.orders.ok && s.a23_dihedral.ok && s.a23_dihedral.group_order == 8 &&
              s.a12_product.ok && s.a12_product.total_order == s.a12_expected_order &&
              s.a13_complete && s.a13_monomial && s.a13_order_divides && s.witnesses_ok &&
              s.anchors_ok;
  s.status = pass ? Status::kPass : Status::kFail;
  return s;
}

namespace {

/// Twisted matrix images of the rank-n generating sets: label -> det_twist of
/// the abelianization.
std::map<std::string, IntMatrix> twisted_table(const GeneratingSets& sets) {
  std::map<std::string, IntMatrix> out;
  for (const AutGen& g : sets.all())
    out.emplace(g.label, intmat::det_twist(freegroup::abelianize(g.value)));
  return out;
}

}  // namespace

SlOddSection verify_sl_odd(unsigned n, std::size_t cap) {
  if (n % 2 == 0) throw std::invalid_argument("verify_sl_odd needs odd rank");
  SlOddSection s;
  s.n = n;
  GeneratingSets sets = build_generating_sets(n);
  std::map<std::string, IntMatrix> table = twisted_table(sets);
  s.generators = table.size();
  s.all_gen_dets_one = true;
  for (const auto& [label, m] : table)
    if (intmat::mat_det(m) != 1) s.all_gen_dets_one = false;

  // The twisted pairwise subgroups H_ij^+ stay finite and land inside SL:
  // enumerate each closure completely and check det == 1 elementwise.
  {
    const IntMatrix mat_id = IntMatrix::identity(n);
    auto twist = [&table](const std::vector<AutGen>& src) {
      std::vector<MatGen> out;
      out.reserve(src.size());
      for (const AutGen& g : src) out.push_back({g.label, table.at(g.label)});
      return out;
    };
    s.closures_complete = true;
    s.closures_in_sl = true;
    auto run = [&](const std::vector<AutGen>& src, std::size_t& order_out) {
      auto gens = twist(src);
      auto c = closure::enumerate_closure(mat_id, std::span<const MatGen>(gens), cap);
      if (!c.complete) {
        s.closures_complete = false;
        return;
      }
      order_out = c.order();
      auto inside = closure::check_containment(
          c, [](const IntMatrix& m) { return intmat::mat_det(m) == 1; });
      if (!inside.all) s.closures_in_sl = false;
    };
    run(sets.a12(), s.h12_order);
    run(sets.a13(), s.h13_order);
    run(sets.a23(), s.h23_order);
  }

  // Chained evaluation over the twisted matrices: because the twist is a
  // homomorphism in odd rank, every entry must land on the twist of its
  // target's abelianization; transvection entries land on E_ji(1) on the
  // nose (the column convention transposes indices).
  WitnessTable words = build_witness_table(n);
  const IntMatrix mat_id = IntMatrix::identity(n);
  s.transfer_ok = true;
  for (const WitnessEntry& e : words.entries) {
    IntMatrix value = closure::witness_evaluate(std::span<const std::string>(e.word), table,
                                                mat_id);
    IntMatrix expected = intmat::det_twist(freegroup::abelianize(e.target));
    if (!(value == expected) || intmat::mat_det(value) != 1) {
      s.transfer_ok = false;
      break;
    }
    table.emplace(e.name, value);
    ++s.entries_checked;
  }

  s.elementary_targets = static_cast<std::size_t>(n) * (n - 1);
  if (s.transfer_ok) {
    for (unsigned i = 1; i <= n; ++i)
      for (unsigned j = 1; j <= n; ++j) {
        if (i == j) continue;
        auto it = table.find("rho" + std::to_string(i) + std::to_string(j));
        if (it != table.end() && it->second == intmat::elementary(n, j, i, 1))
          ++s.elementary_hit;
      }
  }

  s.status = s.all_gen_dets_one && s.closures_complete && s.closures_in_sl && s.transfer_ok &&
                     s.elementary_hit == s.elementary_targets
                 ? Status::kPass
                 : Status::kFail;
  return s;
}

namespace {

struct MitmOutcome {
  std::size_t forward_ball = 0;
  std::vector<std::pair<std::string, std::vector<std::string>>> found;
  std::vector<std::string> missing;
  std::size_t max_word_length = 0;
};

/// Meet-in-the-middle word search: forward ball of radius depth/2 from the
/// identity, then for each target a backward walk of radius depth - depth/2
/// multiplying by generator inverses on the right.
MitmOutcome mitm_search(const std::vector<MatGen>& gens,
                        const std::vector<std::pair<std::string, IntMatrix>>& targets,
                        unsigned n, unsigned depth) {
  const unsigned df = depth / 2;
  const unsigned db = depth - df;
  const IntMatrix id = IntMatrix::identity(n);

  std::vector<MatGen> inverses;
  inverses.reserve(gens.size());
  for (const MatGen& g : gens)
    inverses.push_back({g.label, intmat::finite_order_inverse(g.value, 16)});

  struct Entry {
    std::uint32_t parent;  // index into the exploration order, ~0 for root
    std::uint16_t gen;
  };
  std::unordered_map<IntMatrix, std::uint32_t, closure::HashByValue<IntMatrix>> index;
  std::vector<Entry> info;
  std::vector<const IntMatrix*> by_index;
  std::vector<std::uint32_t> depth_of;
  std::deque<std::uint32_t> work;

  auto intern = [&](const IntMatrix& m, std::uint32_t parent, std::uint16_t gen,
                    std::uint32_t d) -> bool {
    auto [it, fresh] = index.emplace(m, static_cast<std::uint32_t>(info.size()));
    if (!fresh) return false;
    info.push_back({parent, gen});
    by_index.push_back(&it->first);
    depth_of.push_back(d);
    work.push_back(it->second);
    return true;
  };
  intern(id, ~0u, 0, 0);
  while (!work.empty()) {
    std::uint32_t cur = work.front();
    work.pop_front();
    if (depth_of[cur] == df) continue;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      IntMatrix next = *by_index[cur] * gens[g].value;
      intern(next, cur, static_cast<std::uint16_t>(g), depth_of[cur] + 1);
    }
  }

  auto forward_word = [&](std::uint32_t at) {
    std::vector<std::string> word;
    while (info[at].parent != ~0u) {
      word.push_back(gens[info[at].gen].label);
      at = info[at].parent;
    }
    std::reverse(word.begin(), word.end());
    return word;
  };

  MitmOutcome out;
  out.forward_ball = info.size();
  for (const auto& [name, target] : targets) {
    // Backward BFS from the target; state = target * (suffix word)^{-1}.
    std::unordered_map<IntMatrix, std::uint32_t, closure::HashByValue<IntMatrix>> bindex;
    struct BEntry {
      std::uint32_t parent;
      std::uint16_t gen;
      std::uint32_t depth;
    };
    std::vector<BEntry> binfo;
    std::vector<const IntMatrix*> bmat;
    std::deque<std::uint32_t> bwork;
    auto bintern = [&](const IntMatrix& m, std::uint32_t parent, std::uint16_t gen,
                       std::uint32_t d) {
      auto [it, fresh] = bindex.emplace(m, static_cast<std::uint32_t>(binfo.size()));
      if (!fresh) return;
      binfo.push_back({parent, gen, d});
      bmat.push_back(&it->first);
      bwork.push_back(it->second);
    };
    bintern(target, ~0u, 0, 0);
    std::optional<std::vector<std::string>> answer;
    while (!bwork.empty() && !answer) {
      std::uint32_t cur = bwork.front();
      bwork.pop_front();
      auto hit = index.find(*bmat[cur]);
      if (hit != index.end()) {
        std::vector<std::string> word = forward_word(hit->second);
        for (std::uint32_t at = cur; binfo[at].parent != ~0u; at = binfo[at].parent)
          word.push_back(gens[binfo[at].gen].label);
        answer = std::move(word);
        break;
      }
      if (binfo[cur].depth == db) continue;
      for (std::size_t g = 0; g < gens.size(); ++g) {
        IntMatrix next = *bmat[cur] * inverses[g].value;
        bintern(next, cur, static_cast<std::uint16_t>(g), binfo[cur].depth + 1);
      }
    }
    if (answer) {
      out.max_word_length = std::max(out.max_word_length, answer->size());
      out.found.emplace_back(name, std::move(*answer));
    } else {
      out.missing.push_back(name);
    }
  }
  return out;
}

}  // namespace

SlEvenSection verify_sl_even(unsigned n, std::size_t cap, unsigned depth_override) {
  if (n % 2 != 0 || n < 4) throw std::invalid_argument("verify_sl_even needs even rank >= 4");
  SlEvenSection s;
  s.n = n;
  if (depth_override != 0) {
    s.depth = depth_override;
  } else if (auto pinned = pinned_even_depth(n)) {
    s.depth = *pinned;
    s.depth_was_pinned = true;
  } else {
    s.status = Status::kInconclusive;  // no recorded depth for this rank
    return s;
  }

  // Rank n-1 generators, twisted into SL(n-1,Z), embedded, plus the rotation
  // block abar in the last two coordinates.
  GeneratingSets base = build_generating_sets(n - 1);
  std::vector<MatGen> a1bar, a2bar, a3bar;
  for (const AutGen& g : base.a1)
    a1bar.push_back({g.label, intmat::embed(intmat::det_twist(freegroup::abelianize(g.value)), n)});
  for (const AutGen& g : base.a2)
    a2bar.push_back({g.label, intmat::embed(intmat::det_twist(freegroup::abelianize(g.value)), n)});
  for (const AutGen& g : base.a3)
    a3bar.push_back({g.label, intmat::embed(intmat::det_twist(freegroup::abelianize(g.value)), n)});
  IntMatrix abar = IntMatrix::identity(n);
  abar.at(n - 2, n - 2) = 0;
  abar.at(n - 1, n - 1) = 0;
  abar.at(n - 1, n - 2) = -1;  // column n-1 holds -e_n
  abar.at(n - 2, n - 1) = 1;   // column n holds e_{n-1}
  a1bar.push_back({"abar", abar});

  const IntMatrix id = IntMatrix::identity(n);
  auto join = [](const std::vector<MatGen>& a, const std::vector<MatGen>& b) {
    std::vector<MatGen> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
  };
  auto c12 = closure::enumerate_closure(id, std::span<const MatGen>(join(a1bar, a2bar)), cap);
  auto c13 = closure::enumerate_closure(id, std::span<const MatGen>(join(a1bar, a3bar)), cap);
  auto c23 = closure::enumerate_closure(id, std::span<const MatGen>(join(a2bar, a3bar)), cap);
  s.a12_order = c12.order();
  s.a13_order = c13.order();
  s.a23_order = c23.order();
  s.closures_complete = c12.complete && c13.complete && c23.complete;

  std::vector<std::pair<std::string, IntMatrix>> targets;
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = 1; j <= n; ++j)
      if (i != j)
        targets.emplace_back("E" + std::to_string(i) + std::to_string(j),
                             intmat::elementary(n, i, j, 1));
  s.targets_total = targets.size();

  std::vector<MatGen> all = join(join(a1bar, a2bar), a3bar);
  MitmOutcome mitm = mitm_search(all, targets, n, s.depth);
  s.forward_ball = mitm.forward_ball;
  s.found = std::move(mitm.found);
  s.missing = std::move(mitm.missing);
  s.max_word_length = mitm.max_word_length;

  // Re-evaluate every found word against its target; a mismatch is a search
  // bug, not a missing witness.
  bool words_exact = true;
  {
    std::map<std::string, IntMatrix> table;
    for (const MatGen& g : all) table.emplace(g.label, g.value);
    std::map<std::string, IntMatrix> wanted;
    for (const auto& [name, m] : targets) wanted.emplace(name, m);
    for (const auto& [name, word] : s.found)
      if (!(closure::witness_evaluate(std::span<const std::string>(word), table, id) ==
            wanted.at(name)))
        words_exact = false;
  }

  if (!s.closures_complete || !words_exact)
    s.status = Status::kFail;
  else if (!s.missing.empty())
    s.status = Status::kInconclusive;
  else
    s.status = Status::kPass;
  return s;
}

TreeSection run_tree_suite(std::uint64_t seed, unsigned iterations) {
  using namespace tricrit::tree;
  TreeSection s;
  s.seed = seed;
  s.iterations = iterations;
  const unsigned half = std::max(1u, iterations / 2);

  // Helly: random subtree families on plain random trees.
  {
    Rng rng(seed ^ 0x68656c6c79ull);  // sub-suite tag
    s.helly_runs = iterations;
    for (unsigned run = 0; run < iterations; ++run) {
      Tree t = random_tree(rng, 2, 50);
      std::vector<Subtree> family;
      unsigned members = rng.range(3, 6);
      for (unsigned f = 0; f < members; ++f)
        family.push_back(random_subtree(t, rng, std::max(1u, (3 * t.point_count()) / 4)));
      try {
        HellyReport rep = helly_check(t, family);
        if (rep.pairwise_nonempty) ++s.helly_engaged;
      } catch (const std::logic_error&) {
        ++s.helly_violations;
      }
    }
  }

  // Fixed-set identity: Fix(<A>) == intersection of generator fixed sets.
  {
    Rng rng(seed ^ 0x6669786564ull);
    s.fixed_identity_runs = half;
    for (unsigned run = 0; run < half; ++run) {
      Tree t = random_symmetric_tree(rng, 14);
      std::vector<TreeIsom> gens;
      unsigned k = rng.range(1, 4);
      for (unsigned g = 0; g < k; ++g) gens.push_back(random_automorphism(t, rng));
      std::vector<closure::LabeledGen<TreeIsom>> labeled;
      for (std::size_t g = 0; g < gens.size(); ++g)
        labeled.push_back({"g" + std::to_string(g), gens[g]});
      auto group = closure::enumerate_closure(
          TreeIsom::identity(t), std::span<const closure::LabeledGen<TreeIsom>>(labeled),
          400000);
      if (!group.complete) {
        ++s.fixed_identity_violations;
        continue;
      }
      auto fix_gens = fixed_set_group(t, gens);
      auto fix_group = fixed_set_group(t, group.elements);
      if (!(fix_gens == fix_group) || !fix_gens) ++s.fixed_identity_violations;
    }
  }

  // Full three-set criterion on random symmetric trees.
  {
    Rng rng(seed ^ 0x747269616eull);
    s.triangle_runs = half;
    for (unsigned run = 0; run < half; ++run) {
      Tree t = random_symmetric_tree(rng, 14);
      std::vector<TreeIsom> gens;
      unsigned k = rng.range(3, 6);
      for (unsigned g = 0; g < k; ++g) gens.push_back(random_automorphism(t, rng));
      std::size_t third = std::max<std::size_t>(1, gens.size() / 3);
      std::span<const TreeIsom> all(gens);
      try {
        TriangleReport rep =
            triangle_criterion_check(t, all.subspan(0, third), all.subspan(third, third),
                                     all.subspan(2 * third), 400000);
        if (!rep.pairwise_nonempty || !rep.conclusion_nonempty || !rep.group_complete ||
            !rep.identity_ok)
          ++s.triangle_violations;
      } catch (const std::logic_error&) {
        ++s.triangle_violations;
      }
    }
  }

  // Circumcentre equivariance on vertex sets (type-homogeneous, so the
  // diameter stays even).
  {
    Rng rng(seed ^ 0x63697263ull);
    s.circumcentre_runs = half;
    for (unsigned run = 0; run < half; ++run) {
      Tree t = random_symmetric_tree(rng, 14);
      TreeIsom f = random_automorphism(t, rng);
      unsigned size = rng.range(1, std::max(1u, t.vertex_count()));
      std::vector<TreePoint> pts;
      for (unsigned p = 0; p < size; ++p)
        pts.push_back(static_cast<TreePoint>(rng.below(t.vertex_count())));
      std::vector<TreePoint> image;
      image.reserve(pts.size());
      for (TreePoint p : pts) image.push_back(f.point_image(t, p));
      try {
        TreePoint c = circumcentre(t, pts);
        TreePoint ci = circumcentre(t, image);
        if (ci != f.point_image(t, c))
          ++s.circumcentre_violations;
        else if (ci != c)
          ++s.circumcentre_moved;
      } catch (const std::logic_error&) {
        ++s.circumcentre_violations;
      }
    }
  }

  // Two-set product criterion.
  {
    Rng rng(seed ^ 0x70726f64ull);
    s.product_runs = half;
    for (unsigned run = 0; run < half; ++run) {
      Tree t = random_symmetric_tree(rng, 14);
      std::vector<TreeIsom> left, right;
      unsigned kl = rng.range(1, 3), kr = rng.range(1, 3);
      for (unsigned g = 0; g < kl; ++g) left.push_back(random_automorphism(t, rng));
      for (unsigned g = 0; g < kr; ++g) right.push_back(random_automorphism(t, rng));
      ProductReport rep = product_criterion_check(t, left, right);
      // Finite trees: the fixed sets always share the centre, so the
      // criterion must resolve through the nonempty-intersection branch.
      if (!rep.ok || !rep.intersection_nonempty) ++s.product_violations;
    }
  }

  // Displacement demo in the Bass-Serre ball of Z2 * Z3.
  {
    BassSerreBall ball = bass_serre_ball(2, 3, 8);
    s.ball_vertices = ball.ball.vertex_count();
    s.disp_a = min_displacement(ball, "a", 4);
    s.disp_b = min_displacement(ball, "b", 4);
    s.disp_ab = min_displacement(ball, "ab", 4);
    s.disp_abab = min_displacement(ball, "abab", 4);
    s.ball_ok = s.disp_a == 0 && s.disp_b == 0 && s.disp_ab == 2 && s.disp_abab == 4;
  }

  bool pass = s.helly_violations == 0 && s.fixed_identity_violations == 0 &&
              s.triangle_violations == 0 && s.circumcentre_violations == 0 &&
              s.product_violations == 0 && s.ball_ok;
  s.status = pass ? Status::kPass : Status::kFail;
  return s;
}

}  // namespace tricrit::verify
