// Acceptance gate: every release-blocking claim gets exactly one
// [PASS]/[FAIL] line, with measured wall time against its budget where one
// applies. Exit status is the number of failed criteria (capped), so CI can
// run this binary directly.

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tricrit/bass_serre.hpp"
#include "tricrit/closure.hpp"
#include "tricrit/freegroup.hpp"
#include "tricrit/generating_sets.hpp"
#include "tricrit/random_trees.hpp"
#include "tricrit/report.hpp"
#include "tricrit/rng.hpp"
#include "tricrit/tree.hpp"
#include "tricrit/verify.hpp"
#include "tricrit/witness.hpp"

namespace {

using Clock = std::chrono::steady_clock;
using tricrit::freegroup::Basis;
using tricrit::freegroup::FreeAut;
using tricrit::freegroup::NamedGenerator;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string fmt_ms(double ms) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(1) << ms << " ms";
  return out.str();
}

int g_failures = 0;

void line(int idx, const std::string& name, bool pass, const std::string& detail) {
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << idx << ": " << name;
  if (!detail.empty()) std::cout << "  (" << detail << ")";
  std::cout << "\n";
  if (!pass) ++g_failures;
}

template <typename Body>
void criterion(int idx, const std::string& name, Body&& body) {
  try {
    auto [ok, detail] = body();
    line(idx, name, ok, detail);
  } catch (const std::exception& e) {
    line(idx, name, false, std::string("exception: ") + e.what());
  }
}

}  // namespace

int main() {
  using namespace tricrit;

  criterion(1, "product orders ord(theta*eta)=3 and ord(theta*tau)=4 for n=3..6", [] {
    const auto t0 = Clock::now();
    bool ok = true;
    for (unsigned n = 3; n <= 6; ++n) {
      Basis basis(n);
      const FreeAut theta = aut_from_generator(NamedGenerator::theta(), basis);
      const FreeAut tau = aut_from_generator(NamedGenerator::tau(), basis);
      const FreeAut eta = aut_from_generator(NamedGenerator::eta(), basis);
      ok = ok && aut_order(theta * eta, 64) == std::optional<unsigned>(3);
      ok = ok && aut_order(theta * tau, 64) == std::optional<unsigned>(4);
    }
    const double ms = ms_since(t0);
    ok = ok && ms < 1000.0;
    return std::pair(ok, fmt_ms(ms) + ", budget 1000 ms");
  });

  criterion(2,
            "pairwise subgroups for n=3..6: H23 dihedral of order 8, "
            "H12 = W_{n-2} x D6, H13 complete and monomial",
            [] {
              bool ok = true;
              double n6_ms = 0;
              std::ostringstream d;
              for (unsigned n = 3; n <= 6; ++n) {
                const auto t0 = Clock::now();
                const verify::AutSection a = verify::verify_aut(n, closure::kDefaultClosureCap);
                const double ms = ms_since(t0);
                if (n == 6) n6_ms = ms;
                ok = ok && a.a23_dihedral.ok && a.a23_dihedral.group_order == 8;
                ok = ok && a.a12_product.ok &&
                     a.a12_product.total_order == verify::expected_a12_order(n);
                ok = ok && a.a13_complete && a.a13_monomial && a.a13_order_divides;
                d << "n=" << n << ": |H12|=" << a.a12_product.total_order
                  << " |H13|=" << a.a13_order << "; ";
              }
              ok = ok && n6_ms < 30000.0;
              d << "n=6 took " << fmt_ms(n6_ms) << ", budget 30000 ms";
              return std::pair(ok, d.str());
            });

  criterion(3, "witness identities: every table entry and both anchors, n=3..6", [] {
    bool ok = true;
    std::ostringstream d;
    for (unsigned n = 3; n <= 6; ++n) {
      const auto t0 = Clock::now();
      bool rank_ok = false;
      std::size_t entries = 0;
      try {
        const verify::WitnessTable w = verify::build_witness_table(n);
        verify::verify_anchor_identities(w);
        entries = w.entries.size();
        rank_ok = true;
      } catch (const std::logic_error&) {
        rank_ok = false;
      }
      const double ms = ms_since(t0);
      rank_ok = rank_ok && ms < 1000.0;
      ok = ok && rank_ok;
      d << "n=" << n << ": " << entries << " entries in " << fmt_ms(ms) << "; ";
    }
    d << "budget 1000 ms per rank";
    return std::pair(ok, d.str());
  });

  criterion(4,
            "odd-rank SL transfer: twisted generators and every enumerated "
            "subgroup element have det 1; words hit all E_ij(1); n=3,5",
            [] {
              const auto t0 = Clock::now();
              bool ok = true;
              std::ostringstream d;
              for (unsigned n : {3u, 5u}) {
                const verify::SlOddSection s = verify::verify_sl_odd(n);
                ok = ok && s.all_gen_dets_one && s.closures_complete && s.closures_in_sl &&
                     s.transfer_ok && s.elementary_hit == s.elementary_targets;
                d << "n=" << n << ": " << s.elementary_hit << "/" << s.elementary_targets
                  << " elementaries; ";
              }
              const double ms = ms_since(t0);
              ok = ok && ms < 10000.0;
              d << fmt_ms(ms) << ", budget 10000 ms";
              return std::pair(ok, d.str());
            });

  criterion(5,
            "even-rank SL (n=4): closures with abar complete; depth-bounded "
            "search writes all twelve E_ij(1) or reports INCONCLUSIVE",
            [] {
              const verify::SlEvenSection s =
                  verify::verify_sl_even(4, closure::kDefaultClosureCap, 0);
              const bool ok = s.status == verify::Status::kPass && s.closures_complete &&
                              s.missing.empty() && s.found.size() == 12;
              std::ostringstream d;
              d << "status " << verify::status_name(s.status) << ", depth " << s.depth
                << (s.depth_was_pinned ? " (recorded)" : " (override)") << ", found "
                << s.found.size() << "/" << s.targets_total;
              return std::pair(ok, d.str());
            });

  criterion(6, "Helly: 1000 pairwise-intersecting random subtree families share a point", [] {
    const auto t0 = Clock::now();
    Rng rng(42);
    unsigned tested = 0, violations = 0;
    unsigned long attempts = 0;
    while (tested < 1000 && attempts < 100000) {
      ++attempts;
      const tree::Tree t = tree::random_tree(rng, 2, 50);
      const unsigned k = rng.range(3, 6);
      std::vector<tree::Subtree> family;
      family.reserve(k);
      for (unsigned i = 0; i < k; ++i) {
        family.push_back(
            tree::random_subtree(t, rng, std::max<unsigned>(1, 3 * t.point_count() / 4)));
      }
      bool pairwise = true;
      for (std::size_t i = 0; i < family.size() && pairwise; ++i)
        for (std::size_t j = i + 1; j < family.size() && pairwise; ++j)
          pairwise = tree::subtree_intersection(t, family[i], family[j]).has_value();
      if (!pairwise) continue;
      ++tested;
      try {
        const tree::HellyReport h =
            tree::helly_check(t, std::span<const tree::Subtree>(family));
        if (!h.total_nonempty) ++violations;
      } catch (const std::logic_error&) {
        ++violations;
      }
    }
    const double ms = ms_since(t0);
    const bool ok = tested == 1000 && violations == 0 && ms < 5000.0;
    std::ostringstream d;
    d << tested << " families from " << attempts << " draws, " << violations << " violations, "
      << fmt_ms(ms) << ", budget 5000 ms";
    return std::pair(ok, d.str());
  });

  criterion(7, "fixed-set identity Fix(<gens>) = intersection of Fix(gen), 500 random actions",
            [] {
              const auto t0 = Clock::now();
              Rng rng(43);
              unsigned violations = 0;
              for (unsigned run = 0; run < 500; ++run) {
                const tree::Tree t = tree::random_symmetric_tree(rng, 14);
                const unsigned count = rng.range(3, 6);
                std::vector<tree::TreeIsom> gens;
                std::vector<closure::LabeledGen<tree::TreeIsom>> labeled;
                for (unsigned i = 0; i < count; ++i) {
                  gens.push_back(tree::random_automorphism(t, rng));
                  labeled.push_back({"g" + std::to_string(i), gens.back()});
                }
                const auto c = closure::enumerate_closure(
                    tree::TreeIsom::identity(t),
                    std::span<const closure::LabeledGen<tree::TreeIsom>>(labeled), 400000);
                if (!c.complete) {
                  ++violations;
                  continue;
                }
                const auto fix_gens =
                    tree::fixed_set_group(t, std::span<const tree::TreeIsom>(gens));
                const auto fix_group =
                    tree::fixed_set_group(t, std::span<const tree::TreeIsom>(c.elements));
                if (!(fix_gens == fix_group)) ++violations;
              }
              const double ms = ms_since(t0);
              const bool ok = violations == 0 && ms < 10000.0;
              std::ostringstream d;
              d << violations << " violations, " << fmt_ms(ms) << ", budget 10000 ms";
              return std::pair(ok, d.str());
            });

  criterion(8, "circumcentre invariance on symmetry-closed orbits, 500 instances", [] {
    Rng rng(44);
    unsigned violations = 0, nontrivial = 0;
    for (unsigned run = 0; run < 500; ++run) {
      const tree::Tree t = tree::random_symmetric_tree(rng, 14);
      const tree::TreeIsom g = tree::random_automorphism(t, rng);
      std::set<tree::TreePoint> orbit;
      const unsigned seeds = rng.range(1, 3);
      for (unsigned i = 0; i < seeds; ++i)
        orbit.insert(static_cast<tree::TreePoint>(rng.below(t.vertex_count())));
      bool grew = true;
      while (grew) {
        grew = false;
        for (const tree::TreePoint p : std::vector(orbit.begin(), orbit.end()))
          if (orbit.insert(g.vertex_image(p)).second) grew = true;
      }
      const std::vector<tree::TreePoint> pts(orbit.begin(), orbit.end());
      const tree::TreePoint c = tree::circumcentre(t, pts);
      std::vector<tree::TreePoint> image;
      image.reserve(pts.size());
      for (const tree::TreePoint p : pts) image.push_back(g.point_image(t, p));
      std::sort(image.begin(), image.end());
      const tree::TreePoint recomputed = tree::circumcentre(t, image);
      if (!g.is_identity()) ++nontrivial;
      if (recomputed != c || g.point_image(t, c) != c) ++violations;
    }
    const bool ok = violations == 0;
    std::ostringstream d;
    d << violations << " violations, " << nontrivial << "/500 nontrivial symmetries";
    return std::pair(ok, d.str());
  });

  criterion(9, "free-product ball Z2*Z3: ab translates by 2, a and b both fix points", [] {
    const tree::BassSerreBall ball = tree::bass_serre_ball(2, 3, 8);
    const unsigned da = tree::min_displacement(ball, "a", 4);
    const unsigned db = tree::min_displacement(ball, "b", 4);
    const unsigned dab = tree::min_displacement(ball, "ab", 4);
    const bool ok = da == 0 && db == 0 && dab == 2;
    std::ostringstream d;
    d << ball.ball.vertex_count() << " ball vertices; disp(a)=" << da << " disp(b)=" << db
      << " disp(ab)=" << dab;
    return std::pair(ok, d.str());
  });

  criterion(10, "determinism: identical flags and seed give byte-identical reports", [] {
    verify::Options opts;
    opts.ranks = {3, 4};
    opts.iterations = 300;
    opts.seed = 42;
    const verify::RunResult r1 = verify::run(opts);
    const verify::RunResult r2 = verify::run(opts);
    auto strip = [](nlohmann::ordered_json j) {
      j.erase("timings_ms");
      return j.dump();
    };
    const std::string d1 = strip(r1.report);
    const bool identical = d1 == strip(r2.report) && r1.exit_code == r2.exit_code;
    const bool ok = identical && r1.exit_code == 0;
    std::ostringstream d;
    d << (identical ? "reports identical" : "reports differ") << ", " << d1.size()
      << " bytes compared, exit " << r1.exit_code;
    return std::pair(ok, d.str());
  });

  if (g_failures == 0) {
    std::cout << "all 10 criteria passed\n";
  } else {
    std::cout << g_failures << " criteria FAILED\n";
  }
  return g_failures == 0 ? 0 : 1;
}
