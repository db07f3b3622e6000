#pragma once

#include <map>
#include <string>
#include <vector>

#include "tricrit/closure.hpp"
#include "tricrit/freegroup.hpp"

namespace tricrit::verify {

/// The three finite generating sets whose pairwise products the library
/// certifies, realized at rank n (n >= 3):
///   A1 = { eps_n, eta } u { (a_i a_{i+1}) : 3 <= i <= n-1 }
///   A2 = { theta }
///   A3 = { tau }
/// Labels: "epsN", "eta", "tIJ" (adjacent transpositions), "theta", "tau".
struct GeneratingSets {
  unsigned n = 0;
  std::vector<closure::LabeledGen<freegroup::FreeAut>> a1, a2, a3;

  std::vector<closure::LabeledGen<freegroup::FreeAut>> a12() const;  // A1 u A2
  std::vector<closure::LabeledGen<freegroup::FreeAut>> a13() const;  // A1 u A3
  std::vector<closure::LabeledGen<freegroup::FreeAut>> a23() const;  // A2 u A3
  std::vector<closure::LabeledGen<freegroup::FreeAut>> all() const;

  /// label -> automorphism, over all three sets.
  std::map<std::string, freegroup::FreeAut> label_table() const;
};

GeneratingSets build_generating_sets(unsigned n);

/// Transposition label "tIJ" with i < j normalized, e.g. tlabel(4,3) == "t34".
std::string tlabel(unsigned i, unsigned j);

/// |W_{n-2} x D6| = 6 * 2^(n-2) * (n-2)!, the expected order of <A1 u A2>.
std::size_t expected_a12_order(unsigned n);

/// |W_n| = 2^n * n!, the order of the signed-permutation subgroup that
/// <A1 u A3> lands in (and, as the enumeration shows, fills).
std::size_t signed_permutation_order(unsigned n);

}  // namespace tricrit::verify
