#pragma once

#include <map>
#include <string>
#include <vector>

#include "tricrit/freegroup.hpp"
#include "tricrit/generating_sets.hpp"

namespace tricrit::verify {

/// One generation certificate: `word` is a composition (left-to-right
/// listing, rightmost acts first) of labels -- generators of the three sets
/// or previously established entries -- whose value must equal `target`.
struct WitnessEntry {
  std::string name;
  std::vector<std::string> word;
  freegroup::FreeAut target;
};

/// Chained generation certificates reducing a full standard generating set of
/// the automorphism group (all transpositions, all inversions eps_i, all
/// transvections rho_ij) to words in A1 u A2 u A3. Construction verifies every
/// entry by evaluation and throws std::logic_error on any mismatch, so a
/// handle to a WitnessTable is itself the certificate.
struct WitnessTable {
  unsigned n = 0;
  std::vector<WitnessEntry> entries;
  /// Generator labels plus every verified entry, by name.
  std::map<std::string, freegroup::FreeAut> table;
  std::size_t max_word_length = 0;

  const WitnessEntry& entry(const std::string& name) const;
};

WitnessTable build_witness_table(unsigned n);

/// The two bridge identities connecting the sets (re-checked post hoc so they
/// hold in both the n = 3 and n >= 4 table regimes):
///   eps1 = t23 . tau        and        t12 = eta . eps1 . eps2
/// Throws std::logic_error on failure.
void verify_anchor_identities(const WitnessTable& table);

}  // namespace tricrit::verify
