#include "tricrit/witness.hpp"

#include <stdexcept>

#include "tricrit/closure.hpp"

namespace tricrit::verify {

using freegroup::Basis;
using freegroup::FreeAut;
using freegroup::NamedGenerator;

namespace {

class TableBuilder {
 public:
  explicit TableBuilder(unsigned n)
      : basis_(n), out_{n, {}, build_generating_sets(n).label_table(), 0, } {}

  /// Verify `word` evaluates to `target`, then record both under `name`.
  void add(const std::string& name, std::vector<std::string> word, FreeAut target) {
    FreeAut value = closure::witness_evaluate(std::span<const std::string>(word), out_.table,
                                              FreeAut::identity(basis_));
    if (!(value == target))
      throw std::logic_error("witness entry '" + name + "' evaluates to the wrong element");
    out_.max_word_length = std::max(out_.max_word_length, word.size());
    out_.entries.push_back({name, std::move(word), target});
    if (!out_.table.emplace(name, std::move(target)).second)
      throw std::logic_error("duplicate witness entry '" + name + "'");
  }

  FreeAut transposition(unsigned i, unsigned j) {
    return aut_from_generator(NamedGenerator::transposition(i, j, basis_.rank()), basis_);
  }
  FreeAut eps(unsigned i) { return aut_from_generator(NamedGenerator::eps(i), basis_); }
  FreeAut rho(unsigned i, unsigned j) {
    return aut_from_generator(NamedGenerator::rho(i, j), basis_);
  }

  WitnessTable take() { return std::move(out_); }

 private:
  Basis basis_;
  WitnessTable out_;
};

std::string eps_label(unsigned i) { return "eps" + std::to_string(i); }
std::string rho_label(unsigned i, unsigned j) {
  return "rho" + std::to_string(i) + std::to_string(j);
}

/// sigma with sigma(1) = i, sigma(2) = j as a word of transposition labels
/// (all of which the table defines by the time rho entries are added).
std::vector<std::string> pair_placement_word(unsigned i, unsigned j) {
  if (i == 1) return {tlabel(2, j)};                    // fixes 1, sends 2 to j
  if (i == 2 && j == 1) return {tlabel(1, 2)};
  if (i == 2) return {tlabel(1, 2), tlabel(2, j)};      // 1 -> 2, 2 -> j
  if (j == 1) return {tlabel(1, 2), tlabel(1, i)};      // 1 -> i, 2 -> 1
  if (j == 2) return {tlabel(1, i)};                    // 1 -> i, fixes 2
  return {tlabel(1, i), tlabel(2, j)};                  // disjoint supports
}

}  // namespace

WitnessTable build_witness_table(unsigned n) {
  if (n < 3) throw std::invalid_argument("witness table needs rank >= 3");
  TableBuilder b(n);
  const std::string epsn = eps_label(n);

  if (n == 3) {
    // Rank 3 has no adjacent transpositions in A1; tau and eta carry the
    // permutation content instead.
    b.add("eps2", {"tau", epsn, "tau"}, b.eps(2));
    b.add("eps1", {"eta", "eps2", "eta"}, b.eps(1));
    b.add("t23", {"tau", "eps1"}, b.transposition(2, 3));
    b.add("t12", {"eta", "eps1", "eps2"}, b.transposition(1, 2));
    b.add("t13", {"t12", "t23", "t12"}, b.transposition(1, 3));
  } else {
    // Non-adjacent transpositions within {3..n} by the conjugation
    // t_{i,j} = t_{i,i+1} . t_{i+1,j} . t_{i,i+1} (induction on j - i).
    for (unsigned gap = 2; gap <= n - 3; ++gap)
      for (unsigned i = 3; i + gap <= n; ++i)
        b.add(tlabel(i, i + gap), {tlabel(i, i + 1), tlabel(i + 1, i + gap), tlabel(i, i + 1)},
              b.transposition(i, i + gap));
    // Pull index 2 into play through tau (which swaps a2 and a3).
    b.add(tlabel(2, n), {"tau", tlabel(3, n), "tau"}, b.transposition(2, n));
    b.add("eps2", {tlabel(2, n), epsn, tlabel(2, n)}, b.eps(2));
    b.add("t23", {tlabel(2, n), tlabel(3, n), tlabel(2, n)}, b.transposition(2, 3));
    for (unsigned j = 4; j <= n - 1; ++j)
      b.add(tlabel(2, j), {"t23", tlabel(3, j), "t23"}, b.transposition(2, j));
    // The two bridge identities, as defining entries.
    b.add("eps1", {"t23", "tau"}, b.eps(1));
    b.add("t12", {"eta", "eps1", "eps2"}, b.transposition(1, 2));
    for (unsigned j = 3; j <= n; ++j)
      b.add(tlabel(1, j), {"t12", tlabel(2, j), "t12"}, b.transposition(1, j));
    for (unsigned i = 3; i <= n - 1; ++i)
      b.add(eps_label(i), {tlabel(i, n), epsn, tlabel(i, n)}, b.eps(i));
  }

  b.add("rho12", {"theta", "eps2"}, b.rho(1, 2));
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = 1; j <= n; ++j) {
      if (i == j || (i == 1 && j == 2)) continue;
      std::vector<std::string> sigma = pair_placement_word(i, j);
      std::vector<std::string> word = sigma;
      word.push_back("rho12");
      word.insert(word.end(), sigma.rbegin(), sigma.rend());
      b.add(rho_label(i, j), std::move(word), b.rho(i, j));
    }
  return b.take();
}

const WitnessEntry& WitnessTable::entry(const std::string& name) const {
  for (const WitnessEntry& e : entries)
    if (e.name == name) return e;
  throw std::invalid_argument("no witness entry named '" + name + "'");
}

void verify_anchor_identities(const WitnessTable& t) {
  Basis basis(t.n);
  const FreeAut id = FreeAut::identity(basis);
  std::vector<std::string> anchor1 = {"t23", "tau"};
  std::vector<std::string> anchor2 = {"eta", "eps1", "eps2"};
  if (!(closure::witness_evaluate(std::span<const std::string>(anchor1), t.table, id) ==
        aut_from_generator(NamedGenerator::eps(1), basis)))
    throw std::logic_error("anchor identity eps1 = t23 . tau failed");
  if (!(closure::witness_evaluate(std::span<const std::string>(anchor2), t.table, id) ==
        aut_from_generator(NamedGenerator::transposition(1, 2, t.n), basis)))
    throw std::logic_error("anchor identity t12 = eta . eps1 . eps2 failed");
}

}  // namespace tricrit::verify
