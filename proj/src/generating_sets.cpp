#include "tricrit/generating_sets.hpp"

#include <stdexcept>

namespace tricrit::verify {

using freegroup::Basis;
using freegroup::FreeAut;
using freegroup::NamedGenerator;
using Gen = closure::LabeledGen<FreeAut>;

std::string tlabel(unsigned i, unsigned j) {
  if (i > j) std::swap(i, j);
  return "t" + std::to_string(i) + std::to_string(j);
}

GeneratingSets build_generating_sets(unsigned n) {
  if (n < 3) throw std::invalid_argument("generating sets need rank >= 3");
  Basis basis(n);
  GeneratingSets sets;
  sets.n = n;
  sets.a1.push_back({"eps" + std::to_string(n),
                     aut_from_generator(NamedGenerator::eps(n), basis)});
  sets.a1.push_back({"eta", aut_from_generator(NamedGenerator::eta(), basis)});
  for (unsigned i = 3; i + 1 <= n; ++i)
    sets.a1.push_back({tlabel(i, i + 1),
                       aut_from_generator(NamedGenerator::transposition(i, i + 1, n), basis)});
  sets.a2.push_back({"theta", aut_from_generator(NamedGenerator::theta(), basis)});
  sets.a3.push_back({"tau", aut_from_generator(NamedGenerator::tau(), basis)});
  return sets;
}

namespace {

std::vector<Gen> concat(const std::vector<Gen>& a, const std::vector<Gen>& b) {
  std::vector<Gen> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

std::vector<Gen> GeneratingSets::a12() const { return concat(a1, a2); }
std::vector<Gen> GeneratingSets::a13() const { return concat(a1, a3); }
std::vector<Gen> GeneratingSets::a23() const { return concat(a2, a3); }
std::vector<Gen> GeneratingSets::all() const { return concat(concat(a1, a2), a3); }

std::map<std::string, FreeAut> GeneratingSets::label_table() const {
  std::map<std::string, FreeAut> table;
  for (const Gen& g : all()) table.emplace(g.label, g.value);
  return table;
}

std::size_t expected_a12_order(unsigned n) {
  std::size_t order = 6;
  for (unsigned i = 0; i < n - 2; ++i) order *= 2;
  for (unsigned i = 2; i <= n - 2; ++i) order *= i;
  return order;
}

std::size_t signed_permutation_order(unsigned n) {
  std::size_t order = 1;
  for (unsigned i =  0; i < n; ++i) order *= 2;
  for (unsigned i = 2; i <= n; ++i) order *= i;
  return order;
}

}  // namespace tricrit::verify
