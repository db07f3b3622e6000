#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace tricrit::closure {

/// Anything closure enumeration can work over: a value type with an
/// associative product, equality, a strict total order (for canonical,
/// generator-order-independent output) and an ADL-found hash_value.
template <typename T>
concept GroupCarrier = std::equality_comparable<T> && requires(const T& a, const T& b) {
  { a* b } -> std::convertible_to<T>;
  { a < b } -> std::convertible_to<bool>;
  { hash_value(a) } -> std::convertible_to<std::size_t>;
};

template <GroupCarrier T>
struct HashByValue {
  std::size_t operator()(const T& t) const { return hash_value(t); }
};

template <GroupCarrier T>
struct LabeledGen {
  std::string label;
  T value;
};

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

/// Result of a breadth-first closure. `elements` is sorted by operator< so
/// the output is independent of generator order and hashing whenever the
/// closure completed. A partial result (complete == false) carries whatever
/// was found when the cap was hit and must not back any order or membership
/// claim — the certificate checkers below refuse incomplete input.
template <GroupCarrier T>
struct ClosureResult {
  std::vector<T> elements;
  bool complete = false;
  std::size_t cap = 0;

  std::size_t order() const { return elements.size(); }

  bool has(const T& x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
  }
};

/// BFS over left-multiplication by the generators, starting at `identity`.
/// Stops (and marks the result incomplete) as soon as the element count would
/// exceed `cap`.
template <GroupCarrier T>
ClosureResult<T> enumerate_closure(const T& identity, std::span<const LabeledGen<T>> gens,
                                   std::size_t cap = kDefaultClosureCap) {
  if (cap == 0) throw std::invalid_argument("closure cap must be positive");
  std::unordered_set<T, HashByValue<T>> seen;
  std::deque<T> frontier;
  seen.insert(identity);
  frontier.push_back(identity);
  ClosureResult<T> out;
  out.cap = cap;
  out.complete = true;
  while (!frontier.empty() && out.complete) {
    T cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : gens) {
      T next = g.value * cur;
      if (seen.contains(next)) continue;
      if (seen.size() >= cap) {
        out.complete = false;
        break;
      }
      seen.insert(next);
      frontier.push_back(next);
    }
  }
  out.elements.assign(seen.begin(), seen.end());
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

/// Least k in [1, cap] with x^k = identity.
template <GroupCarrier T>
std::optional<std::size_t> element_order(const T& x, const T& identity, std::size_t cap) {
  T power = x;
  for (std::size_t k = 1; k <= cap; ++k) {
    if (power == identity) return k;
    if (k < cap) power = x * power;
  }
  return std::nullopt;
}

/// order -> multiplicity over a *complete* closure.
template <GroupCarrier T>
std::map<std::size_t, std::size_t> order_multiset(const ClosureResult<T>& r, const T& identity,
                                                  std::size_t order_cap) {
  if (!r.complete)
    throw std::invalid_argument("order_multiset needs a complete closure");
  std::map<std::size_t, std::size_t> out;
  for (const T& x : r.elements) {
    auto k = element_order(x, identity, order_cap);
    if (!k)
      throw std::invalid_argument("element order exceeds cap " + std::to_string(order_cap));
    ++out[*k];
  }
  return out;
}

/// Post-hoc sanity check: the element set is closed under the generators.
template <GroupCarrier T>
bool verify_closed(const ClosureResult<T>& r, std::span<const LabeledGen<T>> gens) {
  for (const T& x : r.elements)
    for (const auto& g : gens)
      if (!r.has(g.value * x)) return false;
  return true;
}

struct DihedralCertificate {
  bool ok = false;
  unsigned m = 0;
  std::size_t group_order = 0;
  std::string failure;  // empty iff ok
};

/// Certify <s, t> is dihedral of order 2m: s and t are involutions, st has
/// order exactly m, and the closure has exactly 2m elements.
template <GroupCarrier T>
DihedralCertificate check_dihedral(const T& s, const T& t, const T& identity, unsigned m,
                                   std::size_t cap = kDefaultClosureCap) {
  DihedralCertificate cert;
  cert.m = m;
  if (m == 0) {
    cert.failure = "m must be positive";
    return cert;
  }
  if (!(s * s == identity)) {
    cert.failure = "s is not an involution";
    return cert;
  }
  if (!(t * t == identity)) {
    cert.failure = "t is not an involution";
    return cert;
  }
  auto rot_order = element_order(s * t, identity, 2 * static_cast<std::size_t>(m));
  if (!rot_order || *rot_order != m) {
    cert.failure = "st has order " + (rot_order ? std::to_string(*rot_order) : std::string(">cap")) +
                   ", expected " + std::to_string(m);
    return cert;
  }
  std::vector<LabeledGen<T>> gens = {{"s", s}, {"t", t}};
  auto closure = enumerate_closure(identity, std::span<const LabeledGen<T>>(gens), cap);
  cert.group_order = closure.order();
  if (!closure.complete) {
    cert.failure = "closure hit cap";
    return cert;
  }
  if (closure.order() != 2 * static_cast<std::size_t>(m)) {
    cert.failure = "group order " + std::to_string(closure.order()) + ", expected " +
                   std::to_string(2 * static_cast<std::size_t>(m));
    return cert;
  }
  cert.ok = true;
  return cert;
}

struct DirectProductCertificate {
  bool ok = false;
  std::size_t left_order = 0;
  std::size_t right_order = 0;
  std::size_t total_order = 0;
  std::string failure;
};

/// Certify <U united V> = <U> x <V>: both factors enumerate completely, every
/// pair of factor elements commutes, the factors intersect trivially, and the
/// joint closure has order |<U>| * |<V>|.
template <GroupCarrier T>
DirectProductCertificate check_direct_product(const T& identity,
                                              std::span<const LabeledGen<T>> u_gens,
                                              std::span<const LabeledGen<T>> v_gens,
                                              std::size_t cap = kDefaultClosureCap) {
  DirectProductCertificate cert;
  auto left = enumerate_closure(identity, u_gens, cap);
  auto right = enumerate_closure(identity, v_gens, cap);
  cert.left_order = left.order();
  cert.right_order = right.order();
  if (!left.complete || !right.complete) {
    cert.failure = "factor closure hit cap";
    return cert;
  }
  for (const T& u : left.elements)
    for (const T& v : right.elements)
      if (!(u * v == v * u)) {
        cert.failure = "factors do not commute elementwise";
        return cert;
      }
  std::vector<T> meet;
  std::set_intersection(left.elements.begin(), left.elements.end(), right.elements.begin(),
                        right.elements.end(), std::back_inserter(meet));
  if (meet.size() != 1 || !(meet.front() == identity)) {
    cert.failure = "factors intersect nontrivially (" + std::to_string(meet.size()) +
                   " common elements)";
    return cert;
  }
  std::vector<LabeledGen<T>> all(u_gens.begin(), u_gens.end());
  all.insert(all.end(), v_gens.begin(), v_gens.end());
  auto total = enumerate_closure(identity, std::span<const LabeledGen<T>>(all), cap);
  cert.total_order = total.order();
  if (!total.complete) {
    cert.failure = "joint closure hit cap";
    return cert;
  }
  if (total.order() != left.order() * right.order()) {
    cert.failure = "joint order " + std::to_string(total.order()) + " != " +
                   std::to_string(left.order()) + " * " + std::to_string(right.order());
    return cert;
  }
  cert.ok = true;
  return cert;
}

template <GroupCarrier T>
struct ContainmentResult {
  bool all = true;
  std::optional<T> counterexample;
};

/// Check a predicate over every element of a complete closure, keeping the
/// first (canonically smallest) violator as a witness.
template <GroupCarrier T, typename Pred>
ContainmentResult<T> check_containment(const ClosureResult<T>& r, Pred&& pred) {
  if (!r.complete)
    throw std::invalid_argument("check_containment needs a complete closure");
  ContainmentResult<T> out;
  for (const T& x : r.elements)
    if (!pred(x)) {
      out.all = false;
      out.counterexample = x;
      return out;
    }
  return out;
}

/// Evaluate a label word left-to-right by the carrier product; with the
/// composition convention used throughout, the word [f, g] denotes f after g.
template <GroupCarrier T>
T witness_evaluate(std::span<const std::string> word,
                   const std::map<std::string, T>& table, const T& identity) {
  T out = identity;
  for (const std::string& label : word) {
    auto it = table.find(label);
    if (it == table.end()) throw std::invalid_argument("unknown label '" + label + "' in witness word");
    out = out * it->second;
  }
  return out;
}

}  // namespace tricrit::closure
