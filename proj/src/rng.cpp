#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "tricrit/random_trees.hpp"

namespace tricrit::tree {

namespace {

void shuffle_indices(std::vector<unsigned>& idx, Rng& rng) {
  for (std::size_t i = idx.size(); i > 1; --i)
    std::swap(idx[i - 1], idx[static_cast<std::size_t>(rng.below(i))]);
}

/// Children lists and AHU canonical codes for the tree rooted at `root`
/// (with one edge optionally cut, for the two-centre case).
struct Rooted {
  std::vector<std::vector<unsigned>> children;
  std::vector<std::string> code;
};

void fill_rooted(const Tree& t, unsigned root, std::optional<std::pair<unsigned, unsigned>> cut,
                 Rooted& r) {
  // Iterative pre-order; codes are filled in reverse (children before parents).
  const unsigned kNoParent = ~0u;
  std::vector<std::pair<unsigned, unsigned>> stack{{root, kNoParent}};
  std::vector<unsigned> order;
  while (!stack.empty()) {
    auto [v, parent] = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (unsigned nb : t.vertex_neighbors(v)) {
      if (nb == parent) continue;
      if (cut && ((v == cut->first && nb == cut->second) || (v == cut->second && nb == cut->first)))
        continue;
      r.children[v].push_back(nb);
      stack.push_back({nb, v});
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    unsigned v = *it;
    std::vector<std::string> kid_codes;
    kid_codes.reserve(r.children[v].size());
    for (unsigned c : r.children[v]) kid_codes.push_back(r.code[c]);
    std::sort(kid_codes.begin(), kid_codes.end());
    std::string code = "(";
    for (const std::string& k : kid_codes) code += k;
    code += ")";
    r.code[v] = std::move(code);
  }
}

/// Map subtree(v) onto subtree(w) (equal codes assumed), choosing a random
/// code-respecting pairing of children at every level.
void sample_map(const Rooted& r, unsigned v, unsigned w, Rng& rng, std::vector<unsigned>& out) {
  out[v] = w;
  auto by_code = [&r](const unsigned a, const unsigned b) {
    return r.code[a] != r.code[b] ? r.code[a] < r.code[b] : a < b;
  };
  std::vector<unsigned> cv = r.children[v];
  std::vector<unsigned> cw = r.children[w];
  std::sort(cv.begin(), cv.end(), by_code);
  std::sort(cw.begin(), cw.end(), by_code);
  std::size_t i = 0;
  while (i < cv.size()) {
    std::size_t j = i + 1;
    while (j < cv.size() && r.code[cv[j]] == r.code[cv[i]]) ++j;
    std::vector<unsigned> perm(j - i);
    std::iota(perm.begin(), perm.end(), 0);
    shuffle_indices(perm, rng);
    for (std::size_t k = i; k < j; ++k) sample_map(r, cv[k], cw[i + perm[k - i]], rng, out);
    i = j;
  }
}

}  // namespace

Tree random_tree(Rng& rng, unsigned min_vertices, unsigned max_vertices) {
  unsigned v = rng.range(min_vertices, max_vertices);
  std::vector<std::pair<unsigned, unsigned>> edges;
  edges.reserve(v - 1);
  for (unsigned i = 1; i < v; ++i)
    edges.emplace_back(static_cast<unsigned>(rng.below(i)), i);
  return Tree::from_edges(v, edges);
}

namespace {

struct Shape {
  std::vector<Shape> kids;
  unsigned size = 1;
};

Shape build_shape(Rng& rng, unsigned size_budget, unsigned depth_budget, unsigned& sites) {
  Shape s;
  while (s.size < size_budget && depth_budget > 0 && rng.chance(3, 5)) {
    unsigned remaining = size_budget - s.size;
    Shape kid = build_shape(rng, rng.range(1, std::min(remaining, 6u)), depth_budget - 1, sites);
    unsigned mult = 1;
    if (sites < 3 && kid.size * 2 <= remaining && rng.chance(1, 2)) {
      mult = (kid.size * 3 <= remaining && rng.chance(1, 3)) ? 3 : 2;
      ++sites;
    }
    for (unsigned c = 0; c < mult; ++c) {
      s.size += kid.size;
      s.kids.push_back(kid);
    }
  }
  return s;
}

void materialize(const Shape& s, unsigned id,
                 std::vector<std::pair<unsigned, unsigned>>& edges, unsigned& next_id) {
  for (const Shape& kid : s.kids) {
    unsigned kid_id = next_id++;
    edges.emplace_back(id, kid_id);
    materialize(kid, kid_id, edges, next_id);
  }
}

}  // namespace

Tree random_symmetric_tree(Rng& rng, unsigned max_vertices) {
  unsigned sites = 0;
  Shape root = build_shape(rng, std::max(4u, max_vertices), 4, sites);
  if (root.kids.empty()) {
    // Guarantee at least a symmetric cherry so the automorphism sampler has
    // something to act on.
    root.kids.push_back(Shape{});
    root.kids.push_back(Shape{});
    root.size += 2;
  }
  std::vector<std::pair<unsigned, unsigned>> edges;
  unsigned next_id = 1;
  materialize(root, 0, edges, next_id);
  return Tree::from_edges(next_id, edges);
}

TreeIsom random_automorphism(const Tree& t, Rng& rng) {
  const unsigned n = t.vertex_count();
  std::vector<unsigned> out(n, ~0u);
  TreePoint c = centre(t);
  Rooted rooted{std::vector<std::vector<unsigned>>(n), std::vector<std::string>(n)};
  if (t.is_vertex(c)) {
    fill_rooted(t, c, std::nullopt, rooted);
    sample_map(rooted, c, c, rng, out);
  } else {
    auto [u, v] = t.edge(c - n);
    fill_rooted(t, u, std::pair{u, v}, rooted);
    fill_rooted(t, v, std::pair{u, v}, rooted);
    if (rooted.code[u] == rooted.code[v] && rng.chance(1, 2)) {
      sample_map(rooted, u, v, rng, out);
      sample_map(rooted, v, u, rng, out);
    } else {
      sample_map(rooted, u, u, rng, out);
      sample_map(rooted, v, v, rng, out);
    }
  }
  return TreeIsom::from_vertex_map(t, out);
}

Subtree random_subtree(const Tree& t, Rng& rng, unsigned max_points) {
  unsigned target = rng.range(1, std::max(1u, max_points));
  std::vector<TreePoint> inside{static_cast<TreePoint>(rng.below(t.point_count()))};
  std::vector<TreePoint> frontier;
  auto add_frontier = [&](TreePoint p) {
    for (TreePoint nb : t.neighbors(p)) {
      if (std::binary_search(inside.begin(), inside.end(), nb)) continue;
      auto it = std::lower_bound(frontier.begin(), frontier.end(), nb);
      if (it == frontier.end() || *it != nb) frontier.insert(it, nb);
    }
  };
  add_frontier(inside.front());
  while (inside.size() < target && !frontier.empty()) {
    std::size_t pick = static_cast<std::size_t>(rng.below(frontier.size()));
    TreePoint p = frontier[pick];
    frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(pick));
    inside.insert(std::lower_bound(inside.begin(), inside.end(), p), p);
    add_frontier(p);
  }
  return Subtree::from_points(t, std::move(inside));
}

}  // namespace tricrit::tree
