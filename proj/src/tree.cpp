#include "tricrit/tree.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "tricrit/closure.hpp"
#include "tricrit/hashing.hpp"

namespace tricrit::tree {

namespace {

std::pair<unsigned, unsigned> ordered(unsigned u, unsigned v) {
  return u < v ? std::pair{u, v} : std::pair{v, u};
}

}  // namespace

Tree Tree::from_edges(unsigned vertex_count,
                      std::span<const std::pair<unsigned, unsigned>> edges) {
  if (vertex_count == 0) throw std::invalid_argument("tree needs at least one vertex");
  if (edges.size() != static_cast<std::size_t>(vertex_count) - 1)
    throw std::invalid_argument("a tree on " + std::to_string(vertex_count) + " vertices has " +
                                std::to_string(vertex_count - 1) + " edges, got " +
                                std::to_string(edges.size()));
  Tree t;
  t.v_ = vertex_count;
  t.edges_.assign(edges.begin(), edges.end());
  for (unsigned e = 0; e < t.edges_.size(); ++e) {
    auto [u, v] = t.edges_[e];
    if (u >= vertex_count || v >= vertex_count || u == v)
      throw std::invalid_argument("edge " + std::to_string(e) + " has invalid endpoints");
    if (!t.edge_index_.emplace(ordered(u, v), e).second)
      throw std::invalid_argument("duplicate edge {" + std::to_string(u) + "," +
                                  std::to_string(v) + "}");
  }

  // Subdivision adjacency: vertex <-> midpoint of each incident edge.
  const unsigned points = t.point_count();
  std::vector<std::vector<TreePoint>> adj(points);
  std::vector<std::vector<unsigned>> vadj(vertex_count);
  for (unsigned e = 0; e < t.edges_.size(); ++e) {
    auto [u, v] = t.edges_[e];
    TreePoint m = vertex_count + e;
    adj[u].push_back(m);
    adj[v].push_back(m);
    adj[m].push_back(u);
    adj[m].push_back(v);
    vadj[u].push_back(v);
    vadj[v].push_back(u);
  }
  t.adj_off_.assign(points + 1, 0);
  for (unsigned p = 0; p < points; ++p) {
    std::sort(adj[p].begin(), adj[p].end());
    t.adj_off_[p + 1] = t.adj_off_[p] + static_cast<std::uint32_t>(adj[p].size());
    t.adj_flat_.insert(t.adj_flat_.end(), adj[p].begin(), adj[p].end());
  }
  t.vadj_off_.assign(vertex_count + 1, 0);
  for (unsigned v = 0; v < vertex_count; ++v) {
    std::sort(vadj[v].begin(), vadj[v].end());
    t.vadj_off_[v + 1] = t.vadj_off_[v] + static_cast<std::uint32_t>(vadj[v].size());
    t.vadj_flat_.insert(t.vadj_flat_.end(), vadj[v].begin(), vadj[v].end());
  }

  // Edge count is right, so connectivity is equivalent to acyclicity.
  std::vector<bool> seen(vertex_count, false);
  std::deque<unsigned> work{0};
  seen[0] = true;
  unsigned reached = 1;
  while (!work.empty()) {
    unsigned cur = work.front();
    work.pop_front();
    for (unsigned nb : t.vertex_neighbors(cur))
      if (!seen[nb]) {
        seen[nb] = true;
        ++reached;
        work.push_back(nb);
      }
  }
  if (reached != vertex_count) throw std::invalid_argument("edge list is not connected");
  return t;
}

TreePoint Tree::midpoint(unsigned u, unsigned v) const {
  auto it = edge_index_.find(ordered(u, v));
  if (it == edge_index_.end())
    throw std::invalid_argument("no edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  return v_ + it->second;
}

bool Tree::has_edge(unsigned u, unsigned v) const {
  return edge_index_.contains(ordered(u, v));
}

std::span<const TreePoint> Tree::neighbors(TreePoint p) const {
  if (p >= point_count()) throw std::out_of_range("point id out of range");
  return {adj_flat_.data() + adj_off_[p], adj_off_[p + 1] - adj_off_[p]};
}

std::span<const unsigned> Tree::vertex_neighbors(unsigned v) const {
  if (v >= v_) throw std::out_of_range("vertex id out of range");
  return {vadj_flat_.data() + vadj_off_[v], vadj_off_[v + 1] - vadj_off_[v]};
}

std::vector<unsigned> distances_from(const Tree& t, TreePoint from) {
  if (from >= t.point_count()) throw std::out_of_range("point id out of range");
  std::vector<unsigned> dist(t.point_count(), ~0u);
  std::deque<TreePoint> work{from};
  dist[from] = 0;
  while (!work.empty()) {
    TreePoint cur = work.front();
    work.pop_front();
    for (TreePoint nb : t.neighbors(cur))
      if (dist[nb] == ~0u) {
        dist[nb] = dist[cur] + 1;
        work.push_back(nb);
      }
  }
  return dist;
}

unsigned distance(const Tree& t, TreePoint a, TreePoint b) {
  if (b >= t.point_count()) throw std::out_of_range("point id out of range");
  return distances_from(t, a)[b];
}

TreeIsom TreeIsom::from_vertex_map(const Tree& t, std::span<const unsigned> images) {
  const unsigned n = t.vertex_count();
  if (images.size() != n) throw std::invalid_argument("vertex map size != vertex count");
  std::vector<bool> hit(n, false);
  for (unsigned v : images) {
    if (v >= n || hit[v]) throw std::invalid_argument("vertex map is not a bijection");
    hit[v] = true;
  }
  for (unsigned e = 0; e < t.edge_count(); ++e) {
    auto [u, v] = t.edge(e);
    if (!t.has_edge(images[u], images[v]))
      throw std::invalid_argument("vertex map does not preserve edge {" + std::to_string(u) +
                                  "," + std::to_string(v) + "}");
  }
  return TreeIsom(std::vector<unsigned>(images.begin(), images.end()));
}

TreeIsom TreeIsom::identity(const Tree& t) {
  std::vector<unsigned> map(t.vertex_count());
  for (unsigned v = 0; v < map.size(); ++v) map[v] = v;
  return TreeIsom(std::move(map));
}

TreePoint TreeIsom::point_image(const Tree& t, TreePoint p) const {
  if (t.vertex_count() != map_.size()) throw std::invalid_argument("isometry belongs to another tree");
  if (p >= t.point_count()) throw std::out_of_range("point id out of range");
  if (t.is_vertex(p)) return map_[p];
  auto [u, v] = t.edge(p - t.vertex_count());
  return t.midpoint(map_[u], map_[v]);
}

bool TreeIsom::is_identity() const {
  for (unsigned v = 0; v < map_.size(); ++v)
    if (map_[v] != v) return false;
  return true;
}

TreeIsom operator*(const TreeIsom& f, const TreeIsom& g) {
  if (f.map_.size() != g.map_.size()) throw std::invalid_argument("isometry size mismatch");
  std::vector<unsigned> map(f.map_.size());
  for (unsigned v = 0; v < map.size(); ++v) map[v] = f.map_[g.map_[v]];
  return TreeIsom(std::move(map));
}

std::size_t hash_value(const TreeIsom& f) {
  Fnv1a h;
  for (unsigned v : f.vertex_map()) h.feed(v);
  return h.digest();
}

Subtree Subtree::from_points(const Tree& t, std::vector<TreePoint> points) {
  if (points.empty()) throw std::invalid_argument("subtree must be nonempty");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.back() >= t.point_count()) throw std::invalid_argument("point id out of range");

  // Connectivity of the induced subgraph of the subdivision graph.
  Subtree s;
  s.points_ = std::move(points);
  std::deque<TreePoint> work{s.points_.front()};
  std::vector<bool> seen(t.point_count(), false);
  seen[s.points_.front()] = true;
  std::size_t reached = 1;
  while (!work.empty()) {
    TreePoint cur = work.front();
    work.pop_front();
    for (TreePoint nb : t.neighbors(cur))
      if (!seen[nb] && s.contains(nb)) {
        seen[nb] = true;
        ++reached;
        work.push_back(nb);
      }
  }
  if (reached != s.points_.size())
    throw std::invalid_argument("point set is not connected in the subdivision");
  return s;
}

bool Subtree::contains(TreePoint p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

std::optional<Subtree> fixed_set(const Tree& t, const TreeIsom& f) {
  std::vector<TreePoint> fixed;
  for (TreePoint p = 0; p < t.point_count(); ++p)
    if (f.point_image(t, p) == p) fixed.push_back(p);
  if (fixed.empty()) return std::nullopt;
  return Subtree::from_points(t, std::move(fixed));
}

std::optional<Subtree> fixed_set_group(const Tree& t, std::span<const TreeIsom> gens) {
  std::vector<TreePoint> fixed;
  for (TreePoint p = 0; p < t.point_count(); ++p) {
    bool all = true;
    for (const TreeIsom& g : gens)
      if (g.point_image(t, p) != p) {
        all = false;
        break;
      }
    if (all) fixed.push_back(p);
  }
  if (fixed.empty()) return std::nullopt;
  return Subtree::from_points(t, std::move(fixed));
}

std::optional<Subtree> subtree_intersection(const Tree& t, const Subtree& a, const Subtree& b) {
  std::vector<TreePoint> meet;
  std::set_intersection(a.points().begin(), a.points().end(), b.points().begin(),
                        b.points().end(), std::back_inserter(meet));
  if (meet.empty()) return std::nullopt;
  return Subtree::from_points(t, std::move(meet));
}

HellyReport helly_check(const Tree& t, std::span<const Subtree> family) {
  if (family.empty()) throw std::invalid_argument("helly_check needs a nonempty family");
  HellyReport report;
  report.pairwise_nonempty = true;
  for (std::size_t i = 0; i < family.size() && report.pairwise_nonempty; ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (!subtree_intersection(t, family[i], family[j])) {
        report.pairwise_nonempty = false;
        break;
      }
  std::vector<TreePoint> common(family[0].points().begin(), family[0].points().end());
  for (std::size_t i = 1; i < family.size() && !common.empty(); ++i) {
    std::vector<TreePoint> next;
    std::set_intersection(common.begin(), common.end(), family[i].points().begin(),
                          family[i].points().end(), std::back_inserter(next));
    common = std::move(next);
  }
  report.total_nonempty = !common.empty();
  if (report.total_nonempty) report.common_point = common.front();
  if (report.pairwise_nonempty && !report.total_nonempty)
    throw std::logic_error("Helly violation on a tree: pairwise intersections nonempty but "
                           "total intersection empty");
  return report;
}

TreePoint circumcentre(const Tree& t, std::span<const TreePoint> pts) {
  if (pts.empty()) throw std::invalid_argument("circumcentre of an empty set");

  // Brute force: eccentricity of every point w.r.t. the set.
  std::vector<unsigned> ecc(t.point_count(), 0);
  for (TreePoint p : pts) {
    auto dist = distances_from(t, p);
    for (TreePoint x = 0; x < t.point_count(); ++x) ecc[x] = std::max(ecc[x], dist[x]);
  }
  unsigned best = ~0u;
  std::vector<TreePoint> minimizers;
  for (TreePoint x = 0; x < t.point_count(); ++x) {
    if (ecc[x] < best) {
      best = ecc[x];
      minimizers.assign(1, x);
    } else if (ecc[x] == best) {
      minimizers.push_back(x);
    }
  }

  // Primary construction: midpoint of a diametral pair, found by double sweep.
  auto d0 = distances_from(t, pts[0]);
  TreePoint p = pts[0];
  for (TreePoint q : pts)
    if (d0[q] > d0[p]) p = q;
  auto dp = distances_from(t, p);
  TreePoint q = p;
  for (TreePoint r : pts)
    if (dp[r] > dp[q]) q = r;
  unsigned diam = dp[q];
  if (diam % 2 != 0)
    throw std::invalid_argument("point set has odd diameter " + std::to_string(diam) +
                                " (half-edge units); no unique circumcentre point");
  // Walk from q towards p for diam/2 steps along the geodesic.
  auto dq = distances_from(t, q);
  TreePoint cur = q;
  for (unsigned step = 0; step < diam / 2; ++step) {
    for (TreePoint nb : t.neighbors(cur))
      if (dq[nb] == dq[cur] + 1 && dp[nb] + dq[nb] == diam) {
        cur = nb;
        break;
      }
  }

  if (minimizers.size() != 1 || minimizers.front() != cur)
    throw std::logic_error("circumcentre cross-check failed: midpoint construction and "
                           "eccentricity minimizer disagree or minimizer not unique");
  return cur;
}

TreePoint centre(const Tree& t) {
  std::vector<TreePoint> all(t.point_count());
  for (TreePoint p = 0; p < t.point_count(); ++p) all[p] = p;
  return circumcentre(t, all);
}

unsigned subtree_distance(const Tree& t, const Subtree& a, const Subtree& b) {
  unsigned best = ~0u;
  for (TreePoint p : a.points()) {
    auto dist = distances_from(t, p);
    for (TreePoint q : b.points()) best = std::min(best, dist[q]);
  }
  return best;
}

TreePoint closest_point(const Tree& t, const Subtree& from, const Subtree& to) {
  unsigned best = ~0u;
  TreePoint arg = from.points().front();
  for (TreePoint p : from.points()) {
    auto dist = distances_from(t, p);
    for (TreePoint q : to.points())
      if (dist[q] < best) {
        best = dist[q];
        arg = p;
      }
  }
  return arg;
}

TriangleReport triangle_criterion_check(const Tree& t, std::span<const TreeIsom> a1,
                                        std::span<const TreeIsom> a2,
                                        std::span<const TreeIsom> a3,
                                        std::size_t closure_cap) {
  if (a1.empty() || a2.empty() || a3.empty())
    throw std::invalid_argument("triangle_criterion_check needs three nonempty generator sets");
  TriangleReport r;
  r.fix1 = fixed_set_group(t, a1);
  r.fix2 = fixed_set_group(t, a2);
  r.fix3 = fixed_set_group(t, a3);
  if (r.fix1 && r.fix2) r.fix12 = subtree_intersection(t, *r.fix1, *r.fix2);
  if (r.fix1 && r.fix3) r.fix13 = subtree_intersection(t, *r.fix1, *r.fix3);
  if (r.fix2 && r.fix3) r.fix23 = subtree_intersection(t, *r.fix2, *r.fix3);
  r.pairwise_nonempty = r.fix12.has_value() && r.fix13.has_value() && r.fix23.has_value();

  std::vector<TreeIsom> all(a1.begin(), a1.end());
  all.insert(all.end(), a2.begin(), a2.end());
  all.insert(all.end(), a3.begin(), a3.end());
  r.fix_all = fixed_set_group(t, all);
  r.conclusion_nonempty = r.fix_all.has_value();
  if (r.pairwise_nonempty && !r.conclusion_nonempty)
    throw std::logic_error("triangle criterion violated on a finite tree (Helly breakdown)");

  // Set identity: Fix of the generated group equals Fix of the generators.
  std::vector<closure::LabeledGen<TreeIsom>> gens;
  gens.reserve(all.size());
  for (std::size_t i = 0; i < all.size(); ++i)
    gens.push_back({"g" + std::to_string(i), all[i]});
  auto group = closure::enumerate_closure(TreeIsom::identity(t),
                                          std::span<const closure::LabeledGen<TreeIsom>>(gens),
                                          closure_cap);
  r.group_complete = group.complete;
  r.group_order = group.order();
  if (group.complete) {
    auto fix_group = fixed_set_group(t, group.elements);
    r.identity_ok = fix_group == r.fix_all;
  }
  return r;
}

ProductReport product_criterion_check(const Tree& t, std::span<const TreeIsom> a1,
                                      std::span<const TreeIsom> a2) {
  if (a1.empty() || a2.empty())
    throw std::invalid_argument("product_criterion_check needs two nonempty generator sets");
  ProductReport r;
  r.fix1 = fixed_set_group(t, a1);
  r.fix2 = fixed_set_group(t, a2);
  if (!r.fix1 || !r.fix2)
    throw std::invalid_argument("product criterion requires both sets elliptic "
                                "(nonempty common fixed sets)");
  r.intersection_nonempty = subtree_intersection(t, *r.fix1, *r.fix2).has_value();
  if (r.intersection_nonempty) {
    r.ok = true;
    return r;
  }
  // Disjoint fixed sets: exhibit a product moving the bridge head. Exists
  // whenever the intersection is empty: if every a1*a2 fixed p, then
  // a2 p = a1^{-1} p = p for all pairs, putting p in both fixed sets.
  TreePoint p = closest_point(t, *r.fix1, *r.fix2);
  r.closest = p;
  for (std::size_t i = 0; i < a1.size() && !r.mover; ++i)
    for (std::size_t j = 0; j < a2.size(); ++j) {
      TreeIsom prod = a1[i] * a2[j];
      if (prod.point_image(t, p) != p) {
        r.mover = {i, j};
        break;
      }
    }
  r.ok = r.mover.has_value();
  return r;
}

}  // namespace tricrit::tree
