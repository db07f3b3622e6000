#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tricrit::tree {

/// Point of the barycentric subdivision of a finite tree: ids < vertex_count
/// are original vertices, vertex_count + e is the midpoint of edge e. All
/// distances are integers in half-edge units, so midpoints of paths of even
/// length always land on a point.
using TreePoint = std::uint32_t;

class Tree {
 public:
  /// Validates: endpoints in range and distinct, no duplicate edges, exactly
  /// vertex_count - 1 edges, connected. Throws std::invalid_argument.
  static Tree from_edges(unsigned vertex_count,
                         std::span<const std::pair<unsigned, unsigned>> edges);

  unsigned vertex_count() const { return v_; }
  unsigned edge_count() const { return static_cast<unsigned>(edges_.size()); }
  unsigned point_count() const { return v_ + edge_count(); }
  bool is_vertex(TreePoint p) const { return p < v_; }

  std::pair<unsigned, unsigned> edge(unsigned e) const { return edges_.at(e); }

  /// Midpoint id of the edge {u, v}; throws if that edge does not exist.
  TreePoint midpoint(unsigned u, unsigned v) const;

  bool has_edge(unsigned u, unsigned v) const;

  /// Adjacency in the subdivision graph (vertex <-> incident midpoints).
  std::span<const TreePoint> neighbors(TreePoint p) const;

  std::span<const unsigned> vertex_neighbors(unsigned v) const;

 private:
  Tree() = default;
  unsigned v_ = 0;
  std::vector<std::pair<unsigned, unsigned>> edges_;
  std::map<std::pair<unsigned, unsigned>, unsigned> edge_index_;
  std::vector<TreePoint> adj_flat_;
  std::vector<std::uint32_t> adj_off_;
  std::vector<unsigned> vadj_flat_;
  std::vector<std::uint32_t> vadj_off_;
};

/// Distance in half-edge units between two subdivision points.
unsigned distance(const Tree& t, TreePoint a, TreePoint b);

/// BFS distances (half-edge units) from one point to every point.
std::vector<unsigned> distances_from(const Tree& t, TreePoint from);

/// Simplicial automorphism, stored as its map on original vertices and
/// extended to midpoints by point_image. Composable without the tree, so it
/// satisfies the closure carrier requirements.
class TreeIsom {
 public:
  /// Validates a bijection on vertices that maps edges to edges.
  static TreeIsom from_vertex_map(const Tree& t, std::span<const unsigned> images);
  static TreeIsom identity(const Tree& t);

  unsigned vertex_image(unsigned v) const { return map_.at(v); }
  const std::vector<unsigned>& vertex_map() const { return map_; }
  TreePoint point_image(const Tree& t, TreePoint p) const;
  bool is_identity() const;

  bool operator==(const TreeIsom&) const = default;
  bool operator<(const TreeIsom& other) const { return map_ < other.map_; }

  /// Composition (f * g)(v) = f(g(v)).
  friend TreeIsom operator*(const TreeIsom& f, const TreeIsom& g);

 private:
  explicit TreeIsom(std::vector<unsigned> map) : map_(std::move(map)) {}
  std::vector<unsigned> map_;
};

std::size_t hash_value(const TreeIsom& f);

/// Nonempty connected set of subdivision points (a subcomplex of the
/// subdivided tree). Construction validates connectivity in the subdivision
/// graph, which in particular forces the midpoint of any edge whose two
/// endpoints are present.
class Subtree {
 public:
  static Subtree from_points(const Tree& t, std::vector<TreePoint> points);

  std::span<const TreePoint> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool contains(TreePoint p) const;

  bool operator==(const Subtree&) const = default;

 private:
  Subtree() = default;
  std::vector<TreePoint> points_;  // sorted
};

/// Fixed point set; nullopt when empty (unreachable for automorphisms of a
/// finite tree, which always fix the canonical centre).
std::optional<Subtree> fixed_set(const Tree& t, const TreeIsom& f);

/// Common fixed set of a generating set = Fix of the generated group.
std::optional<Subtree> fixed_set_group(const Tree& t, std::span<const TreeIsom> gens);

std::optional<Subtree> subtree_intersection(const Tree& t, const Subtree& a, const Subtree& b);

struct HellyReport {
  bool pairwise_nonempty = false;
  bool total_nonempty = false;
  std::optional<TreePoint> common_point;
};

/// Pairwise vs. total intersection of a family of subtrees. The Helly
/// property of trees makes "pairwise nonempty but total empty" impossible;
/// observing it means corrupted inputs or a library bug, so it throws
/// std::logic_error instead of reporting.
HellyReport helly_check(const Tree& t, std::span<const Subtree> family);

/// Unique point minimizing the maximal distance to the given nonempty point
/// set. Primary construction: midpoint of a diametral pair's path; always
/// cross-checked against the brute-force eccentricity minimizer. Throws
/// std::invalid_argument on an empty set or when the set's diameter is odd
/// (minimizer falls inside a half-edge and is not unique among points).
TreePoint circumcentre(const Tree& t, std::span<const TreePoint> pts);

/// Canonical centre: circumcentre of the whole point set. Fixed by every
/// automorphism.
TreePoint centre(const Tree& t);

/// Minimal distance between two subtrees (0 iff they meet).
unsigned subtree_distance(const Tree& t, const Subtree& a, const Subtree& b);

/// The point of `from` nearest to `to` (unique when the subtrees are
/// disjoint; ties broken by smallest id otherwise).
TreePoint closest_point(const Tree& t, const Subtree& from, const Subtree& to);

struct TriangleReport {
  std::optional<Subtree> fix1, fix2, fix3;
  std::optional<Subtree> fix12, fix13, fix23;
  std::optional<Subtree> fix_all;
  bool pairwise_nonempty = false;
  bool conclusion_nonempty = false;
  /// Fix(<A1 u A2 u A3>), computed over the enumerated group, equals
  /// Fix(A1) n Fix(A2) n Fix(A3) as point sets.
  bool identity_ok = false;
  bool group_complete = false;
  std::size_t group_order = 0;
};

/// The finite-tree instance of the criterion: three generating sets with
/// pairwise-intersecting fixed sets force a global fixed point, and the
/// global fixed set is exactly the triple intersection.
TriangleReport triangle_criterion_check(const Tree& t, std::span<const TreeIsom> a1,
                                        std::span<const TreeIsom> a2,
                                        std::span<const TreeIsom> a3,
                                        std::size_t closure_cap = 100000);

struct ProductReport {
  std::optional<Subtree> fix1, fix2;
  bool intersection_nonempty = false;
  /// Populated only when the fixed sets are disjoint: the point of Fix(A1)
  /// nearest Fix(A2) and indices (i, j) with a1[i]*a2[j] moving it. On a
  /// finite tree the disjoint branch is unreachable (every automorphism
  /// fixes the centre); it exists for the sake of the report's completeness.
  std::optional<TreePoint> closest;
  std::optional<std::pair<std::size_t, std::size_t>> mover;
  bool ok = false;
};

/// Two-set strengthening: either the fixed sets meet, or some product of
/// generators moves the bridging point (witnessing the obstruction). Requires
/// both sets to have nonempty common fixed sets.
ProductReport product_criterion_check(const Tree& t, std::span<const TreeIsom> a1,
                                      std::span<const TreeIsom> a2);

}  // namespace tricrit::tree
