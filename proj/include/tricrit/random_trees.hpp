#pragma once

#include "tricrit/rng.hpp"
#include "tricrit/tree.hpp"

namespace tricrit::tree {

/// Uniform-attachment random tree with a vertex count drawn from
/// [min_vertices, max_vertices].
Tree random_tree(Rng& rng, unsigned min_vertices, unsigned max_vertices);

/// Random tree biased towards nontrivial symmetry: branches are built
/// recursively and attached in 1-3 identical copies. The number of
/// multiplicity sites is capped so the sampled symmetry groups stay small
/// enough to enumerate.
Tree random_symmetric_tree(Rng& rng, unsigned max_vertices);

/// Uniformly-intended random automorphism: children with identical canonical
/// (AHU) codes are permuted randomly at every vertex, rooted at the tree's
/// canonical centre; when the centre is an edge midpoint joining two
/// isomorphic halves, the halves are swapped with probability 1/2.
TreeIsom random_automorphism(const Tree& t, Rng& rng);

/// Random subtree grown point-by-point from a random seed until it reaches a
/// size drawn from [1, max_points].
Subtree random_subtree(const Tree& t, Rng& rng, unsigned max_points);

}  // namespace tricrit::tree
