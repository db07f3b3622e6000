#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tricrit/tree.hpp"

namespace tricrit::tree {

/// A radius-R ball around the base vertex in the Bass-Serre tree of the free
/// product Z_m * Z_k. Vertices are the cosets wA (w a normal-form word not
/// ending in an a-power) and wB (not ending in a b-power); the edge wAB sits
/// between them. The generators a and b act by left multiplication; images
/// that leave the ball are recorded as nullopt in the action tables.
struct BassSerreBall {
  unsigned m = 0;
  unsigned k = 0;
  unsigned radius = 0;  // in edges of the (unsubdivided) ball tree
  Tree ball;
  unsigned base = 0;                             // vertex id of the coset A
  std::vector<std::string> coset_name;           // e.g. "A", "a.B", "a.b2.A"
  std::vector<unsigned> depth;                   // edge distance from base
  std::vector<std::optional<unsigned>> act_a;    // vertex -> image vertex
  std::vector<std::optional<unsigned>> act_b;
};

/// Build the ball. Throws std::invalid_argument for m or k < 2 or a vertex
/// count exceeding vertex_cap.
BassSerreBall bass_serre_ball(unsigned m, unsigned k, unsigned radius,
                              std::size_t vertex_cap = 1000000);

/// Minimal displacement (in edges) of the element given by a word in the
/// letters 'a' and 'b' (applied right to left, whitespace ignored) over all
/// vertices within inner_radius of the base. Throws std::invalid_argument on
/// other characters and std::runtime_error if any image leaves the ball --
/// choose inner_radius + word length <= radius to stay inside.
unsigned min_displacement(const BassSerreBall& ball, std::string_view element_word,
                          unsigned inner_radius);

}  // namespace tricrit::tree
