#pragma once

#include <string_view>
#include <vector>

#include "tricrit/freegroup.hpp"
#include "tricrit/tree.hpp"

namespace tricrit::textio {

/// Parse a whitespace-separated generator word into a single automorphism.
/// Tokens:
///   rho I J   | eps I | perm (C1)(C2)... | theta | tau | eta | alpha
/// Cycles use 1-based generator indices, e.g. `perm (1 2)(3 4)`; spaces are
/// allowed inside the parentheses. Generators listed left to right compose
/// right to left (the rightmost acts first). Errors are reported as
/// std::invalid_argument naming the 1-based token position.
freegroup::FreeAut parse_generator_word(std::string_view text, const freegroup::Basis& basis);

/// Parse an edge list, one `u v` pair of 0-based vertex ids per line. Blank
/// lines and `#` comment lines are skipped; the vertex count is one more than
/// the largest id. Validation is Tree::from_edges'.
tree::Tree parse_tree_edge_list(std::string_view text);

/// Parse one line of vertex_count 0-based images ("2 0 1 ...") into a
/// validated isometry of the given tree.
tree::TreeIsom parse_isometry_line(std::string_view text, const tree::Tree& t);

}  // namespace tricrit::textio
