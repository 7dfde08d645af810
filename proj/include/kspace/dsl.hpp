#pragma once

#include "kspace/knot_tree.hpp"

#include <string>
#include <string_view>

namespace kspace {

// Knot DSL:
//   knot   := unknot | torus(p,q) | hyp(name; invertible=B [; orientation=+|-])
//           | cable(p,q; knot) | sum(knot, knot, ...)
//           | splice(kglref; knot, ... [; inverted]) | catalog knot name
//   kglref := name | kgl(name; n=N; B=M; rho=cycles [; inv=cycles])
// Throws SyntaxError with line and column, UnknownName for catalog misses,
// SemanticError when the tree fails validation (flattenable nesting is
// accepted and left for normalize()).
KnotTree parse_knot(std::string_view src);

// Inverse of parse_knot: parse_knot(print_knot(t)) == t.
std::string print_knot(const KnotTree& tree);

}  // namespace kspace
