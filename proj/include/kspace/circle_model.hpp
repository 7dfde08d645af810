#pragma once

#include "kspace/fp_group.hpp"
#include "kspace/homotopy_expr.hpp"
#include "kspace/int_matrix.hpp"
#include "kspace/knot_tree.hpp"

#include <string>
#include <vector>

namespace kspace {

// H1 of a component as the cokernel of an integer relation matrix on a
// lattice with one coordinate per circle (and per abelianized braid
// generator). Columns of `relations` are relations.
struct CircleModel {
  std::vector<std::string> tags;  // meridian, cabling, base, fiber, braid
  IntMatrix relations;
  std::vector<Integer> gramain_class;
  std::vector<Integer> gramain_cocycle;

  std::size_t dim() const { return tags.size(); }
};

CircleModel circle_model(const KnotTree& tree);

// Lattice map induced by the inversion, from the model of canonical `tree`
// to the model of the canonical inverse class.
IntMatrix inversion_lattice_map(const KnotTree& tree);

// Twisted part of a splice vertex: the fiber lattice with its relations and
// the matrix of the A_f generator.
struct SpliceTwist {
  long long order = 1;
  IntMatrix fiber_relations;
  IntMatrix monodromy;
};
SpliceTwist splice_twist(const KnotTree& splice);

H1Result h1(const KnotTree& tree);
// `e` must be simplify(homotopy_type(tree)); throws SemanticError otherwise.
H1Result h1(const HomotopyExpr& e, const KnotTree& tree);

// Induced map of the inversion on the lattice of an invertible class.
IntMatrix I_star(const KnotTree& tree);

std::vector<Integer> gramain_cocycle(const KnotTree& tree);
std::vector<Integer> gramain_class(const KnotTree& tree);
Integer gramain_pairing(const KnotTree& tree);

}  // namespace kspace
