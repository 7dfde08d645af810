#pragma once

#include "kspace/fp_group.hpp"
#include "kspace/homotopy_expr.hpp"
#include "kspace/knot_tree.hpp"
#include "kspace/signed_perm.hpp"

#include <string>
#include <vector>

namespace kspace {

// pi_1 as iterated (semi)direct products.
struct ExtensionTree {
  enum class Kind { Trivial, Z, Direct, SemidirectZ, BraidExtension };

  Kind kind = Kind::Trivial;
  // Direct: the factors. SemidirectZ and BraidExtension: the kernel.
  std::vector<ExtensionTree> children;
  CircleRole role = CircleRole::Plain;  // Z leaves
  SignedPerm monodromy;                 // SemidirectZ: action of the Z generator
  long long order = 1;                  // SemidirectZ: |A_f|, kept as metadata
  std::vector<std::size_t> young;       // BraidExtension: block labels of the strands

  std::string render() const;
  friend bool operator==(const ExtensionTree&, const ExtensionTree&) = default;
};

ExtensionTree pi1_structure(const HomotopyExpr& e);

// Explicit presentation. Throws NonConcreteAction when a monodromy inverts a
// fiber whose group is not free abelian on its circles.
FpGroup pi1_presentation(const KnotTree& tree);

}  // namespace kspace
