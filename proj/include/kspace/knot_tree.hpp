#pragma once

#include "kspace/signed_perm.hpp"

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace kspace {

// Decoration of a hyperbolic splice vertex: an (n+1)-component knot
// generating link whose cyclic symmetry group B_L of order `b_order` acts on
// the n companion slots through the image `rho_gen` of a fixed generator.
struct KglDatum {
  std::string name;
  std::size_t n = 0;
  long long b_order = 1;
  SignedPerm rho_gen;
  // Slot relabeling induced by an isotopy from L to its inverse that keeps
  // the orientation of L0; absent when no such isotopy is known.
  std::optional<SignedPerm> inversion;

  friend auto operator<=>(const KglDatum&, const KglDatum&) = default;
  friend bool operator==(const KglDatum&, const KglDatum&) = default;
};

// Structural problems of a KGL datum; empty means usable.
std::vector<std::string> kgl_violations(const KglDatum& kgl);

enum class Orientation { Plus, Minus };

class KnotTree;

struct Unknot {
  friend auto operator<=>(const Unknot&, const Unknot&) = default;
};

struct Torus {
  long long p = 0;
  long long q = 0;
  friend auto operator<=>(const Torus&, const Torus&) = default;
};

struct HypKnot {
  std::string name;
  bool invertible = true;
  Orientation orientation = Orientation::Plus;
  friend auto operator<=>(const HypKnot&, const HypKnot&) = default;
};

struct Cable;
struct Sum;
struct HypSplice;

// Isotopy class of a long knot, given by its companionship tree. Immutable
// and cheap to copy (nodes are shared).
class KnotTree {
 public:
  enum class Kind { Unknot = 0, Torus = 1, HypKnot = 2, Cable = 3, Sum = 4, HypSplice = 5 };

  KnotTree();  // the unknot
  KnotTree(Unknot);
  KnotTree(Torus t);
  KnotTree(HypKnot h);
  KnotTree(Cable c);
  KnotTree(Sum s);
  KnotTree(HypSplice s);

  Kind kind() const;
  bool is_unknot() const { return kind() == Kind::Unknot; }

  const Torus& torus() const;
  const HypKnot& hyp() const;
  const Cable& cable() const;
  const Sum& sum() const;
  const HypSplice& splice() const;

  friend std::strong_ordering operator<=>(const KnotTree& a, const KnotTree& b);
  friend bool operator==(const KnotTree& a, const KnotTree& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  struct Node;
  static const std::shared_ptr<const Node>& unknot_node();
  std::shared_ptr<const Node> node_;
};

struct Cable {
  long long p = 0;
  long long q = 0;
  KnotTree companion;
};

struct Sum {
  std::vector<KnotTree> summands;
};

struct HypSplice {
  KglDatum kgl;
  std::vector<KnotTree> children;
  // Formal inverse of the spliced class, used when the KGL carries no
  // inversion datum. Applying the marker twice cancels.
  bool inverted = false;
};

std::strong_ordering operator<=>(const Cable& a, const Cable& b);
std::strong_ordering operator<=>(const Sum& a, const Sum& b);
std::strong_ordering operator<=>(const HypSplice& a, const HypSplice& b);

struct Violation {
  std::string path;
  std::string message;
  // Violations that normalize() repairs (nested sums, cables of the unknot).
  bool flattening = false;

  friend bool operator==(const Violation&, const Violation&) = default;
};

using ValidationReport = std::vector<Violation>;

ValidationReport validate(const KnotTree& tree);
bool is_valid(const KnotTree& tree);

// Flattens nested sums and rewrites cables of the unknot as torus knots.
// Throws InvalidTree if other violations remain.
KnotTree normalize(const KnotTree& tree);

// Nodes in the tree, counting the root.
std::size_t tree_size(const KnotTree& tree);
std::size_t tree_depth(const KnotTree& tree);

}  // namespace kspace
