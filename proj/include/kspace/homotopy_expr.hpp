#pragma once

#include "kspace/knot_tree.hpp"
#include "kspace/signed_perm.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kspace {

enum class CircleRole { Meridian, Cabling, BaseL0, Plain };

const char* role_name(CircleRole r);

// Fiber action of the generator of A_f: a signed permutation of the fiber
// factors. Negated slots are carried across by the knot inversion.
struct MonodromyDatum {
  SignedPerm sp;
  std::vector<bool> per_slot_inverted;

  explicit MonodromyDatum(SignedPerm p = SignedPerm());

  friend bool operator==(const MonodromyDatum&, const MonodromyDatum&) = default;
};

// Term algebra for homotopy types of knot-space components:
//   Point, Circle, Product, C2(n) x_{Young} prod, (prod fibers) x_{Z_m} S^1.
class HomotopyExpr {
 public:
  enum class Kind { Point, Circle, Product, Config2ModYoung, TwistedProduct };

  static HomotopyExpr point();
  static HomotopyExpr circle(CircleRole role = CircleRole::Plain);
  static HomotopyExpr product(std::vector<HomotopyExpr> factors);
  // young[i] is the block label of factor i; labels are renumbered in order
  // of first appearance.
  static HomotopyExpr config(std::vector<std::size_t> young, std::vector<HomotopyExpr> factors);
  static HomotopyExpr twisted(long long group_order, MonodromyDatum monodromy,
                              std::vector<HomotopyExpr> fibers);

  Kind kind() const { return kind_; }
  CircleRole role() const { return role_; }
  const std::vector<HomotopyExpr>& children() const { return children_; }
  long long group_order() const { return group_order_; }
  const MonodromyDatum& monodromy() const { return monodromy_; }
  const std::vector<std::size_t>& young() const { return young_; }
  std::size_t block_count() const;

  friend bool operator==(const HomotopyExpr&, const HomotopyExpr&) = default;

 private:
  Kind kind_ = Kind::Point;
  CircleRole role_ = CircleRole::Plain;
  std::vector<HomotopyExpr> children_;
  long long group_order_ = 1;
  MonodromyDatum monodromy_;
  std::vector<std::size_t> young_;
};

// Homotopy type of the component of `tree`, using the split form for
// hyperbolic splices. The tree is validated, normalized and canonicalized
// first; throws InvalidTree.
HomotopyExpr homotopy_type(const KnotTree& tree);

HomotopyExpr simplify(const HomotopyExpr& e);

// Dimension of circle-built expressions; nullopt when a configuration-space
// quotient occurs.
std::optional<std::size_t> dimension(const HomotopyExpr& e);

std::string expr_render(const HomotopyExpr& e);

// Structural equality ignoring circle role tags.
bool same_shape(const HomotopyExpr& a, const HomotopyExpr& b);

// Equality up to circle tags and to relabeling the fibers of twisted
// products by a signed permutation (which may also replace the monodromy by
// its inverse).
bool equivalent(const HomotopyExpr& a, const HomotopyExpr& b);

std::size_t circle_count(const HomotopyExpr& e);

}  // namespace kspace
