#pragma once

#include "kspace/knot_tree.hpp"
#include "kspace/signed_perm.hpp"

#include <optional>
#include <vector>

namespace kspace {

// Subgroup of the cyclic group B_L generated by gen^index.
struct CyclicSubgroup {
  KglDatum of;
  long long index = 1;

  long long order() const { return of.b_order / index; }
  // rho(gen^index): the slot action of the subgroup's generator.
  SignedPerm generator_image() const { return sp_power(of.rho_gen, index); }
};

// Action of a signed permutation on a tuple of classes: entry i moves to
// slot |g(i)| and is inverted when g negates it. Results are canonical.
std::vector<KnotTree> act_on_tuple(const SignedPerm& g, const std::vector<KnotTree>& tuple);

// Companionship tree of the inverse knot.
KnotTree invert_class(const KnotTree& tree);

bool is_invertible(const KnotTree& tree);

// Largest subgroup of B_L whose elements fix the tuple of companion classes
// slot by slot.
CyclicSubgroup compute_Af(const KglDatum& kgl, const std::vector<KnotTree>& children);

KnotTree canonical_form(const KnotTree& tree);
bool classes_equal(const KnotTree& a, const KnotTree& b);

// For a canonical splice whose KGL has an inversion datum: the slot map
// delta = rho^a * iota with the least a >= 0 that carries the children onto
// the canonical children of the inverse class.
SignedPerm splice_inversion_map(const HypSplice& canonical_splice);

}  // namespace kspace
