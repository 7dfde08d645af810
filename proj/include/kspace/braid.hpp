#pragma once

#include "kspace/coset_enum.hpp"
#include "kspace/fp_group.hpp"

#include <cstddef>
#include <vector>

namespace kspace {

// Block labels of a Young subgroup: young[i] == young[j] iff strands i and j
// may be exchanged. Labels need not be normalized.
using Young = std::vector<std::size_t>;

// Generators of the Young subgroup of Sigma_n as words in the Coxeter
// generators: one transposition per adjacent pair inside each block.
std::vector<Word> young_subgroup_words(const Young& young);

// [Sigma_n : Sigma_f] = n! / prod(block sizes)!
std::size_t young_index(const Young& young);

// Permutation of {0..n-1} induced by a braid word, composed so that the
// first letter is applied last: perm(w1 w2) = perm(w1) o perm(w2).
std::vector<std::size_t> braid_permutation(std::size_t n, const Word& w);

struct MixedBraidGroup {
  FpGroup presentation;
  std::size_t index = 0;  // coset count of Sigma_f in Sigma_n
  // Each generator as a word in the Artin generators of B_n, and its
  // permutation of the strands.
  std::vector<Word> braid_words;
  std::vector<std::vector<std::size_t>> permutations;
};

// Preimage of the Young subgroup under B_n -> Sigma_n, presented by
// Reidemeister-Schreier rewriting over a Todd-Coxeter coset table.
MixedBraidGroup mixed_braid_group(std::size_t n, const Young& young,
                                  std::size_t limit = kDefaultCosetLimit);

}  // namespace kspace
