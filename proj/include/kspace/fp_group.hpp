#pragma once

#include "kspace/int_matrix.hpp"
#include "kspace/snf.hpp"

#include <string>
#include <vector>

namespace kspace {

// Letters are +-(generator index + 1).
using Word = std::vector<int>;

Word word_inverse(const Word& w);
Word free_reduce(const Word& w);
Word commutator(const Word& a, const Word& b);  // a b a^-1 b^-1
Word letter(std::size_t gen, bool inverse = false);

// Finitely presented group. An empty relator list is the free group.
struct FpGroup {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  std::size_t rank() const { return generators.size(); }
  std::size_t add_generator(std::string name);
  // "< a, b | a^2, a*b*a^-1*b^-1 >"
  std::string to_string() const;
  // Relators reference only existing generators.
  bool well_formed() const;
};

std::string word_to_string(const Word& w, const std::vector<std::string>& names);

// First homology with role tags on the free generators.
struct H1Result {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // invariant factors, each >= 2, d1 | d2 | ...
  std::vector<std::string> basis_tags;

  AbelianGroup group() const { return {free_rank, torsion}; }
  bool divisibility_chain() const;

  friend bool operator==(const H1Result&, const H1Result&) = default;
};

// Relator exponent sums: one row per relator, one column per generator.
IntMatrix exponent_sum_matrix(const FpGroup& g);

H1Result abelianization(const FpGroup& g);

// Standard Artin presentation of B_n on s1..s(n-1).
FpGroup braid_group(std::size_t n);

// Coxeter presentation of the symmetric group on s1..s(n-1).
FpGroup symmetric_group(std::size_t n);

}  // namespace kspace
