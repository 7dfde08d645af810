#pragma once

#include "kspace/fp_group.hpp"
#include "kspace/int_matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

// Brute-force reference computations. Nothing here calls the Smith form,
// the coset enumerator or the braid code.
namespace kspace::oracle {

struct NaiveAbelianization {
  IntMatrix matrix;
  std::vector<std::string> trace;  // one line per elementary operation
};

// Invariant factors of A (units included, zeros omitted) by repeated gcd
// pivoting. Intended for matrices up to about 12x12.
std::vector<Integer> naive_invariant_factors(const IntMatrix& A, NaiveAbelianization* trace = nullptr);

// Exponent-sum matrix of g, then naive reduction.
H1Result naive_abelianization(const FpGroup& g);

// coker(M - I). Throws NotFiniteOrder unless M^m == I, and Error when the
// torsion product disagrees with |det(M - I)|.
H1Result coinvariants_bruteforce(const IntMatrix& M, long long m);

// Number of cosets of the Young subgroup in Sigma_n, counted by listing all
// n! permutations and grouping them. Throws LimitExceeded for n > 6.
std::size_t coset_count_check(std::size_t n, const std::vector<std::size_t>& young);

}  // namespace kspace::oracle
