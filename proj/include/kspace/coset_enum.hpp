#pragma once

#include "kspace/fp_group.hpp"

#include <cstddef>
#include <vector>

namespace kspace {

inline constexpr std::size_t kDefaultCosetLimit = 10000;

// Completed coset table of a finite-index subgroup, cosets numbered
// 0..index-1 with the subgroup itself as coset 0. Column 2g is the action of
// generator g, column 2g+1 that of its inverse.
struct CosetTable {
  std::size_t generator_count = 0;
  std::vector<std::vector<std::size_t>> rows;

  std::size_t index() const { return rows.size(); }
  std::size_t act(std::size_t coset, int letter) const;
  std::size_t act(std::size_t coset, const Word& w) const;
};

// Hasselgrove-Leech-Trotter enumeration of the right cosets of the subgroup
// generated by `subgroup`. Throws IndexTooLarge once more than `limit` cosets
// have been defined.
CosetTable todd_coxeter(const FpGroup& g, const std::vector<Word>& subgroup,
                        std::size_t limit = kDefaultCosetLimit);

}  // namespace kspace
