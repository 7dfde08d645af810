#pragma once

#include "kspace/catalog.hpp"
#include "kspace/knot_tree.hpp"

#include <random>
#include <string>
#include <vector>

namespace testing {

using namespace kspace;

inline std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

inline KnotTree random_leaf(std::mt19937_64& rng) {
  static const std::vector<Torus> tori{{2, 3}, {2, 5}, {3, 4}, {2, -3}, {3, -5}, {2, 7}};
  static const std::vector<HypKnot> hyps{
      {"fig8", true, Orientation::Plus},
      {"knot5_2", true, Orientation::Plus},
      {"knot8_17", false, Orientation::Plus},
      {"knot8_17", false, Orientation::Minus},
      {"knot9_32", false, Orientation::Plus},
  };
  if (pick(rng, 2) == 0) return tori[pick(rng, tori.size())];
  return hyps[pick(rng, hyps.size())];
}

// Valid tree with at most `levels` levels below the root.
inline KnotTree random_knot(std::mt19937_64& rng, int levels, bool allow_sum = true) {
  if (levels <= 0 || pick(rng, 10) < 3) return random_leaf(rng);
  static const char* kgls[] = {"borromean", "whitehead", "link6_3_2", "stoimenow2", "stoimenow3",
                               "sakuma3"};
  switch (pick(rng, allow_sum ? 3 : 2)) {
    case 0: {
      static const std::pair<long long, long long> pq[] = {{2, 1}, {2, 3}, {3, 1}, {2, -1}, {3, 2}};
      auto [p, q] = pq[pick(rng, 5)];
      return Cable{p, q, random_knot(rng, levels - 1)};
    }
    case 1: {
      HypSplice s;
      s.kgl = *catalog_find_kgl(kgls[pick(rng, 6)]);
      // Repeating one child makes nontrivial A_f likely.
      KnotTree shared = random_knot(rng, levels - 1);
      for (std::size_t i = 0; i < s.kgl.n; ++i)
        s.children.push_back(pick(rng, 2) == 0 ? shared : random_knot(rng, levels - 1));
      if (!s.kgl.inversion) s.inverted = pick(rng, 2) == 0;
      return s;
    }
    default: {
      Sum s;
      std::size_t n = 2 + pick(rng, 2);
      KnotTree shared = random_knot(rng, levels - 1, false);
      for (std::size_t i = 0; i < n; ++i)
        s.summands.push_back(pick(rng, 2) == 0 ? shared : random_knot(rng, levels - 1, false));
      return s;
    }
  }
}

}  // namespace testing
