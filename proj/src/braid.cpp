#include "kspace/braid.hpp"

#include "kspace/errors.hpp"

#include <cstdlib>
#include <map>
#include <queue>
#include <string>

namespace kspace {

std::vector<Word> young_subgroup_words(const Young& young) {
  std::vector<Word> out;
  std::map<std::size_t, std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < young.size(); ++i) blocks[young[i]].push_back(i);
  for (const auto& [label, members] : blocks) {
    for (std::size_t k = 0; k + 1 < members.size(); ++k) {
      // (a b) = s_a s_(a+1) ... s_(b-1) ... s_(a+1) s_a, strands 0-based
      int a = static_cast<int>(members[k]) + 1;
      int b = static_cast<int>(members[k + 1]) + 1;
      Word w;
      for (int s = a; s < b; ++s) w.push_back(s);
      for (int s = b - 2; s >= a; --s) w.push_back(s);
      out.push_back(std::move(w));
    }
  }
  return out;
}

std::size_t young_index(const Young& young) {
  std::map<std::size_t, std::size_t> sizes;
  for (auto l : young) ++sizes[l];
  std::size_t num = 1;
  for (std::size_t k = 2; k <= young.size(); ++k) num *= k;
  for (const auto& [l, s] : sizes)
    for (std::size_t k = 2; k <= s; ++k) num /= k;
  return num;
}

std::vector<std::size_t> braid_permutation(std::size_t n, const Word& w) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  // Apply letters right to left.
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    std::size_t s = static_cast<std::size_t>(std::abs(*it)) - 1;
    for (auto& p : perm) {
      if (p == s)
        p = s + 1;
      else if (p == s + 1)
        p = s;
    }
  }
  return perm;
}

MixedBraidGroup mixed_braid_group(std::size_t n, const Young& young, std::size_t limit) {
  if (young.size() != n) throw SizeMismatch("Young labels do not cover n strands");
  if (n < 1) throw SizeMismatch("braid group needs at least one strand");
  FpGroup braid = braid_group(n);
  CosetTable table = todd_coxeter(symmetric_group(n), young_subgroup_words(young), limit);

  MixedBraidGroup out;
  out.index = table.index();
  const std::size_t gens = braid.rank();

  // Schreier transversal by breadth-first search; tree[c][g] marks the
  // edge c --g--> c.g as part of the spanning tree.
  std::vector<Word> rep(table.index());
  std::vector<bool> seen(table.index(), false);
  std::vector<std::vector<bool>> tree(table.index(), std::vector<bool>(gens, false));
  std::queue<std::size_t> todo;
  seen[0] = true;
  todo.push(0);
  while (!todo.empty()) {
    std::size_t c = todo.front();
    todo.pop();
    for (std::size_t g = 0; g < gens; ++g)
      for (int sign : {1, -1}) {
        int x = sign * static_cast<int>(g + 1);
        std::size_t d = table.act(c, x);
        if (seen[d]) continue;
        seen[d] = true;
        rep[d] = rep[c];
        rep[d].push_back(x);
        if (sign > 0)
          tree[c][g] = true;
        else
          tree[d][g] = true;
        todo.push(d);
      }
  }

  // Schreier generator for each non-tree edge (c, g).
  std::vector<std::vector<long>> gen_id(table.index(), std::vector<long>(gens, -1));
  for (std::size_t c = 0; c < table.index(); ++c)
    for (std::size_t g = 0; g < gens; ++g) {
      if (tree[c][g]) continue;
      std::size_t d = table.act(c, static_cast<int>(g + 1));
      gen_id[c][g] = static_cast<long>(out.presentation.add_generator(
          "y" + std::to_string(c) + "_" + std::to_string(g + 1)));
      Word w = rep[c];
      w.push_back(static_cast<int>(g + 1));
      Word back = word_inverse(rep[d]);
      w.insert(w.end(), back.begin(), back.end());
      w = free_reduce(w);
      out.permutations.push_back(braid_permutation(n, w));
      out.braid_words.push_back(std::move(w));
    }

  auto rewrite = [&](std::size_t c, const Word& w) {
    Word out_word;
    for (int x : w) {
      std::size_t g = static_cast<std::size_t>(std::abs(x)) - 1;
      if (x > 0) {
        if (gen_id[c][g] >= 0) out_word.push_back(static_cast<int>(gen_id[c][g]) + 1);
        c = table.act(c, x);
      } else {
        std::size_t prev = table.act(c, x);
        if (gen_id[prev][g] >= 0) out_word.push_back(-(static_cast<int>(gen_id[prev][g]) + 1));
        c = prev;
      }
    }
    return free_reduce(out_word);
  };

  for (std::size_t c = 0; c < table.index(); ++c)
    for (const auto& r : braid.relators) {
      Word w = rewrite(c, r);
      if (!w.empty()) out.presentation.relators.push_back(std::move(w));
    }
  return out;
}

}  // namespace kspace
