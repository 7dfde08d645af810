#include "kspace/fp_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace kspace {

Word word_inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& x : out) x = -x;
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word commutator(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  Word ai = word_inverse(a);
  Word bi = word_inverse(b);
  out.insert(out.end(), ai.begin(), ai.end());
  out.insert(out.end(), bi.begin(), bi.end());
  return free_reduce(out);
}

Word letter(std::size_t gen, bool inverse) {
  int x = static_cast<int>(gen) + 1;
  return {inverse ? -x : x};
}

std::size_t FpGroup::add_generator(std::string name) {
  generators.push_back(std::move(name));
  return generators.size() - 1;
}

bool FpGroup::well_formed() const {
  for (const auto& r : relators)
    for (int x : r)
      if (x == 0 || static_cast<std::size_t>(std::abs(x)) > generators.size()) return false;
  return true;
}

std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!first) os << "*";
    first = false;
    const auto& name = names[static_cast<std::size_t>(std::abs(w[i])) - 1];
    long run = static_cast<long>(j - i);
    long exp = w[i] < 0 ? -run : run;
    os << name;
    if (exp != 1) os << "^" << exp;
    i = j;
  }
  return os.str();
}

std::string FpGroup::to_string() const {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < generators.size(); ++i) os << (i ? ", " : " ") << generators[i];
  os << " |";
  for (std::size_t i = 0; i < relators.size(); ++i)
    os << (i ? ", " : " ") << word_to_string(relators[i], generators);
  os << " >";
  return os.str();
}

bool H1Result::divisibility_chain() const {
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (torsion[i] < 2) return false;
    if (i + 1 < torsion.size() && torsion[i + 1] % torsion[i] != 0) return false;
  }
  return true;
}

IntMatrix exponent_sum_matrix(const FpGroup& g) {
  IntMatrix m(g.relators.size(), g.generators.size());
  for (std::size_t r = 0; r < g.relators.size(); ++r)
    for (int x : g.relators[r]) m(r, static_cast<std::size_t>(std::abs(x)) - 1) += x > 0 ? 1 : -1;
  return m;
}

H1Result abelianization(const FpGroup& g) {
  // Columns of the transpose are relations among the generators.
  AbelianGroup a = cokernel(exponent_sum_matrix(g).transpose());
  H1Result h{a.free_rank, a.torsion, {}};
  h.basis_tags.assign(a.free_rank, "other");
  return h;
}

FpGroup braid_group(std::size_t n) {
  FpGroup g;
  for (std::size_t i = 1; i < n; ++i) g.add_generator("s" + std::to_string(i));
  for (std::size_t i = 0; i + 1 < g.rank(); ++i) {
    int a = static_cast<int>(i) + 1, b = a + 1;
    g.relators.push_back({a, b, a, -b, -a, -b});
  }
  for (std::size_t i = 0; i < g.rank(); ++i)
    for (std::size_t j = i + 2; j < g.rank(); ++j)
      g.relators.push_back(commutator(letter(i), letter(j)));
  return g;
}

FpGroup symmetric_group(std::size_t n) {
  FpGroup g;
  for (std::size_t i = 1; i < n; ++i) g.add_generator("s" + std::to_string(i));
  for (std::size_t i = 0; i < g.rank(); ++i) {
    int a = static_cast<int>(i) + 1;
    g.relators.push_back({a, a});
    if (i + 1 < g.rank()) g.relators.push_back({a, a + 1, a, a + 1, a, a + 1});
    for (std::size_t j = i + 2; j < g.rank(); ++j) {
      int b = static_cast<int>(j) + 1;
      g.relators.push_back({a, b, a, b});
    }
  }
  return g;
}

}  // namespace kspace
