#include "kspace/pi1.hpp"

#include "kspace/braid.hpp"
#include "kspace/circle_model.hpp"
#include "kspace/errors.hpp"
#include "kspace/symmetry.hpp"

#include <map>
#include <sstream>

namespace kspace {

namespace {

using E = HomotopyExpr;
using T = ExtensionTree;

void append_direct(std::vector<T>& out, T t) {
  if (t.kind == T::Kind::Trivial) return;
  if (t.kind == T::Kind::Direct) {
    for (auto& c : t.children) out.push_back(std::move(c));
    return;
  }
  out.push_back(std::move(t));
}

T direct_of(std::vector<T> parts) {
  std::vector<T> flat;
  for (auto& p : parts) append_direct(flat, std::move(p));
  if (flat.empty()) return T{};
  if (flat.size() == 1) return flat.front();
  T t;
  t.kind = T::Kind::Direct;
  t.children = std::move(flat);
  return t;
}

std::string young_label(const std::vector<std::size_t>& young) {
  std::map<std::size_t, std::size_t> sizes;
  for (auto l : young) ++sizes[l];
  std::string s;
  for (const auto& [l, n] : sizes) s += (s.empty() ? "S" : "xS") + std::to_string(n);
  return s;
}

bool composite(const T& t) { return t.kind != T::Kind::Z && t.kind != T::Kind::Trivial; }

}  // namespace

std::string ExtensionTree::render() const {
  switch (kind) {
    case Kind::Trivial:
      return "1";
    case Kind::Z:
      return "Z";
    case Kind::Direct: {
      std::ostringstream os;
      std::size_t i = 0;
      bool first = true;
      while (i < children.size()) {
        if (!first) os << " x ";
        first = false;
        if (children[i].kind == Kind::Z) {
          std::size_t j = i;
          while (j < children.size() && children[j].kind == Kind::Z) ++j;
          os << "Z";
          if (j - i > 1) os << "^" << (j - i);
          i = j;
          continue;
        }
        os << (composite(children[i]) ? "(" + children[i].render() + ")" : children[i].render());
        ++i;
      }
      return os.str();
    }
    case Kind::SemidirectZ:
      return "(" + children.front().render() + ") x| Z [phi=" + monodromy.to_string() +
             ", m=" + std::to_string(order) + "]";
    case Kind::BraidExtension:
      return "(" + children.front().render() + ") x| B" + std::to_string(young.size()) + "^{" +
             young_label(young) + "}";
  }
  return "";
}

ExtensionTree pi1_structure(const HomotopyExpr& e) {
  switch (e.kind()) {
    case E::Kind::Point:
      return T{};
    case E::Kind::Circle: {
      T t;
      t.kind = T::Kind::Z;
      t.role = e.role();
      return t;
    }
    case E::Kind::Product: {
      std::vector<T> parts;
      for (const auto& c : e.children()) parts.push_back(pi1_structure(c));
      return direct_of(std::move(parts));
    }
    case E::Kind::TwistedProduct: {
      std::vector<T> parts;
      for (const auto& c : e.children()) parts.push_back(pi1_structure(c));
      T t;
      t.kind = T::Kind::SemidirectZ;
      t.children.push_back(direct_of(std::move(parts)));
      t.monodromy = e.monodromy().sp;
      t.order = e.group_order();
      return t;
    }
    case E::Kind::Config2ModYoung: {
      std::vector<T> parts;
      for (const auto& c : e.children()) parts.push_back(pi1_structure(c));
      T t;
      t.kind = T::Kind::BraidExtension;
      t.children.push_back(direct_of(std::move(parts)));
      t.young = e.young();
      return t;
    }
  }
  return T{};
}

namespace {

struct Built {
  FpGroup g;
  // Free abelian, with generators in the order of the H1 lattice.
  bool lattice_abelian = true;
};

// Copies `part` into `into` with renamed generators; returns the offset.
std::size_t embed(FpGroup& into, const FpGroup& part, const std::string& prefix) {
  const int off = static_cast<int>(into.rank());
  for (const auto& n : part.generators) into.add_generator(prefix + n);
  for (const auto& r : part.relators) {
    Word w;
    for (int x : r) w.push_back(x > 0 ? x + off : x - off);
    into.relators.push_back(std::move(w));
  }
  return static_cast<std::size_t>(off);
}

void commute_blocks(FpGroup& g, std::size_t a0, std::size_t a1, std::size_t b0, std::size_t b1) {
  for (std::size_t a = a0; a < a1; ++a)
    for (std::size_t b = b0; b < b1; ++b) g.relators.push_back(commutator(letter(a), letter(b)));
}

// Relator s x s^-1 = image, with image a word.
void action_relator(FpGroup& g, std::size_t s, std::size_t x, const Word& image) {
  Word w = letter(s);
  w.push_back(static_cast<int>(x) + 1);
  w.push_back(-(static_cast<int>(s) + 1));
  Word inv = word_inverse(image);
  w.insert(w.end(), inv.begin(), inv.end());
  g.relators.push_back(free_reduce(w));
}

Built present(const KnotTree& t);

// Adds the factors side by side, pairwise commuting. Returns offsets, with
// the end offset appended.
std::vector<std::size_t> add_factors(FpGroup& g, const std::vector<Built>& parts,
                                     const std::string& stem) {
  std::vector<std::size_t> off;
  for (std::size_t i = 0; i < parts.size(); ++i)
    off.push_back(embed(g, parts[i].g, stem + std::to_string(i + 1) + "."));
  off.push_back(g.rank());
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      commute_blocks(g, off[i], off[i + 1], off[j], off[j + 1]);
  return off;
}

Built present_sum(const Sum& s) {
  const auto& xs = s.summands;
  std::vector<Built> parts;
  for (const auto& x : xs) parts.push_back(present(x));
  std::vector<std::size_t> young(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    young[i] = i;
    for (std::size_t j = 0; j < i; ++j)
      if (xs[j] == xs[i]) {
        young[i] = j;
        break;
      }
  }
  Built out;
  out.lattice_abelian = false;
  auto off = add_factors(out.g, parts, "k");
  MixedBraidGroup mb = mixed_braid_group(xs.size(), young);
  std::size_t b0 = embed(out.g, mb.presentation, "");
  for (std::size_t k = 0; k < mb.permutations.size(); ++k)
    for (std::size_t i = 0; i < xs.size(); ++i) {
      std::size_t j = mb.permutations[k][i];
      for (std::size_t r = 0; r < off[i + 1] - off[i]; ++r)
        action_relator(out.g, b0 + k, off[i] + r, letter(off[j] + r));
    }
  return out;
}

Built present_splice(const HypSplice& s) {
  std::vector<Built> parts;
  for (const auto& x : s.children) parts.push_back(present(x));
  Built out;
  std::size_t m = out.g.add_generator("m");
  std::size_t t = out.g.add_generator("t");
  out.g.relators.push_back(commutator(letter(m), letter(t)));
  auto off = add_factors(out.g, parts, "x");
  commute_blocks(out.g, m, m + 1, off.front(), off.back());

  CyclicSubgroup af = compute_Af(s.kgl, s.children);
  SignedPerm g = af.generator_image();
  out.lattice_abelian = af.order() == 1;
  for (std::size_t i = 0; i < s.children.size(); ++i) {
    out.lattice_abelian = out.lattice_abelian && parts[i].lattice_abelian;
    std::size_t j = g.image(i);
    std::size_t width = off[i + 1] - off[i];
    if (!g.negated(i)) {
      for (std::size_t r = 0; r < width; ++r) action_relator(out.g, t, off[i] + r, letter(off[j] + r));
      continue;
    }
    if (!parts[i].lattice_abelian)
      throw NonConcreteAction("monodromy inverts a fiber with non-abelian fundamental group");
    IntMatrix inv = inversion_lattice_map(s.children[i]);
    for (std::size_t r = 0; r < width; ++r) {
      Word image;
      for (std::size_t q = 0; q < inv.rows(); ++q) {
        long e = static_cast<long>(inv(q, r));
        for (long k = 0; k < std::abs(e); ++k) {
          Word l = letter(off[j] + q, e < 0);
          image.insert(image.end(), l.begin(), l.end());
        }
      }
      action_relator(out.g, t, off[i] + r, image);
    }
  }
  return out;
}

Built present(const KnotTree& t) {
  Built b;
  switch (t.kind()) {
    case KnotTree::Kind::Unknot:
      return b;
    case KnotTree::Kind::Torus:
      b.g.add_generator("c");
      return b;
    case KnotTree::Kind::HypKnot:
      b.g.add_generator("m");
      b.g.add_generator("t");
      b.g.relators.push_back(commutator(letter(0), letter(1)));
      return b;
    case KnotTree::Kind::Cable: {
      Built inner = present(t.cable().companion);
      b.g.add_generator("c");
      embed(b.g, inner.g, "g.");
      commute_blocks(b.g, 0, 1, 1, b.g.rank());
      b.lattice_abelian = inner.lattice_abelian;
      return b;
    }
    case KnotTree::Kind::Sum:
      return present_sum(t.sum());
    case KnotTree::Kind::HypSplice:
      return present_splice(t.splice());
  }
  return b;
}

}  // namespace

FpGroup pi1_presentation(const KnotTree& tree) {
  return present(canonical_form(normalize(tree))).g;
}

}  // namespace kspace
