#include "kspace/symmetry.hpp"

#include "kspace/errors.hpp"

#include <algorithm>
#include <utility>

namespace kspace {

namespace {

KnotTree inverse_canonical(const KnotTree& t) { return canonical_form(invert_class(t)); }

std::vector<KnotTree> canonical_children(const std::vector<KnotTree>& xs) {
  std::vector<KnotTree> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(canonical_form(x));
  return out;
}

}  // namespace

std::vector<KnotTree> act_on_tuple(const SignedPerm& g, const std::vector<KnotTree>& tuple) {
  if (g.size() != tuple.size()) throw SizeMismatch("signed permutation and tuple sizes differ");
  std::vector<KnotTree> out(tuple.size());
  for (std::size_t i = 0; i < tuple.size(); ++i)
    out[g.image(i)] = g.negated(i) ? inverse_canonical(tuple[i]) : canonical_form(tuple[i]);
  return out;
}

KnotTree invert_class(const KnotTree& t) {
  switch (t.kind()) {
    case KnotTree::Kind::Unknot:
    case KnotTree::Kind::Torus:
      return t;
    case KnotTree::Kind::HypKnot: {
      HypKnot h = t.hyp();
      if (h.invertible) return t;
      h.orientation = h.orientation == Orientation::Plus ? Orientation::Minus : Orientation::Plus;
      return h;
    }
    case KnotTree::Kind::Cable: {
      const auto& c = t.cable();
      return Cable{c.p, c.q, invert_class(c.companion)};
    }
    case KnotTree::Kind::Sum: {
      std::vector<KnotTree> out;
      for (const auto& s : t.sum().summands) out.push_back(invert_class(s));
      return Sum{std::move(out)};
    }
    case KnotTree::Kind::HypSplice: {
      HypSplice s = t.splice();
      if (!s.kgl.inversion) {
        s.inverted = !s.inverted;
        return s;
      }
      const SignedPerm& iota = *s.kgl.inversion;
      std::vector<KnotTree> moved(s.children.size());
      for (std::size_t i = 0; i < s.children.size(); ++i)
        moved[iota.image(i)] = iota.negated(i) ? invert_class(s.children[i]) : s.children[i];
      s.children = std::move(moved);
      return s;
    }
  }
  return t;
}

bool is_invertible(const KnotTree& t) {
  switch (t.kind()) {
    case KnotTree::Kind::Unknot:
    case KnotTree::Kind::Torus:
      return true;
    case KnotTree::Kind::HypKnot:
      return t.hyp().invertible;
    case KnotTree::Kind::Cable:
      return is_invertible(t.cable().companion);
    case KnotTree::Kind::Sum: {
      std::vector<KnotTree> classes;
      std::vector<KnotTree> inverses;
      for (const auto& s : t.sum().summands) {
        classes.push_back(canonical_form(s));
        inverses.push_back(inverse_canonical(s));
      }
      std::sort(classes.begin(), classes.end());
      std::sort(inverses.begin(), inverses.end());
      return classes == inverses;
    }
    case KnotTree::Kind::HypSplice: {
      const auto& s = t.splice();
      if (!s.kgl.inversion) return false;
      auto x = canonical_children(s.children);
      const auto order = static_cast<long long>(sp_order(s.kgl.rho_gen));
      for (long long a = 0; a < order; ++a) {
        SignedPerm delta = sp_compose(sp_power(s.kgl.rho_gen, a), *s.kgl.inversion);
        if (act_on_tuple(delta, x) == x) return true;
      }
      return false;
    }
  }
  return false;
}

CyclicSubgroup compute_Af(const KglDatum& kgl, const std::vector<KnotTree>& children) {
  if (children.size() != kgl.n || kgl.rho_gen.size() != kgl.n)
    throw SizeMismatch("compute_Af: " + std::to_string(children.size()) + " children for n=" +
                       std::to_string(kgl.n));
  auto x = canonical_children(children);
  for (long long j = 1; j <= kgl.b_order; ++j) {
    if (kgl.b_order % j != 0) continue;
    if (act_on_tuple(sp_power(kgl.rho_gen, j), x) == x) return CyclicSubgroup{kgl, j};
  }
  return CyclicSubgroup{kgl, kgl.b_order};
}

KnotTree canonical_form(const KnotTree& t) {
  switch (t.kind()) {
    case KnotTree::Kind::Unknot:
      return t;
    case KnotTree::Kind::Torus: {
      Torus k = t.torus();
      if (std::abs(k.p) > std::abs(k.q)) std::swap(k.p, k.q);
      if (k.p < 0) {
        k.p = -k.p;
        k.q = -k.q;
      }
      return k;
    }
    case KnotTree::Kind::HypKnot: {
      HypKnot h = t.hyp();
      if (h.invertible) h.orientation = Orientation::Plus;
      return h;
    }
    case KnotTree::Kind::Cable: {
      const auto& c = t.cable();
      return Cable{c.p, c.q, canonical_form(c.companion)};
    }
    case KnotTree::Kind::Sum: {
      auto xs = canonical_children(t.sum().summands);
      std::sort(xs.begin(), xs.end());
      return Sum{std::move(xs)};
    }
    case KnotTree::Kind::HypSplice: {
      HypSplice s = t.splice();
      auto x = canonical_children(s.children);
      if (s.kgl.rho_gen.size() != x.size()) {
        s.children = std::move(x);
        return s;
      }
      auto best = x;
      const auto order = static_cast<long long>(sp_order(s.kgl.rho_gen));
      for (long long a = 1; a < order; ++a) {
        auto y = act_on_tuple(sp_power(s.kgl.rho_gen, a), x);
        if (y < best) best = std::move(y);
      }
      s.children = std::move(best);
      return s;
    }
  }
  return t;
}

bool classes_equal(const KnotTree& a, const KnotTree& b) {
  return canonical_form(normalize(a)) == canonical_form(normalize(b));
}

SignedPerm splice_inversion_map(const HypSplice& s) {
  if (!s.kgl.inversion) throw NotInvertible("KGL " + s.kgl.name + " has no inversion datum");
  KnotTree self = s;
  KnotTree target = inverse_canonical(self);
  const auto& x = s.children;
  const auto& z = target.splice().children;
  const auto order = static_cast<long long>(sp_order(s.kgl.rho_gen));
  for (long long a = 0; a < order; ++a) {
    SignedPerm delta = sp_compose(sp_power(s.kgl.rho_gen, a), *s.kgl.inversion);
    if (act_on_tuple(delta, x) == z) return delta;
  }
  throw Error("internal: inverse splice not reached within the rho orbit");
}

}  // namespace kspace
