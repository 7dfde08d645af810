#include "kspace/circle_model.hpp"

#include "kspace/braid.hpp"
#include "kspace/errors.hpp"
#include "kspace/snf.hpp"
#include "kspace/symmetry.hpp"

#include <cstdlib>
#include <map>
#include <utility>

namespace kspace {

namespace {

std::vector<Integer> unit(std::size_t dim, std::size_t k) {
  std::vector<Integer> v(dim);
  v[k] = 1;
  return v;
}

void place(IntMatrix& dst, const IntMatrix& block, std::size_t r0, std::size_t c0) {
  for (std::size_t r = 0; r < block.rows(); ++r)
    for (std::size_t c = 0; c < block.cols(); ++c) dst(r0 + r, c0 + c) = block(r, c);
}

// Concatenates models as a direct sum.
CircleModel direct_sum(const std::vector<CircleModel>& parts, std::vector<std::size_t>& offsets) {
  CircleModel out;
  std::size_t dim = 0, rels = 0;
  for (const auto& p : parts) {
    offsets.push_back(dim);
    dim += p.dim();
    rels += p.relations.cols();
  }
  out.relations = IntMatrix(dim, rels);
  out.gramain_class.assign(dim, 0);
  out.gramain_cocycle.assign(dim, 0);
  std::size_t col = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& p = parts[i];
    out.tags.insert(out.tags.end(), p.tags.begin(), p.tags.end());
    place(out.relations, p.relations, offsets[i], col);
    col += p.relations.cols();
  }
  return out;
}

CircleModel leaf(std::vector<std::string> tags) {
  CircleModel m;
  m.relations = IntMatrix(tags.size(), 0);
  m.gramain_class = unit(tags.size(), 0);
  m.gramain_cocycle = unit(tags.size(), 0);
  m.tags = std::move(tags);
  return m;
}

KnotTree inverse_of(const KnotTree& t) { return canonical_form(invert_class(t)); }

std::vector<std::size_t> block_labels(const std::vector<KnotTree>& xs) {
  std::vector<std::size_t> labels;
  std::vector<KnotTree> seen;
  for (const auto& x : xs) {
    std::size_t k = 0;
    while (k < seen.size() && !(seen[k] == x)) ++k;
    if (k == seen.size()) seen.push_back(x);
    labels.push_back(k);
  }
  return labels;
}

// Abelianized braid generators of B_n^{Sigma_f}: one per block of size >= 2,
// then one per unordered pair of blocks.
struct BraidBasis {
  std::map<std::size_t, std::size_t> within;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> between;
  std::size_t size = 0;
};

BraidBasis braid_basis(const std::vector<std::size_t>& labels) {
  std::map<std::size_t, std::size_t> sizes;
  for (auto l : labels) ++sizes[l];
  BraidBasis b;
  for (const auto& [l, s] : sizes)
    if (s >= 2) b.within[l] = b.size++;
  for (auto i = sizes.begin(); i != sizes.end(); ++i)
    for (auto j = std::next(i); j != sizes.end(); ++j) b.between[{i->first, j->first}] = b.size++;
  return b;
}

CircleModel model_of(const KnotTree& t);

CircleModel sum_model(const Sum& s) {
  const auto& xs = s.summands;
  std::vector<CircleModel> parts;
  for (const auto& x : xs) parts.push_back(model_of(x));
  auto labels = block_labels(xs);
  BraidBasis basis = braid_basis(labels);

  H1Result braid_h1 = abelianization(mixed_braid_group(xs.size(), labels).presentation);
  if (braid_h1.free_rank != basis.size || !braid_h1.torsion.empty())
    throw Error("internal: mixed braid abelianization has rank " +
                std::to_string(braid_h1.free_rank) + ", expected " + std::to_string(basis.size));

  CircleModel braid;
  braid.tags.assign(basis.size, "braid");
  braid.relations = IntMatrix(basis.size, 0);
  braid.gramain_class.assign(basis.size, 0);
  braid.gramain_cocycle.assign(basis.size, 0);
  parts.push_back(braid);

  std::vector<std::size_t> off;
  CircleModel out = direct_sum(parts, off);

  // Identity identifications between equal summands.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::map<std::size_t, std::size_t> last;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (last.count(labels[i])) pairs.push_back({last[labels[i]], i});
    last[labels[i]] = i;
  }
  std::size_t extra = 0;
  for (const auto& [i, j] : pairs) extra += parts[i].dim();
  IntMatrix ident(out.dim(), extra);
  std::size_t col = 0;
  for (const auto& [i, j] : pairs)
    for (std::size_t k = 0; k < parts[i].dim(); ++k, ++col) {
      ident(off[i] + k, col) = 1;
      ident(off[j] + k, col) = -1;
    }
  out.relations = out.relations.hconcat(ident);

  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t k = 0; k < parts[i].dim(); ++k) {
      out.gramain_class[off[i] + k] += parts[i].gramain_class[k];
      out.gramain_cocycle[off[i] + k] += parts[i].gramain_cocycle[k];
    }
  return out;
}

// Block matrix of a signed slot map on the fibers: slot i goes to |g(i)|,
// through the inversion map when negated.
IntMatrix slot_matrix(const SignedPerm& g, const std::vector<KnotTree>& xs,
                      const std::vector<std::size_t>& off, std::size_t dim) {
  IntMatrix m(dim, dim);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::size_t j = g.image(i);
    IntMatrix block = g.negated(i) ? inversion_lattice_map(xs[i])
                                   : IntMatrix::identity(off[i + 1] - off[i]);
    place(m, block, off[j], off[i]);
  }
  return m;
}

std::vector<std::size_t> fiber_offsets(const std::vector<CircleModel>& fibers) {
  std::vector<std::size_t> off{0};
  for (const auto& f : fibers) off.push_back(off.back() + f.dim());
  return off;
}

SpliceTwist twist_of(const HypSplice& s) {
  std::vector<CircleModel> fibers;
  for (const auto& x : s.children) fibers.push_back(model_of(x));
  std::vector<std::size_t> unused;
  CircleModel sum = direct_sum(fibers, unused);
  auto off = fiber_offsets(fibers);
  CyclicSubgroup af = compute_Af(s.kgl, s.children);
  SpliceTwist tw;
  tw.order = af.order();
  tw.fiber_relations = sum.relations;
  tw.monodromy = slot_matrix(af.generator_image(), s.children, off, sum.dim());
  return tw;
}

CircleModel splice_model(const HypSplice& s) {
  std::vector<CircleModel> parts{leaf({"meridian", "base"})};
  for (const auto& x : s.children) parts.push_back(model_of(x));
  std::vector<std::size_t> off;
  CircleModel out = direct_sum(parts, off);
  SpliceTwist tw = twist_of(s);
  if (tw.order > 1) {
    IntMatrix shift = tw.monodromy - IntMatrix::identity(tw.monodromy.rows());
    IntMatrix cols(out.dim(), shift.cols());
    place(cols, shift, 2, 0);
    out.relations = out.relations.hconcat(cols);
  }
  out.gramain_class = unit(out.dim(), 0);
  out.gramain_cocycle = unit(out.dim(), 0);
  return out;
}

CircleModel model_of(const KnotTree& t) {
  switch (t.kind()) {
    case KnotTree::Kind::Unknot: {
      CircleModel m;
      m.relations = IntMatrix(0, 0);
      return m;
    }
    case KnotTree::Kind::Torus:
      return leaf({"cabling"});
    case KnotTree::Kind::HypKnot:
      return leaf({"meridian", "base"});
    case KnotTree::Kind::Cable: {
      std::vector<std::size_t> off;
      CircleModel m = direct_sum({leaf({"cabling"}), model_of(t.cable().companion)}, off);
      m.gramain_class = unit(m.dim(), 0);
      m.gramain_cocycle = unit(m.dim(), 0);
      return m;
    }
    case KnotTree::Kind::Sum:
      return sum_model(t.sum());
    case KnotTree::Kind::HypSplice:
      return splice_model(t.splice());
  }
  return {};
}

IntMatrix negated_identity(std::size_t n) {
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = -1;
  return m;
}

IntMatrix sum_inversion(const KnotTree& t) {
  const auto& xs = t.sum().summands;
  const KnotTree inv = inverse_of(t);
  const auto& ys = inv.sum().summands;
  std::vector<std::size_t> xdim, ydim;
  for (const auto& x : xs) xdim.push_back(model_of(x).dim());
  for (const auto& y : ys) ydim.push_back(model_of(y).dim());
  std::vector<std::size_t> xoff{0}, yoff{0};
  for (auto d : xdim) xoff.push_back(xoff.back() + d);
  for (auto d : ydim) yoff.push_back(yoff.back() + d);

  // k-th copy of class c goes to the k-th copy of its inverse.
  std::vector<std::size_t> target(xs.size());
  std::vector<bool> used(ys.size(), false);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    KnotTree c = inverse_of(xs[i]);
    std::size_t j = 0;
    while (j < ys.size() && (used[j] || !(ys[j] == c))) ++j;
    if (j == ys.size()) throw Error("internal: inverse summand not found");
    used[j] = true;
    target[i] = j;
  }

  auto xl = block_labels(xs);
  auto yl = block_labels(ys);
  BraidBasis xb = braid_basis(xl), yb = braid_basis(yl);
  std::map<std::size_t, std::size_t> beta;
  for (std::size_t i = 0; i < xs.size(); ++i) beta[xl[i]] = yl[target[i]];

  IntMatrix m(yoff.back() + yb.size, xoff.back() + xb.size);
  for (std::size_t i = 0; i < xs.size(); ++i)
    place(m, inversion_lattice_map(xs[i]), yoff[target[i]], xoff[i]);
  // Mirror reflection of the configuration space reverses every braid class.
  for (const auto& [l, k] : xb.within) m(yoff.back() + yb.within.at(beta[l]), xoff.back() + k) = -1;
  for (const auto& [p, k] : xb.between) {
    std::size_t a = beta[p.first], b = beta[p.second];
    if (a > b) std::swap(a, b);
    m(yoff.back() + yb.between.at({a, b}), xoff.back() + k) = -1;
  }
  return m;
}

IntMatrix splice_inversion(const HypSplice& s) {
  std::vector<CircleModel> fibers;
  for (const auto& x : s.children) fibers.push_back(model_of(x));
  auto off = fiber_offsets(fibers);
  IntMatrix fib;
  if (s.kgl.inversion)
    fib = slot_matrix(splice_inversion_map(s), s.children, off, off.back());
  else
    fib = IntMatrix::identity(off.back());
  return negated_identity(2).direct_sum(fib);
}

H1Result h1_of_model(const CircleModel& m) {
  SmithForm s = snf(m.relations);
  auto factors = s.invariant_factors();
  H1Result h;
  h.free_rank = m.dim() - factors.size();
  for (const auto& d : factors)
    if (d != 1) h.torsion.push_back(d);
  for (std::size_t k = factors.size(); k < m.dim(); ++k) {
    // Tag a free generator by the roles its lattice lift touches.
    std::string tag;
    bool mixed = false;
    for (std::size_t r = 0; r < m.dim(); ++r) {
      if (s.U_inv(r, k) == 0) continue;
      const std::string& t = m.tags[r];
      if (tag.empty())
        tag = t;
      else if (tag != t)
        mixed = true;
    }
    if (mixed || (tag != "meridian" && tag != "cabling" && tag != "base")) tag = "other";
    h.basis_tags.push_back(tag);
  }
  return h;
}

}  // namespace

CircleModel circle_model(const KnotTree& tree) { return model_of(canonical_form(normalize(tree))); }

IntMatrix inversion_lattice_map(const KnotTree& t) {
  switch (t.kind()) {
    case KnotTree::Kind::Unknot:
      return IntMatrix(0, 0);
    case KnotTree::Kind::Torus:
      return negated_identity(1);
    case KnotTree::Kind::HypKnot:
      return negated_identity(2);
    case KnotTree::Kind::Cable:
      return negated_identity(1).direct_sum(inversion_lattice_map(t.cable().companion));
    case KnotTree::Kind::Sum:
      return sum_inversion(t);
    case KnotTree::Kind::HypSplice:
      return splice_inversion(t.splice());
  }
  return {};
}

SpliceTwist splice_twist(const KnotTree& splice) {
  KnotTree c = canonical_form(normalize(splice));
  if (c.kind() != KnotTree::Kind::HypSplice) throw SemanticError("splice_twist: not a splice");
  return twist_of(c.splice());
}

H1Result h1(const KnotTree& tree) { return h1_of_model(circle_model(tree)); }

H1Result h1(const HomotopyExpr& e, const KnotTree& tree) {
  if (!(e == simplify(homotopy_type(tree))))
    throw SemanticError("h1: expression does not describe the given tree");
  return h1(tree);
}

IntMatrix I_star(const KnotTree& tree) {
  KnotTree c = canonical_form(normalize(tree));
  if (!is_invertible(c)) throw NotInvertible("I_star: the class is not invertible");
  return inversion_lattice_map(c);
}

std::vector<Integer> gramain_cocycle(const KnotTree& tree) {
  return circle_model(tree).gramain_cocycle;
}

std::vector<Integer> gramain_class(const KnotTree& tree) { return circle_model(tree).gramain_class; }

Integer gramain_pairing(const KnotTree& tree) {
  CircleModel m = circle_model(tree);
  Integer s = 0;
  for (std::size_t i = 0; i < m.dim(); ++i) s += m.gramain_cocycle[i] * m.gramain_class[i];
  return s;
}

}  // namespace kspace
