#include "kspace/catalog.hpp"
#include "kspace/errors.hpp"
#include "kspace/symmetry.hpp"

#include <doctest.h>

using namespace kspace;

namespace {

KnotTree fig8() { return HypKnot{"fig8", true, Orientation::Plus}; }
KnotTree chiral(Orientation o = Orientation::Plus) { return HypKnot{"k", false, o}; }
KnotTree trefoil() { return Torus{2, 3}; }
KglDatum kgl(const char* name) { return *catalog_find_kgl(name); }

// Orbit of a tuple under <rho>, computed letter by letter with apply().
std::vector<std::vector<KnotTree>> orbit(const SignedPerm& rho, std::vector<KnotTree> x) {
  std::vector<std::vector<KnotTree>> out{x};
  for (;;) {
    std::vector<KnotTree> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      int img = rho.apply(static_cast<int>(i) + 1);
      std::size_t slot = static_cast<std::size_t>(img < 0 ? -img : img) - 1;
      y[slot] = img < 0 ? canonical_form(invert_class(x[i])) : x[i];
    }
    if (y == out.front()) return out;
    out.push_back(y);
    x = y;
  }
}

}  // namespace

TEST_CASE("inversion of leaves and sums") {
  CHECK(invert_class(trefoil()) == trefoil());
  CHECK(invert_class(chiral()) == chiral(Orientation::Minus));
  CHECK(invert_class(invert_class(chiral())) == chiral());
  KnotTree s = Sum{{trefoil(), chiral()}};
  CHECK(classes_equal(invert_class(s), Sum{{trefoil(), chiral(Orientation::Minus)}}));
}

TEST_CASE("invertibility") {
  CHECK(is_invertible(trefoil()));
  CHECK(is_invertible(fig8()));
  CHECK(!is_invertible(Cable{2, 7, chiral()}));
  CHECK(is_invertible(Sum{{chiral(), invert_class(chiral())}}));
  CHECK(!is_invertible(Sum{{chiral(), chiral()}}));
  CHECK(is_invertible(HypSplice{kgl("borromean"), {fig8(), fig8()}, false}));
  CHECK(!is_invertible(HypSplice{kgl("stoimenow3"), {fig8(), fig8(), fig8()}, false}));
}

// rho = (1 -) already identifies Wh(J) with Wh(IJ), so the class is fixed by
// the inversion even when J is not; see the decisions ledger.
TEST_CASE("whitehead splice of a chiral companion") {
  KnotTree t = HypSplice{kgl("whitehead"), {chiral()}, false};
  CHECK(classes_equal(t, invert_class(t)));
  CHECK(is_invertible(t));
  CHECK(compute_Af(kgl("whitehead"), {chiral()}).order() == 1);
}

TEST_CASE("A_f at the example vertices") {
  CHECK(compute_Af(kgl("borromean"), {fig8(), fig8()}).order() == 4);
  CyclicSubgroup mixed = compute_Af(kgl("borromean"), {trefoil(), fig8()});
  CHECK(mixed.order() == 2);
  CHECK(mixed.generator_image().to_string() == "(1 -)(2 -)");
  CHECK(compute_Af(kgl("whitehead"), {fig8()}).order() == 2);
  CHECK(compute_Af(kgl("link6_3_2"), {chiral()}).order() == 2);
  CHECK(compute_Af(kgl("stoimenow3"), {fig8(), fig8(), trefoil()}).order() == 1);
  CHECK(compute_Af(kgl("stoimenow3"), {fig8(), fig8(), fig8()}).order() == 3);
  CHECK_THROWS_AS(compute_Af(kgl("borromean"), {fig8()}), SizeMismatch);
}

TEST_CASE("class equality") {
  CHECK(classes_equal(Sum{{trefoil(), fig8()}}, Sum{{fig8(), trefoil()}}));
  CHECK(classes_equal(trefoil(), Torus{3, 2}));
  CHECK(classes_equal(Torus{2, -3}, Torus{-2, 3}));
  CHECK(!classes_equal(Torus{2, 3}, Torus{2, -3}));
  KnotTree a = HypSplice{kgl("borromean"), {fig8(), trefoil()}, false};
  KnotTree b = HypSplice{kgl("borromean"), {trefoil(), fig8()}, false};
  auto orb = orbit(kgl("borromean").rho_gen, {fig8(), trefoil()});
  bool reached = false;
  for (const auto& y : orb) reached = reached || y == std::vector<KnotTree>{trefoil(), fig8()};
  REQUIRE(reached);
  CHECK(classes_equal(a, b));
  // Distinct hyperbolic names are distinct classes.
  CHECK(!classes_equal(fig8(), HypKnot{"knot5_2", true, Orientation::Plus}));
}

TEST_CASE("tuple action moves entries to their image slots") {
  SignedPerm rho = kgl("borromean").rho_gen;
  auto y = act_on_tuple(rho, {chiral(), trefoil()});
  CHECK(y[1] == chiral());
  CHECK(y[0] == trefoil());
  auto z = act_on_tuple(rho, y);
  CHECK(z[1] == trefoil());
  CHECK(z[0] == chiral(Orientation::Minus));
}

TEST_CASE("inversion map of a splice") {
  KnotTree t = canonical_form(HypSplice{kgl("borromean"), {fig8(), trefoil()}, false});
  SignedPerm d = splice_inversion_map(t.splice());
  CHECK(act_on_tuple(d, t.splice().children) == canonical_form(invert_class(t)).splice().children);
  KnotTree s = canonical_form(HypSplice{kgl("stoimenow2"), {fig8(), fig8()}, false});
  CHECK_THROWS_AS(splice_inversion_map(s.splice()), NotInvertible);
}
