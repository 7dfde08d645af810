#include "kspace/braid.hpp"
#include "kspace/catalog.hpp"
#include "kspace/circle_model.hpp"
#include "kspace/coset_enum.hpp"
#include "kspace/errors.hpp"
#include "kspace/oracle.hpp"
#include "kspace/pi1.hpp"
#include "kspace/symmetry.hpp"

#include <doctest.h>

#include <map>

using namespace kspace;

namespace {

KnotTree fig8() { return HypKnot{"fig8", true, Orientation::Plus}; }
KnotTree chiral() { return HypKnot{"k", false, Orientation::Plus}; }
KnotTree trefoil() { return Torus{2, 3}; }
KglDatum kgl(const char* name) { return *catalog_find_kgl(name); }

KnotTree borromean_fig8s() { return HypSplice{kgl("borromean"), {fig8(), fig8()}, false}; }

// All set partitions of {0..n-1} as block labels (restricted growth strings).
void partitions(std::size_t n, std::vector<std::size_t>& cur, std::size_t blocks,
                std::vector<Young>& out) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  for (std::size_t b = 0; b <= blocks; ++b) {
    cur.push_back(b);
    partitions(n, cur, std::max(blocks, b + 1), out);
    cur.pop_back();
  }
}

std::vector<Young> all_young(std::size_t n) {
  std::vector<Young> out;
  std::vector<std::size_t> cur;
  partitions(n, cur, 0, out);
  return out;
}

}  // namespace

TEST_CASE("presentations print in angle-bracket form") {
  FpGroup g;
  g.add_generator("a");
  g.add_generator("b");
  g.relators.push_back({1, 1});
  g.relators.push_back(commutator(letter(0), letter(1)));
  CHECK(g.to_string() == "< a, b | a^2, a*b*a^-1*b^-1 >");
  CHECK(g.well_formed());
  g.relators.push_back({3});
  CHECK(!g.well_formed());
  CHECK(free_reduce({1, 2, -2, -1, 3}) == Word{3});
}

TEST_CASE("abelianization examples") {
  FpGroup free2;
  free2.add_generator("a");
  free2.add_generator("b");
  CHECK(abelianization(free2).free_rank == 2);
  CHECK(abelianization(free2).torsion.empty());
  FpGroup z2;
  z2.add_generator("a");
  z2.relators.push_back({1, 1});
  CHECK(abelianization(z2).torsion == std::vector<Integer>{2});
  H1Result b4 = abelianization(braid_group(4));
  CHECK(b4.free_rank == 1);
  CHECK(b4.torsion.empty());
}

TEST_CASE("Todd-Coxeter on small groups") {
  FpGroup s3 = symmetric_group(3);
  CHECK(todd_coxeter(s3, {}).index() == 6);
  CHECK(todd_coxeter(s3, {{1}}).index() == 3);
  FpGroup z5;
  z5.add_generator("a");
  z5.relators.push_back({1, 1, 1, 1, 1});
  CHECK(todd_coxeter(z5, {}).index() == 5);
  // <a, b | a^2, b^3, (ab)^5> is A5
  FpGroup a5;
  a5.add_generator("a");
  a5.add_generator("b");
  a5.relators = {{1, 1}, {2, 2, 2}, {1, 2, 1, 2, 1, 2, 1, 2, 1, 2}};
  CHECK(todd_coxeter(a5, {}).index() == 60);
  CHECK(todd_coxeter(a5, {{2}}).index() == 20);
  CHECK_THROWS_AS(todd_coxeter(a5, {}, 30), IndexTooLarge);
  FpGroup z;
  z.add_generator("a");
  CHECK_THROWS_AS(todd_coxeter(z, {}, 100), IndexTooLarge);
}

TEST_CASE("coset tables are permutation representations") {
  CosetTable t = todd_coxeter(symmetric_group(4), young_subgroup_words({0, 0, 1, 2}));
  for (std::size_t c = 0; c < t.index(); ++c)
    for (int x = 1; x <= 3; ++x) {
      CHECK(t.act(t.act(c, x), -x) == c);
      CHECK(t.act(c, Word{x, x}) == c);
    }
}

TEST_CASE("coset counts match the Young index for n <= 5") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& y : all_young(n)) {
      std::size_t count =
          todd_coxeter(symmetric_group(n), young_subgroup_words(y)).index();
      CHECK(count == young_index(y));
      CHECK(count == oracle::coset_count_check(n, y));
    }
}

TEST_CASE("mixed braid groups") {
  MixedBraidGroup two = mixed_braid_group(2, {0, 1});
  CHECK(two.index == 2);
  H1Result h2 = abelianization(two.presentation);
  CHECK(h2.free_rank == 1);
  CHECK(h2.torsion.empty());

  MixedBraidGroup whole = mixed_braid_group(3, {0, 0, 0});
  CHECK(whole.index == 1);
  CHECK(abelianization(whole.presentation).free_rank == 1);

  for (std::size_t n = 2; n <= 4; ++n) {
    Young singletons(n);
    for (std::size_t i = 0; i < n; ++i) singletons[i] = i;
    H1Result pure = abelianization(mixed_braid_group(n, singletons).presentation);
    CHECK(pure.free_rank == n * (n - 1) / 2);
    CHECK(pure.torsion.empty());
  }
  // Generators lie in the preimage: their permutations preserve the blocks.
  MixedBraidGroup mb = mixed_braid_group(4, {0, 0, 1, 1});
  for (const auto& p : mb.permutations)
    for (std::size_t i = 0; i < 4; ++i) CHECK((p[i] < 2) == (i < 2));
  CHECK_THROWS_AS(mixed_braid_group(7, {0, 1, 2, 3, 4, 5, 6}, 1000), IndexTooLarge);
}

TEST_CASE("h1 examples") {
  H1Result b = h1(borromean_fig8s());
  CHECK(b.free_rank == 2);
  CHECK(b.torsion == std::vector<Integer>{2, 2});
  CHECK(b.divisibility_chain());
  CHECK(h1(trefoil()).free_rank == 1);
  CHECK(h1(trefoil()).basis_tags == std::vector<std::string>{"cabling"});
  CHECK(h1(KnotTree()).free_rank == 0);
  H1Result two = h1(Sum{{trefoil(), fig8()}});
  CHECK(two.free_rank == 4);  // S^1, S^1 x S^1 and the pure braid class
  H1Result two_tori = h1(Sum{{trefoil(), Torus{2, 5}}});
  CHECK(two_tori.free_rank == 3);
  CHECK(h1(simplify(homotopy_type(borromean_fig8s())), borromean_fig8s()) == b);
  CHECK_THROWS_AS(h1(simplify(homotopy_type(trefoil())), fig8()), SemanticError);
}

TEST_CASE("h1 is additive over products") {
  KnotTree inner = borromean_fig8s();
  H1Result a = h1(inner);
  H1Result c = h1(Cable{2, 1, inner});
  CHECK(c.free_rank == a.free_rank + 1);
  CHECK(c.torsion == a.torsion);
  KnotTree triv = HypSplice{kgl("whitehead"), {chiral()}, false};
  CHECK(h1(triv).free_rank == 2 + h1(chiral()).free_rank);
}

TEST_CASE("twisted part agrees with brute-force coinvariants") {
  for (const auto& t : {borromean_fig8s(), KnotTree(HypSplice{kgl("whitehead"), {fig8()}, false}),
                        KnotTree(HypSplice{kgl("borromean"), {trefoil(), fig8()}, false}),
                        KnotTree(HypSplice{kgl("sakuma3"), {fig8(), fig8(), fig8()}, false}),
                        KnotTree(HypSplice{kgl("stoimenow3"), {trefoil(), trefoil(), trefoil()}, false})}) {
    SpliceTwist tw = splice_twist(t);
    H1Result brute = oracle::coinvariants_bruteforce(tw.monodromy, tw.order);
    AbelianGroup engine = cokernel(tw.monodromy - IntMatrix::identity(tw.monodromy.rows()));
    CHECK(engine == brute.group());
    H1Result whole = h1(t);
    CHECK(whole.free_rank == brute.free_rank + 2);
    CHECK(whole.torsion == brute.torsion);
  }
}

TEST_CASE("I_star") {
  CHECK(I_star(trefoil()) == IntMatrix{{-1}});
  CHECK(I_star(fig8()) == (IntMatrix{{-1, 0}, {0, -1}}));
  CHECK_THROWS_AS(I_star(chiral()), NotInvertible);
  for (const auto& t :
       {borromean_fig8s(), KnotTree(Cable{2, 1, fig8()}), KnotTree(Sum{{trefoil(), fig8()}}),
        KnotTree(Sum{{chiral(), invert_class(chiral())}})}) {
    IntMatrix m = I_star(t);
    CHECK(m * m == IntMatrix::identity(m.rows()));
  }
}

TEST_CASE("I_star on a two-summand sum reverses the pure braid class") {
  KnotTree s = Sum{{chiral(), invert_class(chiral())}};
  IntMatrix m = I_star(s);
  // Lattice: two hyperbolic summands (2 circles each), then one braid class.
  REQUIRE(m.rows() == 5);
  CHECK(m(4, 4) == -1);
  // The summands trade places.
  CHECK(m(0, 0) == 0);
  CHECK(m(2, 0) == -1);
  CHECK(m(0, 2) == -1);
}

TEST_CASE("Gramain pairing") {
  CHECK(gramain_pairing(KnotTree()) == 0);
  CHECK(gramain_pairing(trefoil()) == 1);
  CHECK(gramain_pairing(Sum{{trefoil(), trefoil(), trefoil(), trefoil()}}) == 4);
  CHECK(gramain_pairing(borromean_fig8s()) == 1);
  CHECK(gramain_pairing(Cable{3, 2, fig8()}) == 1);
  CHECK(gramain_class(trefoil()) == std::vector<Integer>{1});
}

TEST_CASE("Gramain cocycle vanishes on relations") {
  for (const auto& t : {borromean_fig8s(), KnotTree(Sum{{trefoil(), trefoil(), fig8()}})}) {
    CircleModel m = circle_model(t);
    for (std::size_t c = 0; c < m.relations.cols(); ++c) {
      Integer s = 0;
      for (std::size_t r = 0; r < m.dim(); ++r) s += m.gramain_cocycle[r] * m.relations(r, c);
      CHECK(s == 0);
    }
  }
}

TEST_CASE("pi1 structure") {
  CHECK(pi1_structure(HomotopyExpr::circle()).kind == ExtensionTree::Kind::Z);
  CHECK(pi1_structure(HomotopyExpr::point()).render() == "1");
  ExtensionTree b = pi1_structure(simplify(homotopy_type(borromean_fig8s())));
  REQUIRE(b.kind == ExtensionTree::Kind::Direct);
  REQUIRE(b.children.size() == 2);
  const ExtensionTree& semi = b.children[1];
  CHECK(semi.kind == ExtensionTree::Kind::SemidirectZ);
  CHECK(semi.order == 4);
  CHECK(semi.monodromy.to_string() == "(1 2 -)");
  CHECK(semi.render() == "(Z^4) x| Z [phi=(1 2 -), m=4]");
  ExtensionTree s = pi1_structure(simplify(homotopy_type(Sum{{trefoil(), trefoil(), fig8()}})));
  CHECK(s.render() == "(Z^4) x| B3^{S2xS1}");
}

TEST_CASE("presentations abelianize to h1") {
  for (const auto& t :
       {borromean_fig8s(), KnotTree(fig8()), KnotTree(Cable{2, 1, trefoil()}),
        KnotTree(Sum{{trefoil(), trefoil(), fig8()}}),
        KnotTree(HypSplice{kgl("borromean"), {trefoil(), fig8()}, false}),
        KnotTree(HypSplice{kgl("whitehead"), {Cable{2, 1, fig8()}}, false})}) {
    FpGroup g = pi1_presentation(t);
    CHECK(g.well_formed());
    H1Result a = abelianization(g);
    H1Result h = h1(t);
    CHECK(a.free_rank == h.free_rank);
    CHECK(a.torsion == h.torsion);
  }
  KnotTree sum_fiber = HypSplice{kgl("whitehead"), {Sum{{trefoil(), fig8()}}}, false};
  CHECK_THROWS_AS(pi1_presentation(sum_fiber), NonConcreteAction);
  CHECK(pi1_presentation(KnotTree()).to_string() == "< | >");
}
