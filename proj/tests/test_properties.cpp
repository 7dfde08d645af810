#include "kspace/circle_model.hpp"
#include "kspace/dsl.hpp"
#include "kspace/errors.hpp"
#include "kspace/pi1.hpp"
#include "kspace/serialize.hpp"
#include "kspace/snf.hpp"
#include "kspace/symmetry.hpp"

#include "random_trees.hpp"

#include <doctest.h>

using namespace kspace;
using testing::random_knot;

namespace {

std::vector<KnotTree> sample(std::uint64_t seed, std::size_t count, int levels) {
  std::mt19937_64 rng(seed);
  std::vector<KnotTree> out;
  while (out.size() < count) {
    KnotTree t = random_knot(rng, levels);
    if (is_valid(t)) out.push_back(t);
  }
  return out;
}

// Same class, different presentation: shuffled summands and children moved
// along a random rho orbit.
KnotTree scramble(const KnotTree& t, std::mt19937_64& rng) {
  switch (t.kind()) {
    case KnotTree::Kind::Cable:
      return Cable{t.cable().p, t.cable().q, scramble(t.cable().companion, rng)};
    case KnotTree::Kind::Sum: {
      auto xs = t.sum().summands;
      for (auto& x : xs) x = scramble(x, rng);
      std::shuffle(xs.begin(), xs.end(), rng);
      return Sum{xs};
    }
    case KnotTree::Kind::HypSplice: {
      HypSplice s = t.splice();
      for (auto& x : s.children) x = scramble(x, rng);
      auto a = static_cast<long long>(rng() % sp_order(s.kgl.rho_gen));
      s.children = act_on_tuple(sp_power(s.kgl.rho_gen, a), s.children);
      return s;
    }
    case KnotTree::Kind::Torus:
      if (rng() % 2) return Torus{t.torus().q, t.torus().p};
      return t;
    default:
      return t;
  }
}

}  // namespace

TEST_CASE("generator produces valid trees of bounded depth") {
  for (const auto& t : sample(1, 200, 3)) {
    CHECK(is_valid(t));
    CHECK(tree_depth(t) <= 4);
  }
}

TEST_CASE("print then parse is the identity") {
  for (const auto& t : sample(2, 200, 3)) {
    std::string text = print_knot(t);
    CHECK_MESSAGE(parse_knot(text) == t, text);
  }
}

TEST_CASE("structured round trip") {
  for (const auto& t : sample(3, 100, 3)) {
    CHECK(deserialize_tree(serialize(t)) == t);
    HomotopyExpr e = homotopy_type(t);
    CHECK(deserialize_expr(serialize(e)) == e);
  }
}

TEST_CASE("canonical forms") {
  std::mt19937_64 rng(4);
  for (const auto& t : sample(4, 150, 3)) {
    KnotTree c = canonical_form(t);
    CHECK(canonical_form(c) == c);
    CHECK(classes_equal(t, scramble(t, rng)));
  }
}

TEST_CASE("inversion is an involution and matches invertibility") {
  for (const auto& t : sample(5, 200, 3)) {
    KnotTree i = invert_class(t);
    CHECK(classes_equal(invert_class(i), t));
    CHECK(is_invertible(t) == classes_equal(t, i));
    CHECK(is_invertible(i) == is_invertible(t));
  }
}

TEST_CASE("I_star squares to the identity and preserves relations") {
  std::size_t seen = 0;
  for (const auto& t : sample(6, 150, 2)) {
    if (!is_invertible(t)) continue;
    ++seen;
    IntMatrix m = I_star(t);
    CHECK(m * m == IntMatrix::identity(m.rows()));
    CircleModel model = circle_model(t);
    IntMatrix moved = m * model.relations;
    CHECK(cokernel(model.relations.hconcat(moved)) == cokernel(model.relations));
  }
  CHECK(seen > 30);
}

TEST_CASE("h1 and the Gramain pairing") {
  for (const auto& t : sample(7, 120, 3)) {
    H1Result h = h1(t);
    CHECK(h.divisibility_chain());
    CHECK(h.free_rank >= 1);
    CHECK(h.basis_tags.size() == h.free_rank);
    CHECK(gramain_pairing(t) != 0);
    CircleModel m = circle_model(t);
    for (std::size_t c = 0; c < m.relations.cols(); ++c) {
      Integer s = 0;
      for (std::size_t r = 0; r < m.dim(); ++r) s += m.gramain_cocycle[r] * m.relations(r, c);
      CHECK(s == 0);
    }
  }
}

TEST_CASE("presentations abelianize to h1 where they exist") {
  std::size_t built = 0;
  for (const auto& t : sample(8, 60, 2)) {
    FpGroup g;
    try {
      g = pi1_presentation(t);
    } catch (const NonConcreteAction&) {
      continue;
    }
    ++built;
    H1Result a = abelianization(g);
    H1Result h = h1(t);
    CHECK(a.free_rank == h.free_rank);
    CHECK(a.torsion == h.torsion);
  }
  CHECK(built > 20);
}

TEST_CASE("simplification is idempotent and keeps circle-built dimensions") {
  for (const auto& t : sample(9, 150, 3)) {
    HomotopyExpr e = homotopy_type(t);
    HomotopyExpr s = simplify(e);
    CHECK(simplify(s) == s);
    CHECK(dimension(s) == dimension(e));
    if (dimension(s)) CHECK(*dimension(s) == circle_count(s));
  }
}
