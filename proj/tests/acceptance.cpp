// Acceptance run: one PASS/FAIL line per criterion. Every comparison is
// exact; there are no numeric tolerances.
#include "kspace/braid.hpp"
#include "kspace/catalog.hpp"
#include "kspace/circle_model.hpp"
#include "kspace/coset_enum.hpp"
#include "kspace/dsl.hpp"
#include "kspace/homotopy_expr.hpp"
#include "kspace/snf.hpp"
#include "kspace/symmetry.hpp"

#include "random_trees.hpp"

#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

using namespace kspace;
using E = HomotopyExpr;

namespace {

constexpr int kExact = 0;  // allowed deviation for every check below

constexpr std::uint64_t kSeed = 0x6b737061636531ULL;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

KnotTree knot(const std::string& src) { return parse_knot(src); }
HomotopyExpr type_of(const KnotTree& t) { return simplify(homotopy_type(t)); }

E torus_expr(std::size_t k) {
  std::vector<E> cs(k, E::circle());
  return simplify(E::product(cs));
}

std::vector<KnotTree> random_sample(std::uint64_t seed, std::size_t n, int levels) {
  std::mt19937_64 rng(seed);
  std::vector<KnotTree> out;
  while (out.size() < n) {
    KnotTree t = testing::random_knot(rng, levels);
    if (is_valid(t)) out.push_back(t);
  }
  return out;
}

struct Cli {
  int code = -1;
  std::string out;
};

Cli run_cli(const std::string& args, const std::string& input) {
  std::string cmd = std::string("printf '%s' '") + input + "' | " + KSPACE_CLI + " " + args +
                    " 2>/dev/null";
  Cli r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Outcome homotopy_types() {
  Outcome o;
  o.require(type_of(knot("unknot")) == E::point(), "unknot");
  o.require(same_shape(type_of(knot("torus(2,3)")), E::circle()), "torus(2,3)");
  o.require(same_shape(type_of(knot("fig8")), torus_expr(2)), "fig8");

  std::string tower = "torus(2,3)";
  for (std::size_t n = 1; n <= 5; ++n) {
    o.require(same_shape(type_of(knot(tower)), torus_expr(n)),
              "cable tower of height " + std::to_string(n));
    tower = "cable(2,1; " + tower + ")";
  }

  E t2 = torus_expr(2);
  E bor = E::product({E::circle(), E::twisted(4, MonodromyDatum(parse_signed_cycles("(1 2 -)", 2)),
                                              {t2, t2})});
  KnotTree bf = knot("splice(borromean; fig8, fig8)");
  o.require(equivalent(type_of(bf), bor), "borromean(fig8, fig8)");
  o.require(compute_Af(bf.splice().kgl, bf.splice().children).order() == 4, "A_f order 4");

  E mixed = E::product(
      {E::circle(), E::twisted(2, MonodromyDatum(parse_signed_cycles("(1 -)(2 -)", 2)),
                               {E::circle(), t2})});
  KnotTree bt = knot("splice(borromean; trefoil, fig8)");
  o.require(equivalent(type_of(bt), mixed), "borromean(trefoil, fig8)");
  o.require(compute_Af(bt.splice().kgl, bt.splice().children).order() == 2, "A_f order 2");

  E wh = E::product({E::circle(), E::twisted(2, MonodromyDatum(parse_signed_cycles("(1 -)", 1)), {t2})});
  o.require(equivalent(type_of(knot("splice(whitehead; fig8)")), wh), "whitehead(invertible J)");
  o.require(same_shape(type_of(knot("splice(whitehead; knot8_17)")), torus_expr(4)),
            "whitehead(non-invertible J)");

  E c4 = E::config({0, 0, 0, 0}, {E::circle(), E::circle(), E::circle(), E::circle()});
  o.require(same_shape(type_of(knot("sum(trefoil, trefoil, trefoil, trefoil)")), c4),
            "sum of 4 trefoils");
  return o;
}

Outcome dimensions() {
  Outcome o;
  auto d6 = dimension(type_of(knot("splice(borromean; fig8, fig8)")));
  auto d5 = dimension(type_of(knot("splice(borromean; trefoil, fig8)")));
  o.require(d6 && static_cast<long>(*d6) - 6 == kExact, "borromean(fig8, fig8) dimension");
  o.require(d5 && static_cast<long>(*d5) - 5 == kExact, "borromean(trefoil, fig8) dimension");
  return o;
}

Outcome homology() {
  Outcome o;
  H1Result h = h1(knot("splice(borromean; fig8, fig8)"));
  o.require(h.free_rank == 2 && h.torsion == std::vector<Integer>{2, 2}, "H1 = Z^2 + (Z/2)^2");
  Cli v = run_cli("h1 --verify -", "splice(borromean; fig8, fig8)");
  o.require(v.code == 0, "h1 --verify exit code");
  o.require(v.out.find("502 checks, 0 mismatches") != std::string::npos,
            "h1 --verify report: " + v.out);
  return o;
}

Outcome gramain() {
  Outcome o;
  o.require(gramain_pairing(knot("unknot")) == 0, "unknot");
  o.require(gramain_pairing(knot("torus(2,3)")) == 1, "torus(2,3)");
  const std::vector<std::string> primes{"trefoil", "fig8", "torus(2,5)", "hyp(knot5_2; invertible=true)",
                                        "torus(3,4)", "knot8_17"};
  for (std::size_t n = 2; n <= 6; ++n) {
    std::string src = "sum(";
    for (std::size_t i = 0; i < n; ++i) src += (i ? ", " : "") + primes[i];
    src += ")";
    o.require(gramain_pairing(knot(src)) == static_cast<long>(n), "connect sum of " + std::to_string(n));
  }
  std::size_t nonzero = 0;
  for (const auto& t : random_sample(kSeed + 4, 50, 3))
    if (!t.is_unknot() && gramain_pairing(t) != 0) ++nonzero;
  o.require(nonzero == 50, "random trees with nonzero pairing: " + std::to_string(nonzero) + "/50");
  return o;
}

Outcome invertibility() {
  Outcome o;
  std::size_t agree = 0, involution = 0;
  for (const auto& t : random_sample(kSeed + 5, 200, 3)) {
    KnotTree i = invert_class(t);
    if (is_invertible(t) == classes_equal(t, i)) ++agree;
    if (classes_equal(invert_class(i), t)) ++involution;
  }
  o.require(agree == 200, "is_invertible agreement " + std::to_string(agree) + "/200");
  o.require(involution == 200, "invert_class involution " + std::to_string(involution) + "/200");
  return o;
}

void young_labels(std::size_t n, Young& cur, std::size_t blocks, const std::function<void(const Young&)>& f) {
  if (cur.size() == n) {
    f(cur);
    return;
  }
  for (std::size_t b = 0; b <= blocks; ++b) {
    cur.push_back(b);
    young_labels(n, cur, std::max(blocks, b + 1), f);
    cur.pop_back();
  }
}

Outcome braids() {
  Outcome o;
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    Young cur;
    young_labels(n, cur, 0, [&](const Young& y) {
      ++checked;
      std::size_t idx = todd_coxeter(symmetric_group(n), young_subgroup_words(y)).index();
      o.require(idx == young_index(y), "coset count for a Young subgroup of S" + std::to_string(n));
    });
  }
  o.require(checked == 1 + 2 + 5 + 15 + 52, "number of Young subgroups enumerated");
  for (std::size_t n = 2; n <= 4; ++n) {
    Young singletons(n);
    for (std::size_t i = 0; i < n; ++i) singletons[i] = i;
    H1Result h = abelianization(mixed_braid_group(n, singletons).presentation);
    o.require(h.free_rank == n * (n - 1) / 2 && h.torsion.empty(),
              "pure braid abelianization for n=" + std::to_string(n));
  }
  return o;
}

Outcome smith() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 7);
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int k = 0; k < 500; ++k) {
    IntMatrix a(dim(rng), dim(rng));
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = entry(rng);
    SmithForm s = snf(a);
    o.require(s.U * a * s.V == s.D, "U A V = D");
    Integer du = determinant(s.U), dv = determinant(s.V);
    o.require((du == 1 || du == -1) && (dv == 1 || dv == -1), "unimodular transforms");
    auto f = s.invariant_factors();
    for (std::size_t i = 0; i < s.D.rows(); ++i)
      for (std::size_t j = 0; j < s.D.cols(); ++j)
        if (i != j) o.require(s.D(i, j) == 0, "D diagonal");
    for (std::size_t i = 0; i + 1 < f.size(); ++i)
      o.require(f[i] > 0 && f[i + 1] % f[i] == 0, "divisibility chain");
  }
  return o;
}

Outcome round_trip() {
  Outcome o;
  std::size_t same = 0;
  for (const auto& t : random_sample(kSeed + 8, 200, 3))
    if (parse_knot(print_knot(t)) == t) ++same;
  o.require(same == 200, "parse(print(t)) == t for " + std::to_string(same) + "/200");
  for (const char* cmd : {"h1 --json -", "type --json -", "pi1 --json -", "gramain --json -",
                          "af --json -", "parse --json -", "pi1 --presentation --json -"}) {
    const char* src = "splice(borromean; fig8, fig8)";
    Cli a = run_cli(cmd, src), b = run_cli(cmd, src);
    o.require(a.code == 0 && !a.out.empty() && a.out == b.out, std::string("byte-stable ") + cmd);
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "homotopy-type regression", homotopy_types},
      {2, "dimension", dimensions},
      {3, "H1 with oracle cross-check", homology},
      {4, "Gramain pairing table", gramain},
      {5, "invertibility consistency", invertibility},
      {6, "mixed braid groups", braids},
      {7, "Smith normal form contract", smith},
      {8, "CLI round trip and byte stability", round_trip},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name;
    if (!o.ok) std::cout << " -- " << o.detail;
    std::cout << "\n";
    if (!o.ok) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
