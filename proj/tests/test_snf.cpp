#include "kspace/snf.hpp"

#include <doctest.h>

#include <random>

using namespace kspace;

namespace {

Integer iabs(const Integer& v) { return v < 0 ? Integer(-v) : v; }

Integer gcd2(Integer a, Integer b) {
  a = iabs(a);
  b = iabs(b);
  while (b != 0) {
    Integer r = a % b;
    a = b;
    b = r;
  }
  return a;
}

void subsets(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors from determinantal divisors: d_k = gcd of k x k minors,
// factor_k = d_k / d_(k-1). Exponential, fine for small matrices.
std::vector<Integer> determinantal_factors(const IntMatrix& a) {
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(a.rows(), k, 0, cur, rs);
    subsets(a.cols(), k, 0, cur, cs);
    Integer g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        IntMatrix m(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m(i, j) = a(r[i], c[j]);
        g = gcd2(g, determinant(m));
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim) {
  std::uniform_int_distribution<std::size_t> d(1, max_dim);
  std::uniform_int_distribution<int> e(-9, 9);
  IntMatrix m(d(rng), d(rng));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = e(rng);
  return m;
}

bool diagonal_chain(const IntMatrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  const std::size_t lim = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i + 1 < lim; ++i) {
    if (d(i, i) < 0) return false;
    if (d(i, i) == 0 && d(i + 1, i + 1) != 0) return false;
    if (d(i, i) != 0 && d(i + 1, i + 1) % d(i, i) != 0) return false;
  }
  return true;
}

IntMatrix borromean_shift() {
  // M = [[0, -I2], [I2, 0]], minus the identity
  IntMatrix m{{-1, 0, -1, 0}, {0, -1, 0, -1}, {1, 0, -1, 0}, {0, 1, 0, -1}};
  return m;
}

}  // namespace

TEST_CASE("identity is its own normal form") {
  CHECK(snf(IntMatrix::identity(3)).D == IntMatrix::identity(3));
}

TEST_CASE("small examples agree with determinantal divisors") {
  IntMatrix a{{2, 4}, {6, 8}};
  REQUIRE(determinantal_factors(a) == std::vector<Integer>{2, 4});
  SmithForm s = snf(a);
  CHECK(s.D == (IntMatrix{{2, 0}, {0, 4}}));
  CHECK(s.U * a * s.V == s.D);

  REQUIRE(determinantal_factors(borromean_shift()) == std::vector<Integer>{1, 1, 2, 2});
  CHECK(snf(borromean_shift()).invariant_factors() == std::vector<Integer>{1, 1, 2, 2});
  CHECK(invariant_factors(borromean_shift()) == std::vector<Integer>{1, 1, 2, 2});

  IntMatrix d{{6, 0}, {0, 4}};
  CHECK(snf(d).invariant_factors() == std::vector<Integer>{2, 12});
}

TEST_CASE("cokernel reads columns as relations") {
  AbelianGroup g = cokernel(borromean_shift());
  CHECK(g.free_rank == 0);
  CHECK(g.torsion == std::vector<Integer>{2, 2});
  AbelianGroup z2 = cokernel(IntMatrix(2, 0));
  CHECK(z2.free_rank == 2);
  AbelianGroup m = cokernel(IntMatrix{{2}, {0}});
  CHECK(m.free_rank == 1);
  CHECK(m.torsion == std::vector<Integer>{2});
  CHECK(cokernel(IntMatrix(0, 0)).free_rank == 0);
}

TEST_CASE("contract on random matrices") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 300; ++k) {
    IntMatrix a = random_matrix(rng, 8);
    SmithForm s = snf(a);
    CHECK(s.U * a * s.V == s.D);
    CHECK(iabs(determinant(s.U)) == 1);
    CHECK(iabs(determinant(s.V)) == 1);
    CHECK(s.U * s.U_inv == IntMatrix::identity(a.rows()));
    CHECK(diagonal_chain(s.D));
    CHECK(invariant_factors(a) == s.invariant_factors());
  }
}

TEST_CASE("random small matrices against determinantal divisors") {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 150; ++k) {
    IntMatrix a = random_matrix(rng, 4);
    CHECK(snf(a).invariant_factors() == determinantal_factors(a));
  }
}

TEST_CASE("sparse elimination on a large relation matrix") {
  // Path-graph incidence: coker is Z.
  const std::size_t n = 60;
  IntMatrix a(n, n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    a(j, j) = 1;
    a(j + 1, j) = -1;
  }
  AbelianGroup g = cokernel(a);
  CHECK(g.free_rank == 1);
  CHECK(g.torsion.empty());
}
