#include "kspace/oracle.hpp"

#include "kspace/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

namespace kspace::oracle {

namespace {

Integer gcd_of(Integer a, Integer b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Integer r = a % b;
    a = b;
    b = r;
  }
  return a;
}

// Row and column operations on a plain copy, written out longhand.
struct Work {
  std::vector<std::vector<Integer>> a;
  std::vector<std::string>* log = nullptr;

  void note(const std::string& s) {
    if (log) log->push_back(s);
  }
  void row_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    note("swap rows " + std::to_string(i) + " " + std::to_string(j));
  }
  void col_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& row : a) std::swap(row[i], row[j]);
    note("swap cols " + std::to_string(i) + " " + std::to_string(j));
  }
  // (row i, row j) <- (x*ri + y*rj, u*ri + v*rj), xv - yu = 1
  void row_combine(std::size_t i, std::size_t j, const Integer& x, const Integer& y,
                   const Integer& u, const Integer& v) {
    for (std::size_t c = 0; c < a[i].size(); ++c) {
      Integer p = a[i][c], q = a[j][c];
      a[i][c] = x * p + y * q;
      a[j][c] = u * p + v * q;
    }
    note("combine rows " + std::to_string(i) + " " + std::to_string(j));
  }
  void col_combine(std::size_t i, std::size_t j, const Integer& x, const Integer& y,
                   const Integer& u, const Integer& v) {
    for (auto& row : a) {
      Integer p = row[i], q = row[j];
      row[i] = x * p + y * q;
      row[j] = u * p + v * q;
    }
    note("combine cols " + std::to_string(i) + " " + std::to_string(j));
  }
};

// Extended Euclid: x*a + y*b = g = gcd(a, b) >= 0.
void ext_gcd(const Integer& a, const Integer& b, Integer& g, Integer& x, Integer& y) {
  Integer r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    Integer q = r0 / r1;
    Integer tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  g = r0;
  x = s0;
  y = t0;
}

}  // namespace

std::vector<Integer> naive_invariant_factors(const IntMatrix& A, NaiveAbelianization* trace) {
  Work w;
  w.a.assign(A.rows(), std::vector<Integer>(A.cols()));
  for (std::size_t r = 0; r < A.rows(); ++r)
    for (std::size_t c = 0; c < A.cols(); ++c) w.a[r][c] = A(r, c);
  if (trace) {
    trace->matrix = A;
    w.log = &trace->trace;
  }
  const std::size_t rows = A.rows(), cols = A.cols();
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Find any nonzero entry in the trailing block.
    bool found = false;
    for (std::size_t r = t; r < rows && !found; ++r)
      for (std::size_t c = t; c < cols; ++c)
        if (w.a[r][c] != 0) {
          w.row_swap(t, r);
          w.col_swap(t, c);
          found = true;
          break;
        }
    if (!found) break;
    bool dirty = true;
    while (dirty) {
      dirty = false;
      // Fold column t into the pivot with gcd combinations.
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (w.a[r][t] == 0) continue;
        Integer p = w.a[t][t], q = w.a[r][t], g, x, y;
        if (q % p == 0) {
          w.row_combine(t, r, 1, 0, -q / p, 1);
          continue;
        }
        ext_gcd(p, q, g, x, y);
        w.row_combine(t, r, x, y, -q / g, p / g);
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (w.a[t][c] == 0) continue;
        Integer p = w.a[t][t], q = w.a[t][c], g, x, y;
        if (q % p == 0) {
          w.col_combine(t, c, 1, 0, -q / p, 1);
          continue;
        }
        ext_gcd(p, q, g, x, y);
        w.col_combine(t, c, x, y, -q / g, p / g);
      }
      for (std::size_t r = t + 1; r < rows; ++r)
        if (w.a[r][t] != 0) dirty = true;
    }
    diag.push_back(w.a[t][t] < 0 ? Integer(-w.a[t][t]) : w.a[t][t]);
  }
  // Normalize the diagonal into a divisibility chain with gcd/lcm swaps.
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      Integer g = gcd_of(diag[i], diag[j]);
      if (g == 0) continue;
      Integer l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l < 0 ? Integer(-l) : l;
    }
  std::vector<Integer> out;
  for (const auto& d : diag)
    if (d != 0) out.push_back(d);
  return out;
}

H1Result naive_abelianization(const FpGroup& g) {
  IntMatrix m(g.generators.size(), g.relators.size());
  for (std::size_t r = 0; r < g.relators.size(); ++r)
    for (int x : g.relators[r]) {
      std::size_t k = static_cast<std::size_t>(x > 0 ? x : -x) - 1;
      m(k, r) += x > 0 ? 1 : -1;
    }
  auto f = naive_invariant_factors(m);
  H1Result h;
  h.free_rank = g.generators.size() - f.size();
  for (const auto& d : f)
    if (d != 1) h.torsion.push_back(d);
  h.basis_tags.assign(h.free_rank, "other");
  return h;
}

H1Result coinvariants_bruteforce(const IntMatrix& M, long long m) {
  const std::size_t n = M.rows();
  if (M.cols() != n || m < 1) throw NotFiniteOrder("monodromy must be square with order >= 1");
  IntMatrix id(n, n);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = 1;
  IntMatrix p = id;
  for (long long k = 0; k < m; ++k) p = p * M;
  if (!(p == id)) throw NotFiniteOrder("M^" + std::to_string(m) + " is not the identity");

  IntMatrix shift = M - id;
  auto f = naive_invariant_factors(shift);
  H1Result h;
  h.free_rank = n - f.size();
  Integer product = 1;
  for (const auto& d : f) {
    product *= d;
    if (d != 1) h.torsion.push_back(d);
  }
  h.basis_tags.assign(h.free_rank, "other");
  Integer det = determinant(shift);
  if (det != 0 && (det < 0 ? Integer(-det) : det) != product)
    throw Error("coinvariants: torsion order does not match |det(M - I)|");
  return h;
}

std::size_t coset_count_check(std::size_t n, const std::vector<std::size_t>& young) {
  if (n > 6) throw LimitExceeded("coset_count_check is limited to n <= 6");
  if (young.size() != n) throw SizeMismatch("Young labels do not cover n points");
  // Two permutations lie in the same coset of the Young subgroup iff they
  // agree after replacing each point by its block label.
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::vector<std::size_t>> cosets;
  do {
    std::vector<std::size_t> key(n);
    for (std::size_t i = 0; i < n; ++i) key[perm[i]] = young[i];
    cosets.insert(key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return cosets.size();
}

}  // namespace kspace::oracle
