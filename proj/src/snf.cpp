#include "kspace/snf.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>

namespace kspace {

namespace {

struct Pos {
  std::size_t r;
  std::size_t c;
};

// Smallest nonzero |entry| in the trailing block starting at (t, t).
std::optional<Pos> min_entry(const IntMatrix& d, std::size_t t) {
  std::optional<Pos> best;
  Integer best_abs;
  for (std::size_t r = t; r < d.rows(); ++r)
    for (std::size_t c = t; c < d.cols(); ++c) {
      const Integer& v = d(r, c);
      if (v == 0) continue;
      Integer a = abs(v);
      if (!best || a < best_abs) {
        best = Pos{r, c};
        best_abs = a;
        if (best_abs == 1) return best;
      }
    }
  return best;
}

struct Reducer {
  IntMatrix& D;
  IntMatrix* U;
  IntMatrix* V;
  IntMatrix* U_inv = nullptr;

  void swap_rows(std::size_t a, std::size_t b) {
    D.swap_rows(a, b);
    if (U) U->swap_rows(a, b);
    if (U_inv) U_inv->swap_cols(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    D.swap_cols(a, b);
    if (V) V->swap_cols(a, b);
  }
  void add_row(std::size_t dst, std::size_t src, const Integer& k) {
    D.add_row_multiple(dst, src, k);
    if (U) U->add_row_multiple(dst, src, k);
    if (U_inv) U_inv->add_col_multiple(src, dst, -k);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& k) {
    D.add_col_multiple(dst, src, k);
    if (V) V->add_col_multiple(dst, src, k);
  }
  void negate_row(std::size_t r) {
    D.negate_row(r);
    if (U) U->negate_row(r);
    if (U_inv) U_inv->negate_col(r);
  }

  // Clears row t and column t apart from the pivot, and makes the pivot
  // divide every entry of the trailing block.
  void settle_pivot(std::size_t t) {
    for (;;) {
      bool clean = true;
      for (std::size_t r = t + 1; r < D.rows(); ++r) {
        if (D(r, t) == 0) continue;
        Integer q = D(r, t) / D(t, t);
        add_row(r, t, -q);
        if (D(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < D.cols(); ++c) {
        if (D(t, c) == 0) continue;
        Integer q = D(t, c) / D(t, t);
        add_col(c, t, -q);
        if (D(t, c) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; promote it.
        Pos best{t, t};
        Integer best_abs = abs(D(t, t));
        for (std::size_t r = t + 1; r < D.rows(); ++r)
          if (D(r, t) != 0 && abs(D(r, t)) < best_abs) {
            best = {r, t};
            best_abs = abs(D(r, t));
          }
        for (std::size_t c = t + 1; c < D.cols(); ++c)
          if (D(t, c) != 0 && abs(D(t, c)) < best_abs) {
            best = {t, c};
            best_abs = abs(D(t, c));
          }
        swap_rows(t, best.r);
        swap_cols(t, best.c);
        continue;
      }
      bool divides = true;
      for (std::size_t r = t + 1; r < D.rows() && divides; ++r)
        for (std::size_t c = t + 1; c < D.cols(); ++c)
          if (D(r, c) % D(t, t) != 0) {
            add_row(t, r, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (D(t, t) < 0) negate_row(t);
  }

  void run() {
    const std::size_t lim = std::min(D.rows(), D.cols());
    for (std::size_t t = 0; t < lim; ++t) {
      auto p = min_entry(D, t);
      if (!p) break;
      swap_rows(t, p->r);
      swap_cols(t, p->c);
      settle_pivot(t);
    }
  }
};

}  // namespace

std::vector<Integer> SmithForm::invariant_factors() const {
  std::vector<Integer> out;
  const std::size_t lim = std::min(D.rows(), D.cols());
  for (std::size_t i = 0; i < lim && D(i, i) != 0; ++i) out.push_back(D(i, i));
  return out;
}

SmithForm snf(const IntMatrix& A) {
  SmithForm s{IntMatrix::identity(A.rows()), A, IntMatrix::identity(A.cols()),
              IntMatrix::identity(A.rows())};
  Reducer{s.D, &s.U, &s.V, &s.U_inv}.run();
  return s;
}

namespace {

// Sparse elimination of unit pivots. Each eliminated pivot contributes an
// invariant factor of 1 and shrinks the problem by one row and one column.
struct SparseReducer {
  std::vector<std::map<std::size_t, Integer>> rows;
  std::vector<std::set<std::size_t>> col_rows;
  std::vector<bool> row_live;
  std::vector<bool> col_live;
  std::size_t units = 0;

  explicit SparseReducer(const IntMatrix& a)
      : rows(a.rows()), col_rows(a.cols()), row_live(a.rows(), true),
        col_live(a.cols(), true) {
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c)
        if (a(r, c) != 0) {
          rows[r].emplace(c, a(r, c));
          col_rows[c].insert(r);
        }
  }

  void eliminate(std::size_t pr, std::size_t pc) {
    const Integer u = rows[pr].at(pc);  // +-1
    std::vector<std::size_t> targets(col_rows[pc].begin(), col_rows[pc].end());
    for (std::size_t r : targets) {
      if (r == pr) continue;
      Integer k = -rows[r].at(pc) * u;
      for (const auto& [c, v] : rows[pr]) {
        auto it = rows[r].find(c);
        if (it == rows[r].end()) {
          rows[r].emplace(c, k * v);
          col_rows[c].insert(r);
        } else {
          it->second += k * v;
          if (it->second == 0) {
            rows[r].erase(it);
            col_rows[c].erase(r);
          }
        }
      }
    }
    for (const auto& [c, v] : rows[pr]) col_rows[c].erase(pr);
    rows[pr].clear();
    row_live[pr] = false;
    col_live[pc] = false;
    ++units;
  }

  void run() {
    bool progress = true;
    while (progress) {
      progress = false;
      std::vector<std::size_t> order;
      for (std::size_t r = 0; r < rows.size(); ++r)
        if (row_live[r] && !rows[r].empty()) order.push_back(r);
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return rows[a].size() < rows[b].size();
      });
      for (std::size_t r : order) {
        if (!row_live[r] || rows[r].empty()) continue;
        std::optional<std::size_t> best;
        for (const auto& [c, v] : rows[r])
          if (v == 1 || v == -1)
            if (!best || col_rows[c].size() < col_rows[*best].size()) best = c;
        if (best) {
          eliminate(r, *best);
          progress = true;
        }
      }
    }
  }

  IntMatrix remainder() const {
    std::vector<std::size_t> rs;
    std::vector<std::size_t> cs;
    std::map<std::size_t, std::size_t> col_index;
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (row_live[r] && !rows[r].empty()) rs.push_back(r);
    for (std::size_t c = 0; c < col_rows.size(); ++c)
      if (col_live[c] && !col_rows[c].empty()) {
        col_index[c] = cs.size();
        cs.push_back(c);
      }
    IntMatrix m(rs.size(), cs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (const auto& [c, v] : rows[rs[i]]) m(i, col_index.at(c)) = v;
    return m;
  }
};

}  // namespace

std::vector<Integer> invariant_factors(const IntMatrix& A) {
  SparseReducer sparse(A);
  sparse.run();
  IntMatrix rest = sparse.remainder();
  Reducer{rest, nullptr, nullptr}.run();
  std::vector<Integer> out(sparse.units, Integer(1));
  const std::size_t lim = std::min(rest.rows(), rest.cols());
  for (std::size_t i = 0; i < lim && rest(i, i) != 0; ++i) out.push_back(rest(i, i));
  return out;
}

AbelianGroup cokernel(const IntMatrix& A) {
  AbelianGroup g;
  auto factors = invariant_factors(A);
  g.free_rank = A.rows() - factors.size();
  for (const auto& d : factors)
    if (d != 1) g.torsion.push_back(d);
  return g;
}

}  // namespace kspace
