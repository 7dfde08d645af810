#include "kspace/coset_enum.hpp"

#include "kspace/errors.hpp"

#include <cstdlib>
#include <string>

namespace kspace {

namespace {

constexpr long kNone = -1;

std::size_t column(int letter) {
  std::size_t g = static_cast<std::size_t>(std::abs(letter)) - 1;
  return 2 * g + (letter < 0 ? 1 : 0);
}

class Enumerator {
 public:
  Enumerator(std::size_t gens, std::size_t limit) : cols_(2 * gens), limit_(limit) {
    new_coset();
  }

  void scan_and_fill(long c, const Word& w) {
    if (w.empty()) return;
    long f = c, b = c;
    long i = 0, j = static_cast<long>(w.size()) - 1;
    for (;;) {
      while (i <= j && table_[f][column(w[i])] != kNone) {
        f = table_[f][column(w[i])];
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && table_[b][column(-w[j])] != kNone) {
        b = table_[b][column(-w[j])];
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        table_[f][column(w[i])] = b;
        table_[b][column(-w[i])] = f;
        return;
      }
      define(f, column(w[i]));
    }
  }

  void define(long c, std::size_t x) {
    long d = new_coset();
    table_[c][x] = d;
    table_[d][x ^ 1] = c;
  }

  bool live(long c) const { return parent_[c] == c; }
  std::size_t defined() const { return table_.size(); }
  std::size_t columns() const { return cols_; }
  long entry(long c, std::size_t x) const { return table_[c][x]; }

  CosetTable compact(std::size_t gens) const {
    std::vector<long> number(table_.size(), kNone);
    std::size_t n = 0;
    for (std::size_t c = 0; c < table_.size(); ++c)
      if (parent_[c] == static_cast<long>(c)) number[c] = static_cast<long>(n++);
    CosetTable t;
    t.generator_count = gens;
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (number[c] == kNone) continue;
      std::vector<std::size_t> row(cols_);
      for (std::size_t x = 0; x < cols_; ++x)
        row[x] = static_cast<std::size_t>(number[table_[c][x]]);
      t.rows.push_back(std::move(row));
    }
    return t;
  }

 private:
  long new_coset() {
    if (table_.size() >= limit_)
      throw IndexTooLarge("coset enumeration exceeded " + std::to_string(limit_) + " cosets");
    table_.emplace_back(cols_, kNone);
    parent_.push_back(static_cast<long>(parent_.size()));
    return static_cast<long>(table_.size()) - 1;
  }

  long rep(long c) {
    long r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      long next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(long a, long b, std::vector<long>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    queue.push_back(b);
  }

  void coincidence(long a, long b) {
    std::vector<long> queue;
    merge(a, b, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      long e = queue[q];
      for (std::size_t x = 0; x < cols_; ++x) {
        long f = table_[e][x];
        if (f == kNone) continue;
        table_[f][x ^ 1] = kNone;
        long e1 = rep(e), f1 = rep(f);
        if (table_[e1][x] != kNone)
          merge(f1, table_[e1][x], queue);
        else if (table_[f1][x ^ 1] != kNone)
          merge(e1, table_[f1][x ^ 1], queue);
        else {
          table_[e1][x] = f1;
          table_[f1][x ^ 1] = e1;
        }
      }
    }
  }

  std::size_t cols_;
  std::size_t limit_;
  std::vector<std::vector<long>> table_;
  std::vector<long> parent_;
};

}  // namespace

std::size_t CosetTable::act(std::size_t coset, int letter) const {
  return rows[coset][column(letter)];
}

std::size_t CosetTable::act(std::size_t coset, const Word& w) const {
  for (int x : w) coset = act(coset, x);
  return coset;
}

CosetTable todd_coxeter(const FpGroup& g, const std::vector<Word>& subgroup, std::size_t limit) {
  Enumerator en(g.rank(), limit);
  for (const auto& w : subgroup) en.scan_and_fill(0, w);
  for (std::size_t c = 0; c < en.defined(); ++c) {
    long cc = static_cast<long>(c);
    if (!en.live(cc)) continue;
    for (const auto& r : g.relators) {
      en.scan_and_fill(cc, r);
      if (!en.live(cc)) break;
    }
    if (!en.live(cc)) continue;
    for (std::size_t x = 0; x < en.columns(); ++x)
      if (en.entry(cc, x) == kNone) en.define(cc, x);
  }
  return en.compact(g.rank());
}

}  // namespace kspace
