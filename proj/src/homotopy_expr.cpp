#include "kspace/homotopy_expr.hpp"

#include "kspace/errors.hpp"
#include "kspace/symmetry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace kspace {

const char* role_name(CircleRole r) {
  switch (r) {
    case CircleRole::Meridian: return "meridian";
    case CircleRole::Cabling: return "cabling";
    case CircleRole::BaseL0: return "base_L0";
    case CircleRole::Plain: return "plain";
  }
  return "plain";
}

MonodromyDatum::MonodromyDatum(SignedPerm p) : sp(std::move(p)) {
  per_slot_inverted.resize(sp.size());
  for (std::size_t i = 0; i < sp.size(); ++i) per_slot_inverted[i] = sp.negated(i);
}

HomotopyExpr HomotopyExpr::point() { return HomotopyExpr(); }

HomotopyExpr HomotopyExpr::circle(CircleRole role) {
  HomotopyExpr e;
  e.kind_ = Kind::Circle;
  e.role_ = role;
  return e;
}

HomotopyExpr HomotopyExpr::product(std::vector<HomotopyExpr> factors) {
  HomotopyExpr e;
  e.kind_ = Kind::Product;
  e.children_ = std::move(factors);
  return e;
}

HomotopyExpr HomotopyExpr::config(std::vector<std::size_t> young, std::vector<HomotopyExpr> factors) {
  if (young.size() != factors.size()) throw SizeMismatch("config: partition and factor counts differ");
  std::map<std::size_t, std::size_t> relabel;
  for (auto& b : young) {
    auto it = relabel.try_emplace(b, relabel.size()).first;
    b = it->second;
  }
  for (std::size_t i = 0; i < young.size(); ++i)
    for (std::size_t j = i + 1; j < young.size(); ++j)
      if (young[i] == young[j] && !(factors[i] == factors[j]))
        throw Error("config: factors in one Young block must be equal");
  HomotopyExpr e;
  e.kind_ = Kind::Config2ModYoung;
  e.young_ = std::move(young);
  e.children_ = std::move(factors);
  return e;
}

HomotopyExpr HomotopyExpr::twisted(long long group_order, MonodromyDatum monodromy,
                                   std::vector<HomotopyExpr> fibers) {
  if (group_order < 1) throw Error("twisted product: group order must be positive");
  if (monodromy.sp.size() != fibers.size()) throw SizeMismatch("twisted product: monodromy size");
  if (group_order % static_cast<long long>(sp_order(monodromy.sp)) != 0)
    throw Error("twisted product: monodromy order does not divide the group order");
  HomotopyExpr e;
  e.kind_ = Kind::TwistedProduct;
  e.group_order_ = group_order;
  e.monodromy_ = std::move(monodromy);
  e.children_ = std::move(fibers);
  return e;
}

std::size_t HomotopyExpr::block_count() const {
  std::size_t n = 0;
  for (auto b : young_) n = std::max(n, b + 1);
  return n;
}

namespace {

HomotopyExpr build(const KnotTree& t) {
  using E = HomotopyExpr;
  switch (t.kind()) {
    case KnotTree::Kind::Unknot:
      return E::point();
    case KnotTree::Kind::Torus:
      return E::circle(CircleRole::Cabling);
    case KnotTree::Kind::HypKnot:
      return E::product({E::circle(CircleRole::Meridian), E::circle(CircleRole::BaseL0)});
    case KnotTree::Kind::Cable:
      return E::product({E::circle(CircleRole::Cabling), build(t.cable().companion)});
    case KnotTree::Kind::Sum: {
      const auto& xs = t.sum().summands;
      std::vector<std::size_t> young(xs.size());
      std::vector<E> factors;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        young[i] = i;
        for (std::size_t j = 0; j < i; ++j)
          if (xs[j] == xs[i]) {
            young[i] = young[j];
            break;
          }
        factors.push_back(build(xs[i]));
      }
      return E::config(std::move(young), std::move(factors));
    }
    case KnotTree::Kind::HypSplice: {
      const auto& s = t.splice();
      CyclicSubgroup af = compute_Af(s.kgl, s.children);
      std::vector<E> fibers;
      for (const auto& c : s.children) fibers.push_back(build(c));
      return E::product({E::circle(CircleRole::Meridian),
                         E::twisted(af.order(), MonodromyDatum(af.generator_image()), std::move(fibers))});
    }
  }
  return E::point();
}

}  // namespace

HomotopyExpr homotopy_type(const KnotTree& tree) { return build(canonical_form(normalize(tree))); }

HomotopyExpr simplify(const HomotopyExpr& e) {
  using E = HomotopyExpr;
  switch (e.kind()) {
    case E::Kind::Point:
    case E::Kind::Circle:
      return e;
    case E::Kind::Product: {
      std::vector<E> flat;
      for (const auto& c : e.children()) {
        E s = simplify(c);
        if (s.kind() == E::Kind::Point) continue;
        if (s.kind() == E::Kind::Product)
          for (const auto& inner : s.children()) flat.push_back(inner);
        else
          flat.push_back(std::move(s));
      }
      if (flat.empty()) return E::point();
      if (flat.size() == 1) return flat.front();
      return E::product(std::move(flat));
    }
    case E::Kind::Config2ModYoung: {
      std::vector<E> factors;
      for (const auto& c : e.children()) factors.push_back(simplify(c));
      return E::config(e.young(), std::move(factors));
    }
    case E::Kind::TwistedProduct: {
      std::vector<E> fibers;
      bool all_points = true;
      for (const auto& c : e.children()) {
        fibers.push_back(simplify(c));
        if (fibers.back().kind() != E::Kind::Point) all_points = false;
      }
      if (all_points) return E::circle(CircleRole::BaseL0);
      if (e.group_order() == 1) {
        fibers.push_back(E::circle(CircleRole::BaseL0));
        return simplify(E::product(std::move(fibers)));
      }
      return E::twisted(e.group_order(), e.monodromy(), std::move(fibers));
    }
  }
  return e;
}

std::optional<std::size_t> dimension(const HomotopyExpr& e) {
  using E = HomotopyExpr;
  switch (e.kind()) {
    case E::Kind::Point:
      return 0;
    case E::Kind::Circle:
      return 1;
    case E::Kind::Config2ModYoung:
      return std::nullopt;
    case E::Kind::Product:
    case E::Kind::TwistedProduct: {
      std::size_t d = e.kind() == E::Kind::TwistedProduct ? 1 : 0;
      for (const auto& c : e.children()) {
        auto cd = dimension(c);
        if (!cd) return std::nullopt;
        d += *cd;
      }
      return d;
    }
  }
  return std::nullopt;
}

std::size_t circle_count(const HomotopyExpr& e) {
  if (e.kind() == HomotopyExpr::Kind::Circle) return 1;
  std::size_t n = e.kind() == HomotopyExpr::Kind::TwistedProduct ? 1 : 0;
  for (const auto& c : e.children()) n += circle_count(c);
  return n;
}

namespace {

bool all_circles(const std::vector<HomotopyExpr>& xs) {
  return !xs.empty() && std::all_of(xs.begin(), xs.end(), [](const HomotopyExpr& x) {
           return x.kind() == HomotopyExpr::Kind::Circle;
         });
}

std::string circles(std::size_t k) { return k == 1 ? "S^1" : "(S^1)^" + std::to_string(k); }

bool composite(const HomotopyExpr& e) {
  switch (e.kind()) {
    case HomotopyExpr::Kind::Point:
    case HomotopyExpr::Kind::Circle:
      return false;
    case HomotopyExpr::Kind::Product:
      return !all_circles(e.children());
    default:
      return true;
  }
}

std::string render_factor_list(const std::vector<HomotopyExpr>& xs) {
  if (all_circles(xs)) return circles(xs.size());
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += " x ";
    std::string r = expr_render(xs[i]);
    out += composite(xs[i]) ? "(" + r + ")" : r;
  }
  return out;
}

std::string young_label(const HomotopyExpr& e) {
  std::vector<std::size_t> sizes(e.block_count(), 0);
  for (auto b : e.young()) ++sizes[b];
  std::string out;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i) out += "x";
    out += "S" + std::to_string(sizes[i]);
  }
  return out;
}

}  // namespace

std::string expr_render(const HomotopyExpr& e) {
  using E = HomotopyExpr;
  switch (e.kind()) {
    case E::Kind::Point:
      return "*";
    case E::Kind::Circle:
      return "S^1";
    case E::Kind::Product: {
      const auto& xs = e.children();
      if (xs.empty()) return "*";
      if (all_circles(xs)) return circles(xs.size());
      std::string out;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += " x ";
        std::string r = expr_render(xs[i]);
        bool wrap = xs[i].kind() == E::Kind::Product ||
                    (composite(xs[i]) && i + 1 < xs.size());
        out += wrap ? "(" + r + ")" : r;
      }
      return out;
    }
    case E::Kind::Config2ModYoung:
      return "C2(" + std::to_string(e.children().size()) + ") x_{" + young_label(e) + "} " +
             render_factor_list(e.children());
    case E::Kind::TwistedProduct:
      return "(" + render_factor_list(e.children()) + ") x_{Z" + std::to_string(e.group_order()) +
             "} S^1";
  }
  return "?";
}

bool same_shape(const HomotopyExpr& a, const HomotopyExpr& b) {
  if (a.kind() != b.kind()) return false;
  if (a.children().size() != b.children().size()) return false;
  if (a.kind() == HomotopyExpr::Kind::TwistedProduct &&
      (a.group_order() != b.group_order() || !(a.monodromy() == b.monodromy())))
    return false;
  if (a.kind() == HomotopyExpr::Kind::Config2ModYoung && a.young() != b.young()) return false;
  for (std::size_t i = 0; i < a.children().size(); ++i)
    if (!same_shape(a.children()[i], b.children()[i])) return false;
  return true;
}

namespace {

// Enumerates bijections pi with ok(i, pi[i]) for all i; stops when visit
// returns true.
bool for_each_matching(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& ok,
                       const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> pi(n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == n) return visit(pi);
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || !ok(i, j)) continue;
      used[j] = true;
      pi[i] = j;
      if (rec(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return rec(0);
}

}  // namespace

bool equivalent(const HomotopyExpr& a, const HomotopyExpr& b) {
  using E = HomotopyExpr;
  if (a.kind() != b.kind()) return false;
  const auto& xs = a.children();
  const auto& ys = b.children();
  if (xs.size() != ys.size()) return false;
  const std::size_t n = xs.size();
  std::vector<std::vector<char>> eq(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) eq[i][j] = equivalent(xs[i], ys[j]);
  auto match = [&](std::size_t i, std::size_t j) { return eq[i][j] != 0; };
  switch (a.kind()) {
    case E::Kind::Point:
    case E::Kind::Circle:
      return true;
    case E::Kind::Product:
      return for_each_matching(n, match, [](const auto&) { return true; });
    case E::Kind::Config2ModYoung:
      return for_each_matching(n, match, [&](const std::vector<std::size_t>& pi) {
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            if ((a.young()[i] == a.young()[j]) != (b.young()[pi[i]] == b.young()[pi[j]])) return false;
        return true;
      });
    case E::Kind::TwistedProduct: {
      if (a.group_order() != b.group_order()) return false;
      const SignedPerm& m = a.monodromy().sp;
      const SignedPerm& target = b.monodromy().sp;
      const SignedPerm target_inv = sp_inverse(target);
      return for_each_matching(n, match, [&](const std::vector<std::size_t>& pi) {
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
          std::vector<bool> neg(n);
          for (std::size_t i = 0; i < n; ++i) neg[i] = (mask >> i) & 1;
          SignedPerm delta(pi, neg);
          SignedPerm conj = sp_compose(sp_compose(delta, m), sp_inverse(delta));
          if (conj == target || conj == target_inv) return true;
        }
        return false;
      });
    }
  }
  return false;
}

}  // namespace kspace
