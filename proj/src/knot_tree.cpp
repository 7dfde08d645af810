#include "kspace/knot_tree.hpp"

#include "kspace/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>

namespace kspace {

struct KnotTree::Node {
  std::variant<Unknot, Torus, HypKnot, Cable, Sum, HypSplice> value;
};

const std::shared_ptr<const KnotTree::Node>& KnotTree::unknot_node() {
  static const auto node = std::make_shared<const Node>(Node{Unknot{}});
  return node;
}

KnotTree::KnotTree() : node_(unknot_node()) {}
KnotTree::KnotTree(Unknot) : node_(unknot_node()) {}
KnotTree::KnotTree(Torus t) : node_(std::make_shared<const Node>(Node{t})) {}
KnotTree::KnotTree(HypKnot h) : node_(std::make_shared<const Node>(Node{std::move(h)})) {}
KnotTree::KnotTree(Cable c) : node_(std::make_shared<const Node>(Node{std::move(c)})) {}
KnotTree::KnotTree(Sum s) : node_(std::make_shared<const Node>(Node{std::move(s)})) {}
KnotTree::KnotTree(HypSplice s) : node_(std::make_shared<const Node>(Node{std::move(s)})) {}

KnotTree::Kind KnotTree::kind() const { return static_cast<Kind>(node_->value.index()); }

const Torus& KnotTree::torus() const { return std::get<Torus>(node_->value); }
const HypKnot& KnotTree::hyp() const { return std::get<HypKnot>(node_->value); }
const Cable& KnotTree::cable() const { return std::get<Cable>(node_->value); }
const Sum& KnotTree::sum() const { return std::get<Sum>(node_->value); }
const HypSplice& KnotTree::splice() const { return std::get<HypSplice>(node_->value); }

std::strong_ordering operator<=>(const KnotTree& a, const KnotTree& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.node_->value.index() <=> b.node_->value.index(); c != 0) return c;
  return std::visit(
      [&](const auto& x) -> std::strong_ordering {
        using T = std::decay_t<decltype(x)>;
        return x <=> std::get<T>(b.node_->value);
      },
      a.node_->value);
}

namespace {

template <class T>
std::strong_ordering lex(const std::vector<T>& a, const std::vector<T>& b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

std::strong_ordering operator<=>(const Cable& a, const Cable& b) {
  if (auto c = a.p <=> b.p; c != 0) return c;
  if (auto c = a.q <=> b.q; c != 0) return c;
  return a.companion <=> b.companion;
}

std::strong_ordering operator<=>(const Sum& a, const Sum& b) { return lex(a.summands, b.summands); }

std::strong_ordering operator<=>(const HypSplice& a, const HypSplice& b) {
  if (auto c = a.kgl <=> b.kgl; c != 0) return c;
  if (auto c = a.inverted <=> b.inverted; c != 0) return c;
  return lex(a.children, b.children);
}

std::vector<std::string> kgl_violations(const KglDatum& kgl) {
  std::vector<std::string> out;
  if (kgl.b_order < 1) out.push_back("B_L order must be positive");
  if (kgl.rho_gen.size() != kgl.n) {
    out.push_back("rho acts on " + std::to_string(kgl.rho_gen.size()) + " letters, expected n=" +
                  std::to_string(kgl.n));
    return out;
  }
  if (kgl.b_order >= 1) {
    auto ord = static_cast<long long>(sp_order(kgl.rho_gen));
    if (kgl.b_order % ord != 0)
      out.push_back("order of rho (" + std::to_string(ord) + ") does not divide |B_L|=" +
                    std::to_string(kgl.b_order));
  }
  if (kgl.inversion) {
    const SignedPerm& iota = *kgl.inversion;
    if (iota.size() != kgl.n) {
      out.push_back("inversion datum has the wrong number of letters");
    } else {
      if (!iota.unsigned_is_involution())
        out.push_back("inversion datum is not an involution after forgetting signs");
      else if (!sp_compose(iota, iota).is_identity())
        out.push_back("inversion datum must square to the identity");
      // Reversing L0 conjugates the cyclic symmetry to its inverse.
      if (sp_compose(sp_compose(iota, kgl.rho_gen), sp_inverse(iota)) != sp_inverse(kgl.rho_gen))
        out.push_back("inversion datum must conjugate rho to its inverse");
    }
  }
  return out;
}

namespace {

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

long long gcd_abs(long long a, long long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

void validate_into(const KnotTree& t, const std::string& path, ValidationReport& out) {
  switch (t.kind()) {
    case KnotTree::Kind::Unknot:
      break;
    case KnotTree::Kind::Torus: {
      const auto& k = t.torus();
      if (gcd_abs(k.p, k.q) != 1) out.push_back({path, "torus parameters are not coprime", false});
      if (std::abs(k.p) < 2 || std::abs(k.q) < 2)
        out.push_back({path, "torus knot needs |p| >= 2 and |q| >= 2", false});
      break;
    }
    case KnotTree::Kind::HypKnot:
      if (!valid_name(t.hyp().name)) out.push_back({path, "hyperbolic knot name must be alphanumeric", false});
      break;
    case KnotTree::Kind::Cable: {
      const auto& c = t.cable();
      if (gcd_abs(c.p, c.q) != 1) out.push_back({path, "cable parameters are not coprime", false});
      if (std::abs(c.p) < 2) out.push_back({path, "cable winding number needs |p| >= 2", false});
      if (c.companion.is_unknot()) {
        bool torus_ok = std::abs(c.q) >= 2 && gcd_abs(c.p, c.q) == 1;
        out.push_back({path, "cable of the unknot (a torus knot)", torus_ok});
      }
      validate_into(c.companion, path + ".companion", out);
      break;
    }
    case KnotTree::Kind::Sum: {
      const auto& s = t.sum();
      std::size_t flat = 0;
      for (std::size_t i = 0; i < s.summands.size(); ++i) {
        const auto& c = s.summands[i];
        std::string p = path + ".summands[" + std::to_string(i) + "]";
        if (c.is_unknot()) out.push_back({p, "Unknot summand", false});
        if (c.kind() == KnotTree::Kind::Sum) {
          out.push_back({p, "nested connect-sum", true});
          flat += c.sum().summands.size();
        } else {
          ++flat;
        }
        validate_into(c, p, out);
      }
      if (flat < 2) out.push_back({path, "connect-sum needs at least 2 summands", false});
      break;
    }
    case KnotTree::Kind::HypSplice: {
      const auto& s = t.splice();
      for (const auto& msg : kgl_violations(s.kgl)) out.push_back({path, "KGL " + s.kgl.name + ": " + msg, false});
      if (!valid_name(s.kgl.name)) out.push_back({path, "KGL name must be alphanumeric", false});
      if (s.kgl.n == 0) out.push_back({path, "splice needs a KGL with n >= 1", false});
      if (s.children.size() != s.kgl.n)
        out.push_back({path, "children length " + std::to_string(s.children.size()) +
                                 " != n=" + std::to_string(s.kgl.n), false});
      if (s.inverted && s.kgl.inversion)
        out.push_back({path, "formal inverse marker on a KGL with an inversion datum", false});
      for (std::size_t i = 0; i < s.children.size(); ++i) {
        std::string p = path + ".children[" + std::to_string(i) + "]";
        if (s.children[i].is_unknot()) out.push_back({p, "Unknot companion", false});
        validate_into(s.children[i], p, out);
      }
      break;
    }
  }
}

KnotTree normalize_rec(const KnotTree& t) {
  switch (t.kind()) {
    case KnotTree::Kind::Cable: {
      const auto& c = t.cable();
      KnotTree comp = normalize_rec(c.companion);
      if (comp.is_unknot()) return Torus{c.p, c.q};
      return Cable{c.p, c.q, comp};
    }
    case KnotTree::Kind::Sum: {
      std::vector<KnotTree> flat;
      for (const auto& s : t.sum().summands) {
        KnotTree n = normalize_rec(s);
        if (n.kind() == KnotTree::Kind::Sum)
          for (const auto& inner : n.sum().summands) flat.push_back(inner);
        else
          flat.push_back(n);
      }
      return Sum{std::move(flat)};
    }
    case KnotTree::Kind::HypSplice: {
      HypSplice s = t.splice();
      for (auto& c : s.children) c = normalize_rec(c);
      return s;
    }
    default:
      return t;
  }
}

}  // namespace

ValidationReport validate(const KnotTree& tree) {
  ValidationReport out;
  validate_into(tree, "$", out);
  return out;
}

bool is_valid(const KnotTree& tree) { return validate(tree).empty(); }

KnotTree normalize(const KnotTree& tree) {
  ValidationReport before = validate(tree);
  for (const auto& v : before)
    if (!v.flattening) throw InvalidTree(v.path + ": " + v.message);
  if (before.empty()) return tree;
  KnotTree out = normalize_rec(tree);
  ValidationReport after = validate(out);
  if (!after.empty()) throw InvalidTree(after.front().path + ": " + after.front().message);
  return out;
}

std::size_t tree_size(const KnotTree& t) {
  switch (t.kind()) {
    case KnotTree::Kind::Cable:
      return 1 + tree_size(t.cable().companion);
    case KnotTree::Kind::Sum: {
      std::size_t n = 1;
      for (const auto& s : t.sum().summands) n += tree_size(s);
      return n;
    }
    case KnotTree::Kind::HypSplice: {
      std::size_t n = 1;
      for (const auto& s : t.splice().children) n += tree_size(s);
      return n;
    }
    default:
      return 1;
  }
}

std::size_t tree_depth(const KnotTree& t) {
  std::size_t d = 0;
  switch (t.kind()) {
    case KnotTree::Kind::Cable:
      d = tree_depth(t.cable().companion);
      break;
    case KnotTree::Kind::Sum:
      for (const auto& s : t.sum().summands) d = std::max(d, tree_depth(s));
      break;
    case KnotTree::Kind::HypSplice:
      for (const auto& s : t.splice().children) d = std::max(d, tree_depth(s));
      break;
    default:
      return 1;
  }
  return d + 1;
}

}  // namespace kspace
