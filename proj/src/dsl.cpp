#include "kspace/dsl.hpp"

#include "kspace/catalog.hpp"
#include "kspace/errors.hpp"

#include <cctype>
#include <sstream>

namespace kspace {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  KnotTree document() {
    KnotTree t = knot();
    skip_ws();
    if (pos_ < s_.size()) fail("end of input");
    return t;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& expected, std::size_t at) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < s_.size(); ++i) {
      if (s_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SyntaxError(at, line, col, expected);
  }
  [[noreturn]] void fail(const std::string& expected) {
    skip_ws();
    fail(expected, pos_);
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("'") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  static bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string name() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && name_char(s_[pos_])) ++pos_;
    if (start == pos_) fail("name");
    return std::string(s_.substr(start, pos_ - start));
  }

  void keyword(std::string_view kw) {
    std::size_t at = (skip_ws(), pos_);
    if (name() != kw) fail(std::string(kw), at);
  }

  long long integer() {
    skip_ws();
    std::size_t start = pos_;
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    std::size_t digits = pos_;
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (v > 100000000000000000LL) fail("integer of reasonable size", start);
      v = v * 10 + (s_[pos_] - '0');
      ++pos_;
    }
    if (digits == pos_) fail("integer", start);
    return neg ? -v : v;
  }

  bool boolean() {
    std::size_t at = (skip_ws(), pos_);
    std::string w = name();
    if (w == "true") return true;
    if (w == "false") return false;
    fail("true or false", at);
  }

  // Consecutive parenthesized groups, handed to the signed-cycle parser.
  SignedPerm cycles(std::size_t n) {
    skip_ws();
    std::size_t start = pos_;
    if (peek() != '(') fail("'('");
    while (peek() == '(') {
      while (pos_ < s_.size() && s_[pos_] != ')') ++pos_;
      if (pos_ >= s_.size()) fail("')'");
      ++pos_;
    }
    try {
      return parse_signed_cycles(s_.substr(start, pos_ - start), n);
    } catch (const SyntaxError& e) {
      fail(e.expected(), start + e.offset());
    }
  }

  KglDatum kgl_inline() {
    expect('(');
    KglDatum k;
    k.name = name();
    expect(';');
    keyword("n");
    expect('=');
    long long n = integer();
    if (n < 0) fail("non-negative n");
    k.n = static_cast<std::size_t>(n);
    expect(';');
    keyword("B");
    expect('=');
    k.b_order = integer();
    expect(';');
    keyword("rho");
    expect('=');
    k.rho_gen = cycles(k.n);
    if (accept(';')) {
      keyword("inv");
      expect('=');
      k.inversion = cycles(k.n);
    }
    expect(')');
    auto problems = kgl_violations(k);
    if (!problems.empty()) throw SemanticError("KGL " + k.name + ": " + problems.front());
    return k;
  }

  KglDatum kglref() {
    std::string n = name();
    if (n == "kgl" && peek() == '(') return kgl_inline();
    if (const KglDatum* k = catalog_find_kgl(n)) return *k;
    throw UnknownName(n);
  }

  KnotTree knot() {
    std::size_t at = (skip_ws(), pos_);
    std::string head = name();
    if (head == "unknot") return KnotTree(Unknot{});
    if (head == "torus") {
      expect('(');
      Torus t;
      t.p = integer();
      expect(',');
      t.q = integer();
      expect(')');
      return t;
    }
    if (head == "hyp") {
      expect('(');
      HypKnot h;
      h.name = name();
      expect(';');
      keyword("invertible");
      expect('=');
      h.invertible = boolean();
      if (accept(';')) {
        keyword("orientation");
        expect('=');
        if (accept('-'))
          h.orientation = Orientation::Minus;
        else if (accept('+'))
          h.orientation = Orientation::Plus;
        else
          fail("'+' or '-'");
      }
      expect(')');
      return h;
    }
    if (head == "cable") {
      expect('(');
      long long p = integer();
      expect(',');
      long long q = integer();
      expect(';');
      KnotTree c = knot();
      expect(')');
      return Cable{p, q, c};
    }
    if (head == "sum") {
      expect('(');
      Sum s;
      s.summands.push_back(knot());
      while (accept(',')) s.summands.push_back(knot());
      expect(')');
      return s;
    }
    if (head == "splice") {
      expect('(');
      HypSplice s;
      s.kgl = kglref();
      expect(';');
      s.children.push_back(knot());
      for (;;) {
        if (accept(',')) {
          s.children.push_back(knot());
          continue;
        }
        if (accept(';')) {
          keyword("inverted");
          s.inverted = true;
        }
        break;
      }
      expect(')');
      return s;
    }
    if (const KnotTree* k = catalog_find_knot(head)) return *k;
    fail("knot", at);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

void print(std::ostream& os, const KnotTree& t);

void print_kgl(std::ostream& os, const KglDatum& k) {
  const KglDatum* known = catalog_find_kgl(k.name);
  if (known && *known == k) {
    os << k.name;
    return;
  }
  os << "kgl(" << k.name << "; n=" << k.n << "; B=" << k.b_order << "; rho=" << k.rho_gen.to_string();
  if (k.inversion) os << "; inv=" << k.inversion->to_string();
  os << ")";
}

void print(std::ostream& os, const KnotTree& t) {
  switch (t.kind()) {
    case KnotTree::Kind::Unknot:
      os << "unknot";
      return;
    case KnotTree::Kind::Torus:
      os << "torus(" << t.torus().p << "," << t.torus().q << ")";
      return;
    case KnotTree::Kind::HypKnot: {
      const auto& h = t.hyp();
      os << "hyp(" << h.name << "; invertible=" << (h.invertible ? "true" : "false");
      if (h.orientation == Orientation::Minus) os << "; orientation=-";
      os << ")";
      return;
    }
    case KnotTree::Kind::Cable:
      os << "cable(" << t.cable().p << "," << t.cable().q << "; ";
      print(os, t.cable().companion);
      os << ")";
      return;
    case KnotTree::Kind::Sum: {
      os << "sum(";
      const auto& xs = t.sum().summands;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) os << ", ";
        print(os, xs[i]);
      }
      os << ")";
      return;
    }
    case KnotTree::Kind::HypSplice: {
      const auto& s = t.splice();
      os << "splice(";
      print_kgl(os, s.kgl);
      os << "; ";
      for (std::size_t i = 0; i < s.children.size(); ++i) {
        if (i) os << ", ";
        print(os, s.children[i]);
      }
      if (s.inverted) os << "; inverted";
      os << ")";
      return;
    }
  }
}

}  // namespace

KnotTree parse_knot(std::string_view src) {
  KnotTree t = Parser(src).document();
  for (const auto& v : validate(t))
    if (!v.flattening) throw SemanticError(v.path + ": " + v.message);
  return t;
}

std::string print_knot(const KnotTree& tree) {
  std::ostringstream os;
  print(os, tree);
  return os.str();
}

}  // namespace kspace
