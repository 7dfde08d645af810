#include "kspace/signed_perm.hpp"

#include "kspace/errors.hpp"

#include <cctype>
#include <numeric>
#include <optional>
#include <sstream>

namespace kspace {

SignedPerm::SignedPerm(std::size_t n) : image_(n), negated_(n, false) {
  std::iota(image_.begin(), image_.end(), std::size_t{0});
}

SignedPerm::SignedPerm(std::vector<std::size_t> image, std::vector<bool> negated)
    : image_(std::move(image)), negated_(std::move(negated)) {
  if (image_.size() != negated_.size()) throw SizeMismatch("signed permutation: sign vector length");
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t v : image_) {
    if (v >= image_.size() || seen[v]) throw Error("signed permutation: image is not a bijection");
    seen[v] = true;
  }
}

SignedPerm SignedPerm::cycle(std::size_t n, const std::vector<int>& letters, bool negative) {
  SignedPerm p(n);
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < letters.size(); ++i) {
    int a = letters[i];
    std::size_t idx = static_cast<std::size_t>(a < 0 ? -a : a);
    if (idx < 1 || idx > n) throw Error("signed cycle letter out of range");
    if (used[idx - 1]) throw Error("signed cycle repeats a letter");
    used[idx - 1] = true;
  }
  // e_i -> e_{i+1}, e_k -> +-e_1, extended by sigma(-x) = -sigma(x).
  for (std::size_t i = 0; i < letters.size(); ++i) {
    int from = letters[i];
    int to = i + 1 < letters.size() ? letters[i + 1] : (negative ? -letters[0] : letters[0]);
    if (from < 0) {
      from = -from;
      to = -to;
    }
    p.image_[from - 1] = static_cast<std::size_t>((to < 0 ? -to : to) - 1);
    p.negated_[from - 1] = to < 0;
  }
  return p;
}

int SignedPerm::apply(int letter) const {
  std::size_t i = static_cast<std::size_t>(letter < 0 ? -letter : letter) - 1;
  int out = static_cast<int>(image_[i]) + 1;
  if (negated_[i]) out = -out;
  return letter < 0 ? -out : out;
}

bool SignedPerm::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != i || negated_[i]) return false;
  return true;
}

bool SignedPerm::unsigned_is_involution() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[image_[i]] != i) return false;
  return true;
}

bool SignedPerm::is_unsigned() const {
  for (bool b : negated_)
    if (b) return false;
  return true;
}

std::string SignedPerm::to_string() const {
  if (image_.empty()) return "()";
  std::ostringstream os;
  std::vector<bool> done(image_.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < image_.size(); ++start) {
    if (done[start]) continue;
    if (image_[start] == start && !negated_[start]) {
      done[start] = true;
      continue;
    }
    any = true;
    os << "(";
    int cur = static_cast<int>(start) + 1;
    bool first = true;
    for (;;) {
      std::size_t idx = static_cast<std::size_t>(cur < 0 ? -cur : cur) - 1;
      done[idx] = true;
      if (!first) os << " ";
      os << cur;
      first = false;
      int next = apply(cur);
      std::size_t nidx = static_cast<std::size_t>(next < 0 ? -next : next) - 1;
      if (nidx == start) {
        if (next < 0) os << " -";
        break;
      }
      cur = next;
    }
    os << ")";
  }
  if (!any) return "(1)";
  return os.str();
}

SignedPerm sp_compose(const SignedPerm& a, const SignedPerm& b) {
  if (a.size() != b.size()) throw SizeMismatch("sp_compose: sizes differ");
  std::vector<std::size_t> image(a.size());
  std::vector<bool> neg(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::size_t mid = b.image(i);
    image[i] = a.image(mid);
    neg[i] = b.negated(i) != a.negated(mid);
  }
  return SignedPerm(std::move(image), std::move(neg));
}

SignedPerm sp_inverse(const SignedPerm& a) {
  std::vector<std::size_t> image(a.size());
  std::vector<bool> neg(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    image[a.image(i)] = i;
    neg[a.image(i)] = a.negated(i);
  }
  return SignedPerm(std::move(image), std::move(neg));
}

SignedPerm sp_power(const SignedPerm& a, long long k) {
  SignedPerm base = k < 0 ? sp_inverse(a) : a;
  unsigned long long e = static_cast<unsigned long long>(k < 0 ? -k : k);
  SignedPerm out(a.size());
  while (e) {
    if (e & 1) out = sp_compose(out, base);
    base = sp_compose(base, base);
    e >>= 1;
  }
  return out;
}

std::size_t sp_order(const SignedPerm& a) {
  SignedPerm p = a;
  std::size_t t = 1;
  while (!p.is_identity()) {
    p = sp_compose(p, a);
    ++t;
  }
  return t;
}

namespace {

class CycleScanner {
 public:
  explicit CycleScanner(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  [[noreturn]] void fail(const std::string& expected) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < s_.size(); ++i) {
      if (s_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SyntaxError(pos_, line, col, expected);
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("'") + c + "'");
    ++pos_;
  }

  // A signed integer directly followed by a digit, or a bare sign.
  std::optional<int> entry_or_sign(bool& closing_negative, bool& closed) {
    skip_ws();
    closed = false;
    if (pos_ >= s_.size()) fail("integer or ')'");
    char c = s_[pos_];
    if (c == '+' || c == '-') {
      std::size_t after = pos_ + 1;
      if (after < s_.size() && std::isdigit(static_cast<unsigned char>(s_[after]))) {
        ++pos_;
        int v = digits();
        return c == '-' ? -v : v;
      }
      ++pos_;
      closing_negative = c == '-';
      expect(')');
      closed = true;
      return std::nullopt;
    }
    if (c == ')') {
      ++pos_;
      closed = true;
      return std::nullopt;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) fail("integer");
    return digits();
  }

  std::size_t pos() const { return pos_; }

 private:
  int digits() {
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("digit");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1000000) fail("a smaller integer");
      ++pos_;
    }
    return static_cast<int>(v);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

SignedPerm parse_signed_cycles(std::string_view text, std::size_t n) {
  CycleScanner sc(text);
  SignedPerm result(n);
  bool any = false;
  std::vector<bool> used(n, false);
  while (!sc.at_end()) {
    sc.expect('(');
    std::vector<int> letters;
    bool negative = false;
    for (;;) {
      bool closed = false;
      auto e = sc.entry_or_sign(negative, closed);
      if (closed) break;
      int a = *e;
      std::size_t idx = static_cast<std::size_t>(a < 0 ? -a : a);
      if (idx < 1 || idx > n) sc.fail("letter in 1.." + std::to_string(n));
      if (used[idx - 1]) sc.fail("letters not already used");
      used[idx - 1] = true;
      letters.push_back(a);
    }
    if (letters.empty()) {
      if (n == 0 && !any) {
        any = true;
        continue;
      }
      sc.fail("at least one letter");
    }
    any = true;
    result = sp_compose(SignedPerm::cycle(n, letters, negative), result);
  }
  if (!any) sc.fail("'('");
  return result;
}

}  // namespace kspace
