#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace kspace {

// Element of the signed symmetric group on n letters: i -> sign(i) * image(i).
// Indices are 0-based internally; the text notation is 1-based.
class SignedPerm {
 public:
  SignedPerm() = default;
  explicit SignedPerm(std::size_t n);  // identity
  // image must be a bijection of {0..n-1}; negated[i] is the sign carried by
  // the image of i.
  SignedPerm(std::vector<std::size_t> image, std::vector<bool> negated);

  static SignedPerm identity(std::size_t n) { return SignedPerm(n); }
  // The signed cycle (a_1 ... a_k sign) on n letters; letters are 1-based.
  static SignedPerm cycle(std::size_t n, const std::vector<int>& letters, bool negative);

  std::size_t size() const { return image_.size(); }
  std::size_t image(std::size_t i) const { return image_[i]; }
  bool negated(std::size_t i) const { return negated_[i]; }
  // Signed image of the 1-based letter, as +-(1-based).
  int apply(int letter) const;

  bool is_identity() const;
  // True when forgetting signs leaves an involution.
  bool unsigned_is_involution() const;
  bool is_unsigned() const;

  // Signed-cycle text: disjoint cycles, each starting at its least
  // letter, trailing sign only when negative; identity prints as "(1)".
  std::string to_string() const;

  friend auto operator<=>(const SignedPerm&, const SignedPerm&) = default;
  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;

 private:
  std::vector<std::size_t> image_;
  std::vector<bool> negated_;
};

// (a * b)(x) = a(b(x)); sizes must agree (SizeMismatch otherwise).
SignedPerm sp_compose(const SignedPerm& a, const SignedPerm& b);
SignedPerm sp_inverse(const SignedPerm& a);
SignedPerm sp_power(const SignedPerm& a, long long k);
std::size_t sp_order(const SignedPerm& a);

// Parses juxtaposed signed cycles such as "(1 2 -)(3 -4)" on n letters.
// Entries may carry a sign ("-4"); a trailing "+"/"-" closes the cycle.
// Throws SyntaxError with the offset inside `text`.
SignedPerm parse_signed_cycles(std::string_view text, std::size_t n);

}  // namespace kspace
