#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "shortcut/errors.hpp"

namespace shortcut {

using BigInt = boost::multiprecision::cpp_int;

/// Element of BS(1,2) = <a, t | t a t^-1 = a^2> in dyadic coordinates
/// (r, z) with r = r_num / 2^r_exp. The product is
/// (r, z)(r', z') = (r + 2^z r', z + z').
///
/// Canonical form: r_num odd, or r_num = 0 with r_exp = 0. r_exp may be
/// negative when r is an even integer.
class BS12Element {
 public:
  BS12Element() = default;

  static BS12Element from_dyadic(BigInt num, std::int64_t exp, std::int64_t z);
  static BS12Element a() { return from_dyadic(1, 0, 0); }
  static BS12Element t() { return from_dyadic(0, 0, 1); }
  static BS12Element tau() { return from_dyadic(0, 0, 2); }

  const BigInt& r_num() const noexcept { return num_; }
  std::int64_t r_exp() const noexcept { return exp_; }
  // Height mu: the t-exponent sum.
  std::int64_t z() const noexcept { return z_; }

  bool is_identity() const noexcept { return num_ == 0 && z_ == 0; }
  bool r_is_zero() const noexcept { return num_ == 0; }
  // r is an integer iff the reduced denominator is 1.
  bool r_is_integer() const noexcept { return exp_ <= 0; }
  // r as an integer; requires r_is_integer().
  BigInt r_integer() const;

  BS12Element inverse() const;
  friend BS12Element operator*(const BS12Element& x, const BS12Element& y);

  friend bool operator==(const BS12Element&, const BS12Element&) = default;
  // Total order by (z, r); only used for deterministic sorting.
  friend std::strong_ordering operator<=>(const BS12Element& x, const BS12Element& y);

  // "(r, z)" with r written as an integer or as num/2^exp.
  std::string to_string() const;
  std::size_t hash() const noexcept;

 private:
  BigInt num_ = 0;
  std::int64_t exp_ = 0;
  std::int64_t z_ = 0;
};

struct BS12Hash {
  std::size_t operator()(const BS12Element& x) const noexcept { return x.hash(); }
};

BS12Element power(const BS12Element& x, std::int64_t n);

enum class Letter : std::uint8_t { a, a_inv, t, t_inv, tau, tau_inv };
using Word = std::vector<Letter>;

Letter inverse(Letter l) noexcept;
Word inverse(const Word& w);
BS12Element letter_element(Letter l);
// Change of height caused by the letter.
int letter_height(Letter l) noexcept;

/// Parses words such as "t a t^-1", "tat⁻¹", "a^3 T tau^{-2}" or "aTA".
/// Upper-case A, T and TAU denote inverses; "1" and the empty string are
/// the identity. Throws ParseError with the offending column.
Word parse_word(std::string_view text);
// Space-separated syllables with ASCII powers, e.g. "t a^-2 tau".
std::string format_word(const Word& w);
BS12Element evaluate(const Word& w);

/// t^m a^k t^n with k even only if k = m = 0.
struct NormalForm {
  std::int64_t m = 0;
  BigInt k = 0;
  std::int64_t n = 0;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

NormalForm normal_form(const BS12Element& x);
inline NormalForm normal_form(const Word& w) { return normal_form(evaluate(w)); }
// Throws InvalidParameter unless the triple satisfies the parity condition.
BS12Element from_normal_form(const NormalForm& nf);
// Spelled-out word t^m a^k t^n; throws TooLarge when |k| exceeds 2^20.
Word word_of(const NormalForm& nf);
std::string to_string(const NormalForm& nf);

}  // namespace shortcut
