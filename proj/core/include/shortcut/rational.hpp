#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "shortcut/errors.hpp"

namespace shortcut {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Used for the almost-isometry ratio xi and the bilipschitz constant K.
/// All comparisons that involve a RationalParam are carried out by integer
/// cross-multiplication.
class RationalParam {
 public:
  constexpr RationalParam() = default;
  RationalParam(std::int64_t numerator, std::int64_t denominator);

  static RationalParam parse(std::string_view text);

  // Validating factories: xi must lie strictly between 0 and 1, K must be
  // at least 1.
  static RationalParam xi(std::int64_t numerator, std::int64_t denominator);
  static RationalParam k(std::int64_t numerator, std::int64_t denominator);

  constexpr std::int64_t num() const noexcept { return num_; }
  constexpr std::int64_t den() const noexcept { return den_; }

  bool is_valid_xi() const noexcept { return num_ > 0 && num_ < den_; }
  bool is_valid_k() const noexcept { return num_ >= den_; }

  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  std::string to_string() const;

  friend bool operator==(const RationalParam&, const RationalParam&) = default;
  friend std::strong_ordering operator<=>(const RationalParam& a, const RationalParam& b) {
    __extension__ using wide = __int128;
    return static_cast<wide>(a.num_) * b.den_ <=> static_cast<wide>(b.num_) * a.den_;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace shortcut
