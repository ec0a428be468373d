#include "shortcut/rational.hpp"

#include <charconv>
#include <cstdlib>

namespace shortcut {

RationalParam::RationalParam(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw InvalidParameter("rational with zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  const std::int64_t g = std::gcd(numerator < 0 ? -numerator : numerator, denominator);
  num_ = g == 0 ? 0 : numerator / g;
  den_ = g == 0 ? 1 : denominator / g;
}

RationalParam RationalParam::parse(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    std::int64_t value = 0;
    const auto* first = part.data();
    const auto* last = part.data() + part.size();
    if (!part.empty() && part.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last) {
      throw InvalidParameter("malformed rational '" + std::string(text) + "'");
    }
    return value;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return {parse_int(text), 1};
  return {parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};
}

RationalParam RationalParam::xi(std::int64_t numerator, std::int64_t denominator) {
  RationalParam r(numerator, denominator);
  if (!r.is_valid_xi()) throw InvalidParameter("xi must satisfy 0 < xi < 1, got " + r.to_string());
  return r;
}

RationalParam RationalParam::k(std::int64_t numerator, std::int64_t denominator) {
  RationalParam r(numerator, denominator);
  if (!r.is_valid_k()) throw InvalidParameter("K must satisfy K >= 1, got " + r.to_string());
  return r;
}

std::string RationalParam::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace shortcut
