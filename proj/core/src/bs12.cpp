#include "shortcut/bs12.hpp"

#include <algorithm>
#include <boost/container_hash/hash.hpp>
#include <charconv>

namespace shortcut {

namespace mp = boost::multiprecision;

BS12Element BS12Element::from_dyadic(BigInt num, std::int64_t exp, std::int64_t z) {
  BS12Element x;
  x.z_ = z;
  if (num == 0) return x;
  const auto shift = mp::lsb(mp::abs(num));
  num >>= shift;
  x.num_ = std::move(num);
  x.exp_ = exp - static_cast<std::int64_t>(shift);
  return x;
}

BigInt BS12Element::r_integer() const {
  if (!r_is_integer()) throw InvalidParameter("r is not an integer");
  return num_ << static_cast<unsigned>(-exp_);
}

BS12Element BS12Element::inverse() const {
  if (num_ == 0) return from_dyadic(0, 0, -z_);
  return from_dyadic(-num_, exp_ + z_, -z_);
}

BS12Element operator*(const BS12Element& x, const BS12Element& y) {
  const std::int64_t z = x.z_ + y.z_;
  if (y.num_ == 0) return BS12Element::from_dyadic(x.num_, x.exp_, z);
  // 2^{z_x} * r_y has exponent exp_y - z_x.
  const std::int64_t ey = y.exp_ - x.z_;
  if (x.num_ == 0) return BS12Element::from_dyadic(y.num_, ey, z);
  const std::int64_t e = std::max(x.exp_, ey);
  BigInt sum = (x.num_ << static_cast<unsigned>(e - x.exp_)) + (y.num_ << static_cast<unsigned>(e - ey));
  return BS12Element::from_dyadic(std::move(sum), e, z);
}

std::strong_ordering operator<=>(const BS12Element& x, const BS12Element& y) {
  if (auto c = x.z_ <=> y.z_; c != 0) return c;
  const std::int64_t ex = x.num_ == 0 ? 0 : x.exp_;
  const std::int64_t ey = y.num_ == 0 ? 0 : y.exp_;
  const std::int64_t e = std::max(ex, ey);
  const BigInt lhs = x.num_ << static_cast<unsigned>(e - ex);
  const BigInt rhs = y.num_ << static_cast<unsigned>(e - ey);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string BS12Element::to_string() const {
  std::string r;
  if (r_is_integer()) {
    r = r_integer().str();
  } else {
    r = num_.str() + "/" + (BigInt(1) << static_cast<unsigned>(exp_)).str();
  }
  return "(" + r + ", " + std::to_string(z_) + ")";
}

std::size_t BS12Element::hash() const noexcept {
  std::size_t h = boost::hash<BigInt>{}(num_);
  boost::hash_combine(h, exp_);
  boost::hash_combine(h, z_);
  return h;
}

BS12Element power(const BS12Element& x, std::int64_t n) {
  BS12Element base = n < 0 ? x.inverse() : x;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  BS12Element result;
  while (e != 0) {
    if (e & 1U) result = result * base;
    base = base * base;
    e >>= 1U;
  }
  return result;
}

Letter inverse(Letter l) noexcept {
  switch (l) {
    case Letter::a: return Letter::a_inv;
    case Letter::a_inv: return Letter::a;
    case Letter::t: return Letter::t_inv;
    case Letter::t_inv: return Letter::t;
    case Letter::tau: return Letter::tau_inv;
    case Letter::tau_inv: return Letter::tau;
  }
  return l;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

BS12Element letter_element(Letter l) {
  switch (l) {
    case Letter::a: return BS12Element::a();
    case Letter::a_inv: return BS12Element::a().inverse();
    case Letter::t: return BS12Element::t();
    case Letter::t_inv: return BS12Element::t().inverse();
    case Letter::tau: return BS12Element::tau();
    case Letter::tau_inv: return BS12Element::tau().inverse();
  }
  return {};
}

int letter_height(Letter l) noexcept {
  switch (l) {
    case Letter::t: return 1;
    case Letter::t_inv: return -1;
    case Letter::tau: return 2;
    case Letter::tau_inv: return -2;
    default: return 0;
  }
}

namespace {

constexpr std::int64_t kMaxPower = std::int64_t{1} << 20;

bool starts_with(std::string_view text, std::size_t i, std::string_view prefix) {
  return text.substr(i, prefix.size()) == prefix;
}

// Superscript digit at position i, as (value, byte length).
std::pair<int, std::size_t> superscript_digit(std::string_view text, std::size_t i) {
  if (starts_with(text, i, "\xC2\xB9")) return {1, 2};
  if (starts_with(text, i, "\xC2\xB2")) return {2, 2};
  if (starts_with(text, i, "\xC2\xB3")) return {3, 2};
  if (starts_with(text, i, "\xE2\x81\xB0")) return {0, 3};
  if (i + 2 < text.size() && starts_with(text, i, "\xE2\x81")) {
    const auto c = static_cast<unsigned char>(text[i + 2]);
    if (c >= 0xB4 && c <= 0xB9) return {c - 0xB0, 3};
  }
  return {-1, 0};
}

}  // namespace

Word parse_word(std::string_view text) {
  Word w;
  std::size_t i = 0;
  auto fail = [&](const std::string& what) { throw ParseError(what, 1, i + 1); };
  auto skip = [&] {
    while (i < text.size()) {
      if (text[i] == ' ' || text[i] == '\t' || text[i] == '*' || text[i] == '.') {
        ++i;
      } else if (starts_with(text, i, "\xC2\xB7")) {
        i += 2;
      } else {
        break;
      }
    }
  };
  skip();
  if (starts_with(text, i, "1")) {
    ++i;
    skip();
    if (i != text.size()) fail("identity word \"1\" cannot be followed by letters");
    return w;
  }
  while (skip(), i < text.size()) {
    Letter base{};
    if (starts_with(text, i, "tau")) {
      base = Letter::tau, i += 3;
    } else if (starts_with(text, i, "TAU")) {
      base = Letter::tau_inv, i += 3;
    } else if (starts_with(text, i, "\xCF\x84")) {
      base = Letter::tau, i += 2;
    } else if (text[i] == 'a') {
      base = Letter::a, ++i;
    } else if (text[i] == 'A') {
      base = Letter::a_inv, ++i;
    } else if (text[i] == 't') {
      base = Letter::t, ++i;
    } else if (text[i] == 'T') {
      base = Letter::t_inv, ++i;
    } else {
      fail("expected a generator (a, t, tau or their inverses)");
    }

    std::int64_t e = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      const bool brace = i < text.size() && text[i] == '{';
      if (brace) ++i;
      bool negative = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) negative = text[i++] == '-';
      const std::size_t start = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
      if (start == i) fail("expected an exponent");
      std::int64_t value = 0;
      const auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + i, value);
      if (ec != std::errc{} || value > kMaxPower) fail("exponent out of range");
      e = negative ? -value : value;
      if (brace) {
        if (i >= text.size() || text[i] != '}') fail("expected '}'");
        ++i;
      }
    } else {
      bool negative = false;
      if (starts_with(text, i, "\xE2\x81\xBB")) {
        negative = true;
        i += 3;
      }
      std::int64_t value = 0;
      bool any = false;
      while (true) {
        const auto [d, len] = superscript_digit(text, i);
        if (d < 0) break;
        value = value * 10 + d;
        if (value > kMaxPower) fail("exponent out of range");
        any = true;
        i += len;
      }
      if (negative && !any) fail("expected a superscript digit after the superscript minus");
      if (any) e = negative ? -value : value;
    }
    const Letter letter = e < 0 ? inverse(base) : base;
    w.insert(w.end(), static_cast<std::size_t>(e < 0 ? -e : e), letter);
  }
  return w;
}

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const auto run = static_cast<std::int64_t>(j - i);
    const Letter l = w[i];
    const bool inv = l == Letter::a_inv || l == Letter::t_inv || l == Letter::tau_inv;
    const char* name = (l == Letter::a || l == Letter::a_inv) ? "a" : (l == Letter::t || l == Letter::t_inv) ? "t" : "tau";
    if (!out.empty()) out += ' ';
    out += name;
    const std::int64_t e = inv ? -run : run;
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out.empty() ? "1" : out;
}

BS12Element evaluate(const Word& w) {
  // Walk the Cayley graph edges directly: a adds 2^z to r, t and tau
  // change the height.
  BS12Element x;
  for (Letter l : w) x = x * letter_element(l);
  return x;
}

NormalForm normal_form(const BS12Element& x) {
  if (x.r_is_zero()) return {0, 0, x.z()};
  const std::int64_t m = -x.r_exp();
  return {m, x.r_num(), x.z() - m};
}

BS12Element from_normal_form(const NormalForm& nf) {
  if (nf.k == 0 ? nf.m != 0 : mp::bit_test(mp::abs(nf.k), 0) == false) {
    throw InvalidParameter("normal form needs k odd, or k = m = 0");
  }
  return BS12Element::from_dyadic(nf.k, -nf.m, nf.m + nf.n);
}

Word word_of(const NormalForm& nf) {
  if (mp::abs(nf.k) > BigInt(kMaxPower)) throw TooLarge("normal form exponent is too large to spell out");
  const auto k = nf.k.convert_to<std::int64_t>();
  Word w;
  w.insert(w.end(), static_cast<std::size_t>(nf.m < 0 ? -nf.m : nf.m), nf.m < 0 ? Letter::t_inv : Letter::t);
  w.insert(w.end(), static_cast<std::size_t>(k < 0 ? -k : k), k < 0 ? Letter::a_inv : Letter::a);
  w.insert(w.end(), static_cast<std::size_t>(nf.n < 0 ? -nf.n : nf.n), nf.n < 0 ? Letter::t_inv : Letter::t);
  return w;
}

std::string to_string(const NormalForm& nf) {
  return "t^" + std::to_string(nf.m) + " a^" + nf.k.str() + " t^" + std::to_string(nf.n);
}

}  // namespace shortcut
