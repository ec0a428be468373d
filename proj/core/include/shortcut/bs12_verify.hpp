#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "shortcut/cayley.hpp"

namespace shortcut {

struct VerifyOptions {
  BallOptions ball;
  std::uint64_t max_expansions = 200'000'000;
  std::uint64_t max_words_per_element = 10'000'000;
};

// ---- standard generators {a, t}: no long isometric cycles ----

struct BssReport {
  std::size_t max_cycle_len = 0;
  std::size_t depth_radius = 0;
  std::size_t vertex_radius = 0;
  std::size_t ball_size = 0;
  // Isometric cycles through the identity, per length, spelled as words.
  std::map<std::size_t, std::vector<std::string>> cycles_by_length;
  // Cycles longer than 5 (the theorem says there are none).
  std::vector<std::string> long_cycles;
  // Long cycles whose word does not have the a w1 a w2 structure.
  std::vector<std::string> structure_violations;
  bool exhaustive = true;
  std::uint64_t expansions = 0;

  bool holds() const noexcept { return long_cycles.empty(); }
};

BssReport verify_bss(std::size_t max_cycle_len, const VerifyOptions& options = {});

/// True when some rotation of the closed word reads a^e1 w1 a^e2 w2 with
/// each w_i geodesic, starting with t, ending with t^-1, w_i = a^(2 k_i)
/// and |k1 + k2| <= 1.
bool has_isomcycles_form(const Word& closed_word, const BS12Ball& depth_ball);

// ---- {a, t, tau}: isometric cycles of every length 4k + 4 ----

struct AttaugcRow {
  std::size_t k = 0;
  std::string word;
  std::size_t length = 0;
  bool closed = false;
  bool embedded = false;
  bool isometric = false;          // antipodal criterion
  bool isometric_all_pairs = false;
  std::size_t shortcut_lower_bound = 0;
};

struct AttaugcReport {
  std::vector<AttaugcRow> rows;
  bool holds() const noexcept;
};

AttaugcReport verify_attaugc(std::size_t k_min, std::size_t k_max, const VerifyOptions& options = {});

// w = tau^l a tau^-k a^(+-1) tau^(k-l) has length 2k + 2 and is geodesic.
struct AttaugeosRow {
  std::size_t k = 0;
  std::size_t l = 0;
  int sign = 1;
  std::string word;
  std::uint32_t distance = 0;
  bool geodesic = false;
};

struct AttaugeosReport {
  std::vector<AttaugeosRow> rows;
  bool holds() const noexcept;
};

AttaugeosReport verify_attaugeos(std::size_t k_min, std::size_t k_max, const VerifyOptions& options = {});

// ---- geodesic structure in {a, t} ----

struct LemmaCheck {
  std::uint64_t checked = 0;
  std::vector<std::string> failures;  // first few, as readable strings

  bool ok() const noexcept { return failures.empty(); }
};

struct GeodesicLemmaReport {
  std::size_t radius = 0;
  std::size_t ball_size = 0;
  LemmaCheck forbidden_patterns;  // item (i)
  LemmaCheck descent;             // item (ii)
  LemmaCheck drift;               // item (iii)
  LemmaCheck akgeos;              // item (iv)
  // Height-zero drift cases, reported without assertion.
  std::vector<std::string> height_zero_notes;
  std::uint64_t geodesic_words = 0;

  bool holds() const noexcept { return forbidden_patterns.ok() && descent.ok() && drift.ok() && akgeos.ok(); }
};

GeodesicLemmaReport verify_geodesic_lemmas(std::size_t radius, const VerifyOptions& options = {});

/// Every word of length <= max_len whose prefixes all have height >= 0
/// and whose height is 0 represents a power of a.
LemmaCheck verify_zeroheight(std::size_t max_len);

// ---- sums of signed powers of two ----

struct PowtsumRow {
  std::size_t k = 0;
  std::size_t z_max = 0;
  std::size_t m = 0;
  int sign = 1;               // target 2^k + sign
  std::uint64_t minimum = 0;  // min sum |alpha_z|
  std::uint64_t bound = 0;
  bool ok = false;
};

struct PowtsumReport {
  std::vector<PowtsumRow> rows;
  bool holds() const noexcept;
};

/// Minimum of sum |alpha_z| over integer vectors with
/// sum_{z=-m}^{z_max} alpha_z 2^z = target, by dynamic programming.
std::uint64_t min_power_sum(std::int64_t target, std::size_t z_max, std::size_t m);

PowtsumReport verify_powtsum(std::size_t k_max, std::size_t m_max);

nlohmann::ordered_json to_json(const BssReport& r);
nlohmann::ordered_json to_json(const AttaugcReport& r);
nlohmann::ordered_json to_json(const AttaugeosReport& r);
nlohmann::ordered_json to_json(const GeodesicLemmaReport& r);
nlohmann::ordered_json to_json(const PowtsumReport& r);
nlohmann::ordered_json to_json(const LemmaCheck& c);

}  // namespace shortcut
