#include "shortcut/bs12_verify.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>

#include "shortcut/cycle_search.hpp"
#include "shortcut/predicates.hpp"

namespace shortcut {

namespace {

constexpr std::size_t kMaxFailures = 20;

void fail(LemmaCheck& c, std::string what) {
  if (c.failures.size() < kMaxFailures) c.failures.push_back(std::move(what));
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

Word rotate(const Word& w, std::size_t r) {
  Word out(w.begin() + static_cast<std::ptrdiff_t>(r), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r));
  return out;
}

bool is_a_letter(Letter l) { return l == Letter::a || l == Letter::a_inv; }

// Letter of each generator of a ball over the letters a, t, tau.
std::vector<Letter> generator_letters(const BS12Ball& ball) {
  constexpr std::array all{Letter::a, Letter::a_inv, Letter::t, Letter::t_inv, Letter::tau, Letter::tau_inv};
  std::vector<Letter> out;
  for (const auto& g : ball.generators()) {
    const auto it = std::find_if(all.begin(), all.end(), [&](Letter l) { return letter_element(l) == g; });
    if (it == all.end()) throw InvalidParameter("ball generator " + g.to_string() + " is not a standard letter");
    out.push_back(*it);
  }
  return out;
}

// Edges p -> v of the geodesic DAG: element(p) * letter = element(v) and
// depth(p) + 1 = depth(v).
struct ParentDag {
  std::vector<std::vector<std::pair<VertexId, Letter>>> parents;
};

ParentDag parent_dag(const BS12Ball& ball) {
  const auto letters = generator_letters(ball);
  ParentDag dag;
  dag.parents.resize(ball.size());
  for (VertexId v = 1; v < ball.size(); ++v) {
    for (std::size_t g = 0; g < letters.size(); ++g) {
      const auto p = ball.find(ball.element(v) * letter_element(inverse(letters[g])));
      if (p && ball.depth(*p) + 1 == ball.depth(v)) dag.parents[v].emplace_back(*p, letters[g]);
    }
  }
  return dag;
}

bool forbidden(Letter x, Letter y, Letter z) {
  using L = Letter;
  const bool t_a_T = x == L::t && is_a_letter(y) && z == L::t_inv;
  const bool T_aa = x == L::t_inv && is_a_letter(y) && y == z;
  const bool aa_t = is_a_letter(x) && x == y && z == L::t;
  const bool a_T_A = is_a_letter(x) && y == L::t_inv && z == inverse(x);
  return t_a_T || T_aa || aa_t || a_T_A;
}

std::string letter_set(std::uint8_t mask) {
  std::vector<std::string> names;
  for (unsigned l = 0; l < 6; ++l) {
    if ((mask >> l) & 1U) names.push_back(format_word({static_cast<Letter>(l)}));
  }
  std::string out;
  for (const auto& s : names) out += (out.empty() ? "" : ", ") + s;
  return out;
}

std::string word3(Letter x, Letter y, Letter z) { return format_word({x, y, z}); }

// 2^h as a BigInt.
BigInt pow2(std::int64_t h) { return BigInt(1) << static_cast<unsigned>(h); }

// The element is t^-h a^k with h >= 0 when z = -h and r 2^h is an integer;
// returns k.
std::optional<BigInt> descent_coefficient(const BS12Element& x) {
  if (x.z() > 0) return std::nullopt;
  const std::int64_t h = -x.z();
  if (x.r_is_zero()) return BigInt(0);
  if (x.r_exp() > h) return std::nullopt;
  return x.r_num() << static_cast<unsigned>(h - x.r_exp());
}

}  // namespace

// ---- bss ----

bool has_isomcycles_form(const Word& w, const BS12Ball& ball) {
  const std::size_t n = w.size();
  auto geodesic = [&](const Word& part) {
    const auto d = group_distance(ball, BS12Element{}, evaluate(part));
    return d == part.size();
  };
  // w_i geodesic, starting with t, ending with t^-1, equal to a^(2 k_i).
  auto half = [&](const Word& part) -> std::optional<BigInt> {
    if (part.size() < 2 || part.front() != Letter::t || part.back() != Letter::t_inv) return std::nullopt;
    const BS12Element x = evaluate(part);
    if (x.z() != 0 || !x.r_is_integer()) return std::nullopt;
    const BigInt k = x.r_integer();
    if (boost::multiprecision::bit_test(boost::multiprecision::abs(k), 0)) return std::nullopt;
    if (!geodesic(part)) return std::nullopt;
    return k / 2;
  };
  for (std::size_t r = 0; r < n; ++r) {
    const Word v = rotate(w, r);
    if (!is_a_letter(v[0])) continue;
    for (std::size_t p = 1; p < n; ++p) {
      if (!is_a_letter(v[p])) continue;
      const Word w1(v.begin() + 1, v.begin() + static_cast<std::ptrdiff_t>(p));
      const Word w2(v.begin() + static_cast<std::ptrdiff_t>(p) + 1, v.end());
      const auto k1 = half(w1);
      if (!k1) continue;
      const auto k2 = half(w2);
      if (k2 && boost::multiprecision::abs(*k1 + *k2) <= 1) return true;
    }
  }
  return false;
}

BssReport verify_bss(std::size_t max_cycle_len, const VerifyOptions& options) {
  if (max_cycle_len < 3) throw InvalidParameter("max cycle length must be at least 3");
  BssReport report;
  report.max_cycle_len = max_cycle_len;
  report.depth_radius = max_cycle_len;
  report.vertex_radius = (max_cycle_len + 1) / 2;
  auto ball = std::make_shared<const BS12Ball>(cayley_ball(BS12Spec::standard(), report.depth_radius, options.ball));
  report.ball_size = ball->size();
  const CayleyMetric<BS12Group> metric(ball, report.vertex_radius, options.ball.threads);

  SearchOptions search;
  search.mode = CycleMode::isometric();
  search.base_vertex = 0;
  search.threads = options.ball.threads;
  for (std::size_t len = 3; len <= max_cycle_len; ++len) {
    search.budget.max_expansions = options.max_expansions - std::min(options.max_expansions, report.expansions);
    const SearchResult found = search_cycles(metric, len, search);
    report.expansions += found.expansions;
    report.exhaustive = report.exhaustive && found.complete;
    auto& words = report.cycles_by_length[len];
    for (const auto& c : found.cycles) {
      const std::string word = join(walk_labels(*ball, c.vertices()));
      words.push_back(word);
      if (len > 5) {
        report.long_cycles.push_back(word);
        if (!has_isomcycles_form(parse_word(word), *ball)) report.structure_violations.push_back(word);
      }
    }
  }
  return report;
}

// ---- attaugc / attaugeos ----

bool AttaugcReport::holds() const noexcept {
  return std::all_of(rows.begin(), rows.end(), [](const AttaugcRow& r) {
    return r.closed && r.embedded && r.isometric && r.isometric_all_pairs;
  });
}

AttaugcReport verify_attaugc(std::size_t k_min, std::size_t k_max, const VerifyOptions& options) {
  if (k_min < 1 || k_min > k_max) throw InvalidParameter("need 1 <= k_min <= k_max");
  // Every vertex of the cycle lies within 2k + 2 of the identity and every
  // pair is within 2k + 2 of each other, so a ball of that radius certifies
  // all distances directly.
  auto ball = std::make_shared<const BS12Ball>(cayley_ball(BS12Spec::with_tau(), 2 * k_max + 2, options.ball));
  AttaugcReport report;
  for (std::size_t k = k_min; k <= k_max; ++k) {
    AttaugcRow row;
    row.k = k;
    const std::string kk = std::to_string(k);
    const Word w = parse_word("a tau^" + kk + " a tau^-" + kk + " a^-1 tau^" + kk + " a^-1 tau^-" + kk);
    row.word = format_word(w);
    row.length = w.size();

    std::vector<VertexId> walk;
    BS12Element x;
    for (Letter l : w) {
      walk.push_back(*ball->find(x));
      x = x * letter_element(l);
    }
    row.closed = x.is_identity();
    std::vector<VertexId> sorted = walk;
    std::sort(sorted.begin(), sorted.end());
    row.embedded = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    if (row.closed && row.embedded) {
      const CayleyMetric<BS12Group> metric(ball, 2 * k + 2, options.ball.threads, /*precompute=*/false);
      const CycleInGraph cycle(metric.graph(), walk);
      row.isometric = is_isometric_cycle(metric, cycle);
      row.isometric_all_pairs = is_isometric_all_pairs(metric, cycle);
      if (row.isometric) row.shortcut_lower_bound = row.length;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

bool AttaugeosReport::holds() const noexcept {
  return std::all_of(rows.begin(), rows.end(), [](const AttaugeosRow& r) { return r.geodesic; });
}

AttaugeosReport verify_attaugeos(std::size_t k_min, std::size_t k_max, const VerifyOptions& options) {
  if (k_min < 2 || k_min > k_max) throw InvalidParameter("need 2 <= k_min <= k_max");
  // Distances up to 2k + 2 are exact with a ball of radius k + 1.
  const BS12Ball ball = cayley_ball(BS12Spec::with_tau(), k_max + 1, options.ball);
  AttaugeosReport report;
  for (std::size_t k = k_min; k <= k_max; ++k) {
    for (std::size_t l = 0; l <= k; ++l) {
      for (int sign : {1, -1}) {
        AttaugeosRow row;
        row.k = k;
        row.l = l;
        row.sign = sign;
        const std::string s = "tau^" + std::to_string(l) + " a tau^-" + std::to_string(k) + " a^" +
                              std::to_string(sign) + " tau^" + std::to_string(k - l);
        const Word w = parse_word(s);
        row.word = format_word(w);
        row.distance = group_distance_mitm(ball, BS12Element{}, evaluate(w));
        row.geodesic = row.distance == w.size() && w.size() == 2 * k + 2;
        report.rows.push_back(std::move(row));
      }
    }
  }
  return report;
}

// ---- geodesic lemmas ----

GeodesicLemmaReport verify_geodesic_lemmas(std::size_t radius, const VerifyOptions& options) {
  GeodesicLemmaReport report;
  report.radius = radius;
  const BS12Ball ball = cayley_ball(BS12Spec::standard(), radius, options.ball);
  report.ball_size = ball.size();
  const ParentDag dag = parent_dag(ball);
  const std::size_t n = ball.size();

  // Geodesic counts, and first letters as bit masks over Letter.
  std::vector<std::uint64_t> paths(n, 0);
  std::vector<std::uint8_t> first(n, 0);
  // States reachable along geodesics: bit 0 no t^-1 yet, bit 1 t^-1 seen,
  // bit 2 a t after a t^-1 (not ascending then descending).
  std::vector<std::uint8_t> state(n, 0);
  paths[0] = 1;
  state[0] = 1;
  for (VertexId v = 1; v < n; ++v) {
    for (const auto& [p, l] : dag.parents[v]) {
      paths[v] += paths[p];
      first[v] |= p == 0 ? static_cast<std::uint8_t>(1U << static_cast<unsigned>(l)) : first[p];
      std::uint8_t s = state[p];
      if (l == Letter::t_inv) {
        s = static_cast<std::uint8_t>(((s & 3U) != 0 ? 2U : 0U) | (s & 4U));
      } else if (l == Letter::t) {
        s = static_cast<std::uint8_t>((s & 1U) | ((s & 6U) != 0 ? 4U : 0U));
      }
      state[v] |= s;
    }
    report.geodesic_words += paths[v];
  }

  // (i) every three consecutive letters of a geodesic avoid the patterns.
  for (VertexId v = 1; v < n; ++v) {
    for (const auto& [p, l3] : dag.parents[v]) {
      for (const auto& [q, l2] : dag.parents[p]) {
        for (const auto& [o, l1] : dag.parents[q]) {
          ++report.forbidden_patterns.checked;
          if (forbidden(l1, l2, l3)) {
            fail(report.forbidden_patterns,
                 word3(l1, l2, l3) + " on a geodesic to " + ball.element(v).to_string());
          }
        }
      }
    }
  }

  const auto bit = [](Letter l) { return static_cast<std::uint8_t>(1U << static_cast<unsigned>(l)); };
  for (VertexId v = 1; v < n; ++v) {
    const BS12Element& x = ball.element(v);
    const auto coeff = descent_coefficient(x);
    if (!coeff) continue;
    const std::int64_t h = -x.z();

    // (ii) t^-h a^k: every geodesic is ascending then descending.
    ++report.descent.checked;
    if ((state[v] & 4U) != 0) fail(report.descent, "a geodesic to " + x.to_string() + " climbs after descending");

    // (iii) first-letter trichotomy for 0 <= |k| <= 2^h.
    const BigInt k = boost::multiprecision::abs(*coeff);
    const BigInt two_h = pow2(h);
    if (k > two_h) continue;
    const Letter a_eps = *coeff < 0 ? Letter::a_inv : Letter::a;
    if (h == 0) {
      report.height_zero_notes.push_back("h=0, k=" + coeff->str() + ": first letters {" + letter_set(first[v]) + "}");
      continue;
    }
    ++report.drift.checked;
    std::uint8_t expected = 0;
    if (3 * k < 2 * two_h) {
      expected = bit(Letter::t_inv);
    } else if (6 * k > 5 * two_h) {
      expected = bit(a_eps);
    } else if (3 * k > 2 * two_h && 6 * k < 5 * two_h) {
      expected = static_cast<std::uint8_t>(bit(Letter::t_inv) | bit(a_eps));
    } else {
      fail(report.drift, "boundary case h=" + std::to_string(h) + ", k=" + k.str());
      continue;
    }
    if (first[v] != expected) {
      fail(report.drift, "geodesics to t^-" + std::to_string(h) + " a^" + coeff->str() +
                             " have an unexpected set of first letters");
    }
  }

  // (iv) every geodesic to a^k splits as x a^l y.
  std::uint64_t budget = options.max_expansions;
  for (VertexId v = 1; v < n; ++v) {
    const BS12Element& x = ball.element(v);
    if (x.z() != 0 || !x.r_is_integer()) continue;
    const BigInt k = x.r_integer();
    if (paths[v] > options.max_words_per_element) {
      throw BudgetExhausted("element " + x.to_string() + " has " + std::to_string(paths[v]) + " geodesics");
    }
    Word reversed;
    std::function<void(VertexId)> walk = [&](VertexId u) {
      if (u == 0) {
        if (budget == 0) throw BudgetExhausted("geodesic enumeration exceeded the expansion budget");
        --budget;
        const Word w(reversed.rbegin(), reversed.rend());
        ++report.akgeos.checked;
        std::size_t i = 0;  // just past the last t
        std::size_t j = w.size();  // at the first t^-1
        std::int64_t h = 0;
        for (std::size_t q = 0; q < w.size(); ++q) {
          if (w[q] == Letter::t) i = q + 1;
        }
        for (std::size_t q = 0; q < i; ++q) h += letter_height(w[q]);
        for (std::size_t q = 0; q < w.size(); ++q) {
          if (w[q] == Letter::t_inv) {
            j = q;
            break;
          }
        }
        const Letter a_eps = k < 0 ? Letter::a_inv : Letter::a;
        bool ok = j > i;
        for (std::size_t q = i; ok && q < j; ++q) ok = w[q] == a_eps;
        if (ok) {
          const auto ell = static_cast<std::int64_t>(j - i);
          const BigInt two_h = pow2(h);
          const BigInt gap = 3 * (boost::multiprecision::abs(k) - two_h * ell);
          ok = -2 * two_h < gap && gap < 5 * two_h;
        }
        if (!ok) fail(report.akgeos, format_word(w) + " = a^" + k.str());
        return;
      }
      for (const auto& [p, l] : dag.parents[u]) {
        reversed.push_back(l);
        walk(p);
        reversed.pop_back();
      }
    };
    walk(v);
  }
  return report;
}

LemmaCheck verify_zeroheight(std::size_t max_len) {
  LemmaCheck check;
  constexpr std::array letters{Letter::a, Letter::a_inv, Letter::t, Letter::t_inv};
  Word w;
  std::function<void(const BS12Element&)> extend = [&](const BS12Element& x) {
    if (x.z() == 0) {
      ++check.checked;
      if (!x.r_is_integer()) fail(check, (w.empty() ? std::string("1") : format_word(w)) + " is not a power of a");
    }
    if (w.size() == max_len) return;
    for (Letter l : letters) {
      if (x.z() + letter_height(l) < 0) continue;
      w.push_back(l);
      extend(x * letter_element(l));
      w.pop_back();
    }
  };
  extend(BS12Element{});
  return check;
}

// ---- powtsum ----

std::uint64_t min_power_sum(std::int64_t target, std::size_t z_max, std::size_t m) {
  if (z_max + m > 40) throw TooLarge("too many powers of two");
  // Scale by 2^m so the powers run over 2^0 .. 2^(z_max + m). Putting the
  // whole target at 2^0 costs |target|, so an optimum never uses a single
  // coefficient larger than that, and the carried value stays below
  // |scaled| + |target| in absolute value.
  const std::int64_t scaled = target * (std::int64_t{1} << m);
  const std::int64_t a_max = std::abs(target);
  const std::int64_t bound = std::abs(scaled) + a_max;
  const std::size_t levels = z_max + m;
  const auto width = static_cast<std::size_t>(2 * bound + 1);
  constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max() / 4;
  // cost[v + bound]: cheapest way to write v * 2^e using powers e..levels.
  std::vector<std::uint64_t> next(width);
  for (std::int64_t v = -bound; v <= bound; ++v) next[static_cast<std::size_t>(v + bound)] = static_cast<std::uint64_t>(std::abs(v));
  for (std::size_t e = levels; e-- > 0;) {
    std::vector<std::uint64_t> cur(width, kInf);
    for (std::int64_t v = -bound; v <= bound; ++v) {
      std::uint64_t best = kInf;
      for (std::int64_t alpha = -a_max; alpha <= a_max; ++alpha) {
        if (((v - alpha) & 1) != 0) continue;
        const std::int64_t rest = (v - alpha) / 2;
        if (rest < -bound || rest > bound) continue;
        best = std::min(best, static_cast<std::uint64_t>(std::abs(alpha)) + next[static_cast<std::size_t>(rest + bound)]);
      }
      cur[static_cast<std::size_t>(v + bound)] = best;
    }
    next = std::move(cur);
  }
  return next[static_cast<std::size_t>(scaled + bound)];
}

bool PowtsumReport::holds() const noexcept {
  return std::all_of(rows.begin(), rows.end(), [](const PowtsumRow& r) { return r.ok; });
}

PowtsumReport verify_powtsum(std::size_t k_max, std::size_t m_max) {
  if (k_max < 1 || k_max > 30) throw InvalidParameter("k_max must lie in 1..30");
  PowtsumReport report;
  for (std::size_t k = 1; k <= k_max; ++k) {
    for (std::size_t z_max = 0; z_max <= k; ++z_max) {
      for (std::size_t m = 0; m <= m_max; ++m) {
        for (int sign : {1, -1}) {
          PowtsumRow row;
          row.k = k;
          row.z_max = z_max;
          row.m = m;
          row.sign = sign;
          const std::int64_t target = (std::int64_t{1} << k) + sign;
          row.minimum = min_power_sum(target, z_max, m);
          if (z_max == 0) {
            row.bound = (std::uint64_t{1} << k) - 1;
          } else if (z_max == 1) {
            row.bound = std::uint64_t{1} << (k - 1);
          } else {
            row.bound = (std::uint64_t{1} << (k - z_max)) + 1;
          }
          row.ok = row.minimum >= row.bound;
          report.rows.push_back(row);
        }
      }
    }
  }
  return report;
}

// ---- JSON ----

nlohmann::ordered_json to_json(const LemmaCheck& c) {
  return {{"checked", c.checked}, {"failures", c.failures}, {"ok", c.ok()}};
}

nlohmann::ordered_json to_json(const BssReport& r) {
  nlohmann::ordered_json by_len = nlohmann::ordered_json::object();
  for (const auto& [len, words] : r.cycles_by_length) by_len[std::to_string(len)] = words;
  return {{"max_cycle_len", r.max_cycle_len},
          {"depth_radius", r.depth_radius},
          {"vertex_radius", r.vertex_radius},
          {"ball_size", r.ball_size},
          {"cycles_by_length", std::move(by_len)},
          {"long_cycles", r.long_cycles},
          {"structure_violations", r.structure_violations},
          {"exhaustive", r.exhaustive},
          {"expansions", r.expansions},
          {"holds", r.holds()}};
}

nlohmann::ordered_json to_json(const AttaugcReport& r) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"k", row.k},
                    {"word", row.word},
                    {"length", row.length},
                    {"closed", row.closed},
                    {"embedded", row.embedded},
                    {"isometric", row.isometric},
                    {"isometric_all_pairs", row.isometric_all_pairs},
                    {"shortcut_lower_bound", row.shortcut_lower_bound}});
  }
  return {{"rows", std::move(rows)}, {"holds", r.holds()}};
}

nlohmann::ordered_json to_json(const AttaugeosReport& r) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"k", row.k},
                    {"l", row.l},
                    {"sign", row.sign},
                    {"word", row.word},
                    {"distance", row.distance},
                    {"geodesic", row.geodesic}});
  }
  return {{"rows", std::move(rows)}, {"holds", r.holds()}};
}

nlohmann::ordered_json to_json(const GeodesicLemmaReport& r) {
  return {{"radius", r.radius},
          {"ball_size", r.ball_size},
          {"geodesic_words", r.geodesic_words},
          {"forbidden_patterns", to_json(r.forbidden_patterns)},
          {"descent", to_json(r.descent)},
          {"drift", to_json(r.drift)},
          {"akgeos", to_json(r.akgeos)},
          {"height_zero_notes", r.height_zero_notes},
          {"holds", r.holds()}};
}

nlohmann::ordered_json to_json(const PowtsumReport& r) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"k", row.k},
                    {"z_max", row.z_max},
                    {"m", row.m},
                    {"target", (std::int64_t{1} << row.k) + row.sign},
                    {"minimum", row.minimum},
                    {"bound", row.bound},
                    {"ok", row.ok}});
  }
  return {{"rows", std::move(rows)}, {"holds", r.holds()}};
}

}  // namespace shortcut
