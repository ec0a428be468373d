#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "shortcut/cycle.hpp"
#include "shortcut/distance.hpp"
#include "shortcut/rational.hpp"

namespace shortcut {

enum class CycleModeKind { any, isometric, almost_isometric, bilipschitz };

/// Which cycles a search keeps.
struct CycleMode {
  CycleModeKind kind = CycleModeKind::isometric;
  RationalParam param{1, 1};

  static CycleMode any() { return {CycleModeKind::any, {1, 1}}; }
  static CycleMode isometric() { return {CycleModeKind::isometric, {1, 1}}; }
  static CycleMode almost_isometric(RationalParam xi);
  static CycleMode bilipschitz(RationalParam k);

  bool accepts(const Metric& metric, const CycleInGraph& cycle) const;
};

struct SearchBudget {
  std::uint64_t max_expansions = 200'000'000;
};

enum class SearchStrategy { exhaustive, heuristic };

struct SearchOptions {
  CycleMode mode = CycleMode::isometric();
  SearchBudget budget;
  SearchStrategy strategy = SearchStrategy::exhaustive;
  // Caller-asserted vertex transitivity: only cycles through this vertex are
  // enumerated. Never inferred.
  std::optional<VertexId> base_vertex;
  // Exhaustive mode stops each partition after this many hits.
  std::size_t max_results = std::numeric_limits<std::size_t>::max();
  std::uint64_t seed = 0;
  std::size_t heuristic_samples = 20'000;
  unsigned threads = 1;
};

struct SearchResult {
  // Canonical forms, sorted, one per cycle up to rotation and reflection.
  std::vector<CycleInGraph> cycles;
  // True when the enumeration finished within budget. Always false in
  // heuristic mode.
  bool complete = true;
  std::uint64_t expansions = 0;
};

/// Enumerates closed walks of the given length accepted by options.mode.
///
/// Partial walks u_0 ... u_j are pruned with the vertex-pair form of the
/// antipodal relaxation: every pair at cycle distance c must already satisfy
/// d(u_a, u_b) >= c - (1 - xi)|C|/2 (or d >= c / K for bilipschitz mode).
/// Accepted walks satisfy the antipodal condition and therefore this one, so
/// pruning never discards a valid completion.
SearchResult search_cycles(const Metric& metric, std::size_t length, const SearchOptions& options);

struct RatioSearchResult {
  std::optional<RationalParam> best;  // empty when no closed walk exists
  std::optional<CycleInGraph> witness;
  bool complete = true;
  std::uint64_t expansions = 0;
};

/// max over cycles of the given length of antipodal_ratio, by branch and
/// bound (exhaustive) or by seeded sampling with local improvement
/// (heuristic, a lower bound). options.mode is ignored.
RatioSearchResult max_antipodal_ratio(const Metric& metric, std::size_t length,
                                      const SearchOptions& options);

/// Uniform-ish random closed walk of the given length through `start`, or
/// nothing when the walk got stuck.
std::optional<std::vector<VertexId>> random_closed_walk(const Metric& metric, std::size_t length,
                                                        VertexId start, std::mt19937_64& rng);

/// `count` random closed walks with lengths drawn from [min_length,
/// max_length]; lengths that admit no closed walk are skipped.
std::vector<CycleInGraph> random_cycles(const Metric& metric, std::size_t count,
                                        std::size_t min_length, std::size_t max_length,
                                        std::uint64_t seed);

}  // namespace shortcut
