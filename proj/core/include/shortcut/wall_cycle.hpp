#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "shortcut/shortcut_analysis.hpp"

namespace shortcut {

using WallId = std::size_t;

/// A cycle of length n with edge i = {i, i+1 mod n} coloured coloring[i].
/// Every colour occurs an even number of times.
class WallCycle {
 public:
  explicit WallCycle(std::vector<WallId> coloring);

  std::size_t length() const noexcept { return coloring_.size(); }
  const std::vector<WallId>& coloring() const noexcept { return coloring_; }
  // Distinct walls in order of first appearance.
  const std::vector<WallId>& walls() const noexcept { return walls_; }
  std::size_t multiplicity(WallId w) const;
  bool has_wall(WallId w) const noexcept { return index_.count(w) != 0; }

  friend bool operator==(const WallCycle& a, const WallCycle& b) { return a.coloring_ == b.coloring_; }

 private:
  std::vector<WallId> coloring_;
  std::vector<WallId> walls_;
  std::map<WallId, std::size_t> index_;
  std::vector<std::size_t> counts_;
};

/// Some segment begins and ends with one wall and crosses the other an odd
/// number of times.
bool walls_cross(const WallCycle& wc, WallId w1, WallId w2);

/// Adjacency of the crossing graph over wc.walls() (indices into walls()).
std::vector<std::vector<bool>> crossing_graph(const WallCycle& wc);

std::size_t max_clique(const std::vector<std::vector<bool>>& adjacency);

/// max(1, largest set of pairwise crossing walls).
std::size_t dimension(const WallCycle& wc);

/// Number of walls crossed an odd number of times between vertices u and v.
std::size_t wall_crossing_distance(const WallCycle& wc, std::size_t u, std::size_t v);

/// d_alpha(u, v) >= ((5d - 1) / 5d) |C| / 2 for every antipodal vertex pair,
/// with d the given dimension.
bool wallcycle_premise(const WallCycle& wc, std::size_t d);

/// |C| <= 50 d^2 / (5d - 1).
bool within_wallcycle_bound(std::size_t length, std::size_t d);

/// Cycle distance between the two farthest edges of colour w.
std::size_t wall_diameter(const WallCycle& wc, WallId w);

/// Canonical colouring under rotation, reflection and renaming of walls.
std::vector<WallId> canonical_coloring(const std::vector<WallId>& coloring);

/// Colours each edge of a product cycle by its hyperplane.
WallCycle wall_cycle_from_product_cycle(const ProductGraph& pg, const CycleInGraph& cycle);

enum class WallSearch { exhaustive_pairs, random };

struct WallVerifyOptions {
  std::size_t dim = 1;
  std::size_t max_len = 14;
  WallSearch strategy = WallSearch::exhaustive_pairs;
  std::uint64_t samples = 100'000;
  std::uint64_t seed = 0;
  std::uint64_t max_candidates = 500'000'000;
  unsigned threads = 1;
};

struct LemmaTally {
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
};

struct WallTheoremReport {
  WallVerifyOptions options;
  std::uint64_t candidates = 0;
  std::uint64_t within_dimension = 0;
  std::uint64_t premise_holds = 0;
  // Premise-satisfying cycles per length (equivalence classes in
  // exhaustive mode, samples in random mode).
  std::map<std::size_t, std::uint64_t> satisfying_by_length;
  std::size_t longest_satisfying = 0;
  std::optional<WallCycle> longest_witness;
  std::vector<WallCycle> counterexamples;
  LemmaTally fewappear;
  LemmaTally diamcontrib;
  LemmaTally diamints;
  LemmaTally turan;
  std::vector<WallCycle> lemma_failures;
  bool complete = true;

  bool holds() const noexcept { return counterexamples.empty() && lemma_failures.empty(); }
};

WallTheoremReport verify_wallcycle_theorem(const WallVerifyOptions& options);

nlohmann::ordered_json to_json(const WallCycle& wc);
WallCycle wall_cycle_from_json(std::string_view text);
nlohmann::ordered_json to_json(const WallTheoremReport& report);

}  // namespace shortcut
