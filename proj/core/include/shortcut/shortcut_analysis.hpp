#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "shortcut/cycle_search.hpp"
#include "shortcut/distance.hpp"

namespace shortcut {

struct ShortcutReport {
  // Longest length <= range_checked admitting an isometric cycle; 0 if none.
  std::size_t theta = 0;
  std::size_t range_checked = 0;
  bool exhaustive = true;
  // One isometric cycle for every length that has one, shortest first.
  std::vector<CycleInGraph> witnesses;
  std::uint64_t expansions = 0;
};

/// Isometric cycles have length at most 2 diam + 1, so lengths beyond that
/// are settled without searching.
ShortcutReport shortcut_certificate(const DistanceOracle& metric, std::size_t max_len,
                                    const SearchOptions& options = {});

struct ProfileEntry {
  std::size_t length = 0;
  std::optional<RationalParam> xi_max;  // empty when no cycle of this length
  std::optional<CycleInGraph> witness;
  bool exhaustive = true;
};

struct StrongShortcutProfile {
  std::vector<ProfileEntry> entries;
};

StrongShortcutProfile strong_shortcut_profile(const Metric& metric, std::size_t min_len, std::size_t max_len,
                                              const SearchOptions& options = {});

// Product graph ---------------------------------------------------------

enum class EdgeKind { horizontal, vertical };

/// Cartesian product with the bookkeeping needed to project cycles back
/// onto the factors. Vertex (v1, v2) has id v1 * |V2| + v2.
struct ProductGraph {
  Graph graph;
  std::size_t factor1_vertices = 0;
  std::size_t factor2_vertices = 0;
  std::vector<EdgeKind> edge_kind;        // per product edge
  std::vector<std::size_t> factor_edge;   // index of the projected edge in its factor
  // Hyperplane (wall) id per product edge, present when both factors
  // supplied edge-to-hyperplane maps. Factor-1 walls come first.
  std::optional<std::vector<std::size_t>> hyperplane;

  VertexId vertex(VertexId v1, VertexId v2) const noexcept {
    return static_cast<VertexId>(v1 * factor2_vertices + v2);
  }
  VertexId first(VertexId v) const noexcept { return static_cast<VertexId>(v / factor2_vertices); }
  VertexId second(VertexId v) const noexcept { return static_cast<VertexId>(v % factor2_vertices); }
};

/// Edge-to-hyperplane map of a factor, indexed by the factor's edge order.
using HyperplaneMap = std::vector<std::size_t>;

// In a tree every edge is its own hyperplane.
HyperplaneMap tree_hyperplanes(const Graph& tree);
// Opposite edges of graphs::cycle(n), n even, share a hyperplane.
HyperplaneMap even_cycle_hyperplanes(std::size_t n);

// Missing maps are derived for tree factors; hyperplane ids are filled in
// only when both factors end up with a map.
ProductGraph product(const Graph& g1, const Graph& g2, std::optional<HyperplaneMap> h1 = std::nullopt,
                     std::optional<HyperplaneMap> h2 = std::nullopt);

struct FactorProjection {
  // Cycle obtained by contracting the edges that do not project onto the
  // chosen factor; consecutive entries are adjacent in that factor.
  std::vector<VertexId> walk;
  std::size_t horizontal = 0;
  std::size_t vertical = 0;
};

/// factor is 1 or 2.
FactorProjection project_cycle(const ProductGraph& pg, const CycleInGraph& cycle, int factor);

struct AlmostIsometricBound {
  RationalParam xi{1, 2};
  // Longest xi-almost isometric cycle found; 0 when there is none.
  std::size_t theta = 0;
  std::size_t range_checked = 0;
  bool exhaustive = true;
};

/// xi-almost isometric cycles have length at most 2 diam / xi; searches all
/// lengths up to that.
AlmostIsometricBound certify_almost_isometric(const DistanceOracle& metric, RationalParam xi,
                                              const SearchOptions& options = {});

struct ProductTheoremCheck {
  AlmostIsometricBound factor1;
  AlmostIsometricBound factor2;
  std::size_t theta = 0;         // common bound for both factors
  RationalParam product_xi{3, 4};  // (1 + xi) / 2
  std::size_t min_length = 0;    // max(3, 2 theta)
  std::size_t max_length = 0;    // beyond this no product cycle can qualify
  // product_xi-almost isometric cycles of length > 2 theta.
  std::vector<CycleInGraph> counterexamples;
  // Same, at length exactly 2 theta. Kept apart because the contraction
  // argument only rules out |C_1| > theta.
  std::vector<CycleInGraph> boundary_cycles;
  bool exhaustive = true;

  bool holds() const noexcept { return counterexamples.empty() && boundary_cycles.empty(); }
};

ProductTheoremCheck check_product_theorem(const Graph& g1, const Graph& g2, RationalParam xi,
                                          const SearchOptions& options = {});

// Hyperbolicity ---------------------------------------------------------

struct HyperbolicityEstimate {
  std::uint64_t twice_delta = 0;  // delta is a half-integer
  std::string method = "four-point";
  RationalParam delta() const { return {static_cast<std::int64_t>(twice_delta), 2}; }
};

/// Four-point delta: max over quadruples of (L - M) / 2 where L >= M are the
/// two largest of the three pair sums. Throws TooLarge above max_vertices.
HyperbolicityEstimate delta_hyperbolicity(const DistanceOracle& metric, std::size_t max_vertices = 400);

struct HyperbolicBoundReport {
  RationalParam delta_used{1, 1};  // max(delta, 1)
  std::string convention;
  std::size_t max_length = 0;
  bool exhaustive = true;
  struct Row {
    std::size_t length;
    std::size_t cycles_found;
    bool within_bound;
  };
  std::vector<Row> rows;
  std::vector<CycleInGraph> violations;
};

/// Looks for 3/4-almost isometric cycles and compares their lengths with
/// 16 (delta log2(|C|/2) + 1). Advisory: delta comes from the four-point
/// condition, which is not the constant the bound is stated for.
HyperbolicBoundReport check_hyperbolic_bound(const DistanceOracle& metric, const HyperbolicityEstimate& delta,
                                             const SearchOptions& options = {});
// The right-hand side of the bound, as a real number.
long double hyperbolic_length_bound(RationalParam delta, std::size_t length);

// JSON ------------------------------------------------------------------

nlohmann::ordered_json cycle_json(const CycleInGraph& c);
nlohmann::ordered_json to_json(const ShortcutReport& r);
nlohmann::ordered_json to_json(const StrongShortcutProfile& p);
nlohmann::ordered_json to_json(const ProductTheoremCheck& c);
nlohmann::ordered_json to_json(const HyperbolicBoundReport& r);

}  // namespace shortcut
