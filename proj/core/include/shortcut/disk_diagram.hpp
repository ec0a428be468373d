#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "shortcut/cycle.hpp"
#include "shortcut/distance.hpp"
#include "shortcut/rational.hpp"

namespace shortcut {

struct FillingParams {
  std::size_t theta = 4;
  RationalParam xi{9, 10};
  std::size_t max_length = 20;  // N

  void validate() const;
};

/// One step of the recursive construction. Leaves are cells.
struct DiagramNode {
  std::size_t boundary_length = 0;
  std::size_t area = 0;
  std::uint32_t diameter = 0;  // of the sub-diagram below this node
  std::optional<std::size_t> chord_length;  // |R|, empty for leaves
  std::optional<std::size_t> child1;        // P + R
  std::optional<std::size_t> child2;        // Q + R
};

struct DiskDiagram {
  Graph skeleton;
  std::vector<std::vector<VertexId>> cells;  // closed walks in skeleton
  std::vector<VertexId> boundary;            // closed walk in skeleton
  std::vector<VertexId> labels;              // skeleton vertex -> host vertex
  std::vector<DiagramNode> nodes;            // nodes[0] is the root

  std::size_t area() const noexcept { return cells.size(); }
  std::uint32_t diameter() const { return nodes.empty() ? 0 : nodes.front().diameter; }
};

/// Splits the cycle along lexicographically least geodesic chords between
/// the furthest violating pair until every piece has length <= theta.
/// Property (A) is checked on every piece longer than theta: a piece that is
/// xi-almost isometric raises PropertyAViolated with that piece as witness.
DiskDiagram build_disk_diagram(const DistanceOracle& metric, const CycleInGraph& cycle, const FillingParams& params);

/// Every violated invariant, as text; empty when the diagram is valid.
std::vector<std::string> validate_diagram(const Graph& host, const CycleInGraph& cycle, const DiskDiagram& diagram,
                                          std::size_t theta);

/// b = 2L / ((L - 3) xi + L + 3), defined when L > 3 and theta >= L / (1 - xi).
std::optional<long double> polynomial_base(const FillingParams& params, std::size_t L);

struct FillingRow {
  std::size_t length = 0;
  std::size_t cycles = 0;
  std::size_t max_area = 0;
  std::uint32_t max_diameter = 0;
  bool within_exponential = true;              // area <= 2^n
  std::optional<bool> within_polynomial;       // area <= n^(log_b 2)
  bool diameter_subadditive = true;
};

struct FillingProfile {
  FillingParams params;
  std::optional<std::size_t> L;
  std::optional<long double> base;
  std::vector<FillingRow> rows;
};

FillingProfile filling_profile(const DistanceOracle& metric, const FillingParams& params,
                               const std::vector<CycleInGraph>& sample, std::optional<std::size_t> L = std::nullopt);

bool diameter_subadditive(const DiskDiagram& diagram);
bool area_recurrence_holds(const DiskDiagram& diagram);

nlohmann::ordered_json to_json(const DiskDiagram& diagram);
nlohmann::ordered_json to_json(const FillingProfile& profile);

}  // namespace shortcut
