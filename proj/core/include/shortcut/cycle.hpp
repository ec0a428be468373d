#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "shortcut/graph.hpp"

namespace shortcut {

/// A closed nondegenerate combinatorial walk v_0 v_1 ... v_{n-1} (v_0).
///
/// Vertices may repeat; consecutive vertices, including v_{n-1} and v_0,
/// must be adjacent in the host graph.
class CycleInGraph {
 public:
  CycleInGraph(const Graph& host, std::vector<VertexId> vertices);

  // Skips validation; the caller guarantees the walk is closed and
  // nondegenerate in the graph it will be used with.
  static CycleInGraph trusted(std::vector<VertexId> vertices);

  std::size_t length() const noexcept { return vertices_.size(); }
  std::span<const VertexId> vertices() const noexcept { return vertices_; }
  VertexId at(std::size_t i) const noexcept { return vertices_[i % vertices_.size()]; }

  // Distance along the cycle between positions i and j.
  std::size_t cycle_distance(std::size_t i, std::size_t j) const noexcept {
    const std::size_t n = length();
    const std::size_t gap = i > j ? i - j : j - i;
    return gap < n - gap ? gap : n - gap;
  }

  bool is_valid_in(const Graph& host) const noexcept;
  std::vector<VertexId> canonical() const;

  friend bool operator==(const CycleInGraph&, const CycleInGraph&) = default;

 private:
  CycleInGraph() = default;

  std::vector<VertexId> vertices_;
};

/// Lexicographically least sequence among all rotations of both
/// orientations; two walks describe the same unbased, unoriented cycle iff
/// their canonical forms agree.
std::vector<VertexId> canonical_form(std::span<const VertexId> walk);

bool is_closed_walk(const Graph& host, std::span<const VertexId> walk) noexcept;

}  // namespace shortcut
