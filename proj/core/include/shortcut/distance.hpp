#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "shortcut/graph.hpp"

namespace shortcut {

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Exact graph metric on the vertices of graph().
///
/// graph() supplies adjacency for cycle searches; distance() may measure in
/// a larger host than graph() (a Cayley ball measured with the word metric of
/// the whole group), so implementations must never return a truncated value.
class Metric {
 public:
  virtual ~Metric() = default;

  virtual const Graph& graph() const noexcept = 0;
  virtual std::uint32_t distance(VertexId u, VertexId v) const = 0;
};

std::vector<std::uint32_t> bfs_distances(const Graph& g, VertexId source);

/// All-pairs shortest paths of a connected graph.
///
/// Entries are stored doubled (2 * d) so that distances between edge
/// midpoints, which are half-integers, share the same integer scale.
class DistanceOracle final : public Metric {
 public:
  explicit DistanceOracle(const Graph& g);

  const Graph& graph() const noexcept override { return host_; }
  std::uint32_t distance(VertexId u, VertexId v) const override { return stored(u, v) / 2; }

  std::uint32_t stored(VertexId u, VertexId v) const { return table_[index(u, v)]; }
  std::uint32_t diameter() const noexcept { return diameter_; }

 private:
  std::size_t index(VertexId u, VertexId v) const { return static_cast<std::size_t>(u) * n_ + v; }

  Graph host_;
  std::size_t n_;
  std::vector<std::uint32_t> table_;
  std::uint32_t diameter_ = 0;
};

/// Lexicographically least geodesic from `from` to `to`: each step moves to
/// the smallest neighbour that is one unit closer to the target.
std::vector<VertexId> lex_geodesic(const Metric& metric, VertexId from, VertexId to);

/// Largest vertex-to-vertex distance in a (possibly disconnected) graph,
/// taken over reachable pairs only.
std::uint32_t graph_diameter(const Graph& g);

}  // namespace shortcut
