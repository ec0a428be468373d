#include "shortcut/cycle.hpp"

#include <algorithm>
#include <string>

namespace shortcut {

bool is_closed_walk(const Graph& host, std::span<const VertexId> walk) noexcept {
  const std::size_t n = walk.size();
  if (n < 2) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const VertexId a = walk[i];
    const VertexId b = walk[(i + 1) % n];
    if (a >= host.vertex_count() || b >= host.vertex_count() || !host.has_edge(a, b)) return false;
  }
  return true;
}

CycleInGraph::CycleInGraph(const Graph& host, std::vector<VertexId> vertices)
    : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) {
    throw CycleNotInGraph("a cycle needs at least 3 edges, got " +
                          std::to_string(vertices_.size()));
  }
  if (!is_closed_walk(host, vertices_)) {
    throw CycleNotInGraph("consecutive cycle vertices are not adjacent in the graph");
  }
}

CycleInGraph CycleInGraph::trusted(std::vector<VertexId> vertices) {
  CycleInGraph c;
  c.vertices_ = std::move(vertices);
  return c;
}

bool CycleInGraph::is_valid_in(const Graph& host) const noexcept {
  return vertices_.size() >= 3 && is_closed_walk(host, vertices_);
}

std::vector<VertexId> CycleInGraph::canonical() const { return canonical_form(vertices_); }

std::vector<VertexId> canonical_form(std::span<const VertexId> walk) {
  const std::size_t n = walk.size();
  std::vector<VertexId> best(walk.begin(), walk.end());
  std::vector<VertexId> candidate(n);
  for (int orientation = 0; orientation < 2; ++orientation) {
    for (std::size_t start = 0; start < n; ++start) {
      for (std::size_t i = 0; i < n; ++i) {
        candidate[i] = orientation == 0 ? walk[(start + i) % n] : walk[(start + n - i) % n];
      }
      if (candidate < best) best = candidate;
    }
  }
  return best;
}

}  // namespace shortcut
