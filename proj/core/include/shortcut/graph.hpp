#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "shortcut/errors.hpp"

namespace shortcut {

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph on vertices 0 .. vertex_count()-1.
///
/// Neighbour lists are kept sorted so that every traversal which breaks ties
/// by vertex id is deterministic. Edges are remembered in insertion order and
/// normalised so that u < v.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);

  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  VertexId add_vertex();
  // Throws InvalidGraph on self-loops, duplicates or out-of-range endpoints.
  void add_edge(VertexId u, VertexId v);

  bool has_edge(VertexId u, VertexId v) const noexcept;
  std::optional<std::size_t> edge_index(VertexId u, VertexId v) const noexcept;

  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
  std::size_t max_degree() const noexcept;

  bool is_connected() const;
  bool is_tree() const { return is_connected() && edge_count() + 1 == vertex_count(); }

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  void set_label(VertexId v, std::string label);

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_ && a.labels_ == b.labels_;
  }

 private:
  static std::uint64_t key(VertexId u, VertexId v) noexcept {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
  }

  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<Edge> edges_;
  std::unordered_map<std::uint64_t, std::size_t> edge_lookup_;
  std::vector<std::string> labels_;
};

/// One new vertex per edge, numbered vertex_count() + edge index.
Graph subdivide(const Graph& g);

/// Relabels vertex v as perm[v]. perm must be a permutation.
Graph relabel(const Graph& g, std::span<const VertexId> perm);

namespace graphs {

Graph cycle(std::size_t n);
// Path with n edges (n + 1 vertices).
Graph path(std::size_t n);
// width x height vertices; vertex (x, y) has id y * width + x.
Graph grid(std::size_t width, std::size_t height);
Graph hypercube(std::size_t dimension);
Graph complete(std::size_t n);
// Ball of the given radius around a vertex of the degree-regular tree.
Graph regular_tree_ball(std::size_t degree, std::size_t radius);

}  // namespace graphs

// Graph JSON: {"vertex_count": n, "edges": [[u, v], ...], "labels": {...}}.
std::string to_json(const Graph& g);
Graph graph_from_json(std::string_view text);
std::string to_dot(const Graph& g, std::string_view name = "G");

}  // namespace shortcut
