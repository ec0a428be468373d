#include "shortcut/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include <nlohmann/json.hpp>

#include "json_location.hpp"

namespace shortcut {

Graph::Graph(std::size_t vertex_count) : adjacency_(vertex_count) {}

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
  Graph g(vertex_count);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

VertexId Graph::add_vertex() {
  adjacency_.emplace_back();
  if (!labels_.empty()) labels_.emplace_back();
  return static_cast<VertexId>(adjacency_.size() - 1);
}

void Graph::add_edge(VertexId u, VertexId v) {
  if (u >= vertex_count() || v >= vertex_count()) {
    throw InvalidGraph("edge {" + std::to_string(u) + ", " + std::to_string(v) +
                       "} has an endpoint outside 0.." + std::to_string(vertex_count()));
  }
  if (u == v) throw InvalidGraph("self-loop at vertex " + std::to_string(u));
  const auto [it, inserted] = edge_lookup_.emplace(key(u, v), edges_.size());
  if (!inserted) {
    throw InvalidGraph("duplicate edge {" + std::to_string(u) + ", " + std::to_string(v) + "}");
  }
  edges_.push_back({std::min(u, v), std::max(u, v)});
  auto insert_sorted = [](std::vector<VertexId>& list, VertexId x) {
    list.insert(std::lower_bound(list.begin(), list.end(), x), x);
  };
  insert_sorted(adjacency_[u], v);
  insert_sorted(adjacency_[v], u);
}

bool Graph::has_edge(VertexId u, VertexId v) const noexcept {
  return edge_lookup_.contains(key(u, v));
}

std::optional<std::size_t> Graph::edge_index(VertexId u, VertexId v) const noexcept {
  const auto it = edge_lookup_.find(key(u, v));
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& list : adjacency_) best = std::max(best, list.size());
  return best;
}

bool Graph::is_connected() const {
  if (vertex_count() == 0) return true;
  std::vector<char> seen(vertex_count(), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (VertexId y : adjacency_[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == vertex_count();
}

void Graph::set_label(VertexId v, std::string label) {
  if (v >= vertex_count()) throw InvalidGraph("label for unknown vertex " + std::to_string(v));
  if (labels_.empty()) labels_.resize(vertex_count());
  labels_[v] = std::move(label);
}

Graph subdivide(const Graph& g) {
  const std::size_t n = g.vertex_count();
  Graph out(n + g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    const auto mid = static_cast<VertexId>(n + i);
    out.add_edge(e.u, mid);
    out.add_edge(mid, e.v);
  }
  return out;
}

Graph relabel(const Graph& g, std::span<const VertexId> perm) {
  if (perm.size() != g.vertex_count()) throw InvalidGraph("relabel: permutation size mismatch");
  Graph out(g.vertex_count());
  for (const Edge& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
  if (g.has_labels()) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) out.set_label(perm[v], g.labels()[v]);
  }
  return out;
}

namespace graphs {

Graph cycle(std::size_t n) {
  if (n < 3) throw InvalidGraph("cycle graph needs at least 3 vertices");
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n));
  }
  return g;
}

Graph path(std::size_t n) {
  Graph g(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(i + 1));
  }
  return g;
}

Graph grid(std::size_t width, std::size_t height) {
  Graph g(width * height);
  auto id = [&](std::size_t x, std::size_t y) { return static_cast<VertexId>(y * width + x); };
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      if (x + 1 < width) g.add_edge(id(x, y), id(x + 1, y));
      if (y + 1 < height) g.add_edge(id(x, y), id(x, y + 1));
    }
  }
  return g;
}

Graph hypercube(std::size_t dimension) {
  const std::size_t n = std::size_t{1} << dimension;
  Graph g(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t bit = 0; bit < dimension; ++bit) {
      const std::size_t w = v ^ (std::size_t{1} << bit);
      if (v < w) g.add_edge(static_cast<VertexId>(v), static_cast<VertexId>(w));
    }
  }
  return g;
}

Graph complete(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
    }
  }
  return g;
}

Graph regular_tree_ball(std::size_t degree, std::size_t radius) {
  Graph g(1);
  std::vector<VertexId> frontier{0};
  for (std::size_t level = 0; level < radius; ++level) {
    std::vector<VertexId> next;
    for (VertexId parent : frontier) {
      const std::size_t children = level == 0 ? degree : degree - 1;
      for (std::size_t c = 0; c < children; ++c) {
        const VertexId child = g.add_vertex();
        g.add_edge(parent, child);
        next.push_back(child);
      }
    }
    frontier = std::move(next);
  }
  return g;
}

}  // namespace graphs

std::string to_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["vertex_count"] = g.vertex_count();
  auto edges = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  if (g.has_labels()) {
    auto labels = nlohmann::ordered_json::object();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (!g.labels()[v].empty()) labels[std::to_string(v)] = g.labels()[v];
    }
    j["labels"] = std::move(labels);
  }
  return j.dump();
}

Graph graph_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, column] = detail::line_column(text, e.byte);
    throw ParseError("malformed graph JSON: " + std::string(e.what()), line, column);
  }
  try {
    if (!j.is_object() || !j.contains("vertex_count") || !j.contains("edges")) {
      throw InvalidGraph("graph JSON needs \"vertex_count\" and \"edges\"");
    }
    const auto n = j.at("vertex_count").get<std::int64_t>();
    if (n < 0) throw InvalidGraph("vertex_count must be non-negative");
    Graph g(static_cast<std::size_t>(n));
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InvalidGraph("each edge must be a [u, v] pair");
      const auto u = e[0].get<std::int64_t>();
      const auto v = e[1].get<std::int64_t>();
      if (u < 0 || v < 0) throw InvalidGraph("negative vertex id in edge list");
      g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    if (j.contains("labels")) {
      for (const auto& [key, value] : j.at("labels").items()) {
        g.set_label(static_cast<VertexId>(std::stoul(key)), value.get<std::string>());
      }
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidGraph(std::string("graph JSON has the wrong shape: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw InvalidGraph("label keys must be vertex ids");
  }
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    if (g.has_labels() && !g.labels()[v].empty()) out << " [label=\"" << g.labels()[v] << "\"]";
    out << ";\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace shortcut
