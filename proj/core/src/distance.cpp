#include "shortcut/distance.hpp"

#include <algorithm>

namespace shortcut {

std::vector<std::uint32_t> bfs_distances(const Graph& g, VertexId source) {
  std::vector<std::uint32_t> dist(g.vertex_count(), kUnreachable);
  std::vector<VertexId> queue;
  queue.reserve(g.vertex_count());
  dist.at(source) = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId x = queue[head];
    for (VertexId y : g.neighbors(x)) {
      if (dist[y] == kUnreachable) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

DistanceOracle::DistanceOracle(const Graph& g)
    : host_(g), n_(g.vertex_count()), table_(n_ * n_, 0) {
  for (VertexId s = 0; s < n_; ++s) {
    const auto row = bfs_distances(g, s);
    for (VertexId t = 0; t < n_; ++t) {
      if (row[t] == kUnreachable) throw DisconnectedGraph();
      table_[index(s, t)] = 2 * row[t];
      diameter_ = std::max(diameter_, row[t]);
    }
  }
}

std::vector<VertexId> lex_geodesic(const Metric& metric, VertexId from, VertexId to) {
  std::vector<VertexId> path{from};
  std::uint32_t remaining = metric.distance(from, to);
  VertexId current = from;
  while (remaining > 0) {
    bool advanced = false;
    for (VertexId y : metric.graph().neighbors(current)) {
      if (metric.distance(y, to) + 1 == remaining) {
        current = y;
        advanced = true;
        break;
      }
    }
    // Only possible when the metric measures in a host larger than graph().
    if (!advanced) throw Error("no geodesic inside the graph between the requested vertices");
    path.push_back(current);
    --remaining;
  }
  return path;
}

std::uint32_t graph_diameter(const Graph& g) {
  std::uint32_t best = 0;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    for (std::uint32_t d : bfs_distances(g, s)) {
      if (d != kUnreachable) best = std::max(best, d);
    }
  }
  return best;
}

}  // namespace shortcut
