#include "shortcut/disk_diagram.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "shortcut/errors.hpp"
#include "shortcut/predicates.hpp"

namespace shortcut {

void FillingParams::validate() const {
  if (theta < 3) throw InvalidParameter("theta must be at least 3");
  if (max_length < theta) throw InvalidParameter("N must be at least theta");
  if (!xi.is_valid_xi()) throw InvalidParameter("xi must lie strictly between 0 and 1, got " + xi.to_string());
}

namespace {

class UnionFind {
 public:
  std::size_t add() {
    parent_.push_back(parent_.size());
    return parent_.size() - 1;
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

struct RawNode {
  DiagramNode node;
  std::size_t first_cell = 0;
  std::size_t last_cell = 0;
};

class Builder {
 public:
  Builder(const DistanceOracle& metric, const FillingParams& params) : metric_(metric), params_(params) {}

  std::size_t new_vertex(VertexId label) {
    labels_.push_back(label);
    return uf_.add();
  }

  // Returns the node index of this piece.
  std::size_t build(const std::vector<std::size_t>& boundary) {
    const std::size_t index = nodes_.size();
    nodes_.push_back({});
    nodes_[index].node.boundary_length = boundary.size();
    nodes_[index].first_cell = cells_.size();

    if (boundary.size() <= params_.theta) {
      cells_.push_back(boundary);
      nodes_[index].node.area = 1;
      nodes_[index].last_cell = cells_.size();
      return index;
    }

    std::vector<VertexId> walk;
    walk.reserve(boundary.size());
    for (auto b : boundary) walk.push_back(labels_[b]);
    const auto host_cycle = CycleInGraph::trusted(walk);
    if (is_almost_isometric_cycle(metric_, host_cycle, params_.xi)) throw PropertyAViolated(walk);
    const auto pair = find_violating_pair(metric_, host_cycle, params_.xi);
    if (!pair) throw Error("no violating pair on a cycle that is not almost isometric");

    const std::size_t i = pair->i;
    const std::size_t j = pair->j;
    const std::size_t n = boundary.size();
    const auto chord = lex_geodesic(metric_, walk[i], walk[j]);
    const std::size_t r = chord.size() - 1;

    // Diagram path b_i = c_0, c_1, ..., c_r = b_j along the chord.
    std::vector<std::size_t> interior;
    for (std::size_t k = 1; k < r; ++k) interior.push_back(new_vertex(chord[k]));
    if (r == 0) uf_.unite(boundary[i], boundary[j]);

    std::vector<std::size_t> child1(boundary.begin() + static_cast<std::ptrdiff_t>(i),
                                    boundary.begin() + static_cast<std::ptrdiff_t>(j) + (r == 0 ? 0 : 1));
    child1.insert(child1.end(), interior.rbegin(), interior.rend());

    std::vector<std::size_t> child2;
    for (std::size_t k = j; k != i; k = (k + 1) % n) child2.push_back(boundary[k]);
    if (r > 0) child2.push_back(boundary[i]);
    child2.insert(child2.end(), interior.begin(), interior.end());

    const auto c1 = build(child1);
    const auto c2 = build(child2);
    auto& node = nodes_[index].node;
    node.chord_length = r;
    node.child1 = c1;
    node.child2 = c2;
    node.area = nodes_[c1].node.area + nodes_[c2].node.area;
    nodes_[index].last_cell = cells_.size();
    return index;
  }

  DiskDiagram finish(const std::vector<std::size_t>& boundary) {
    DiskDiagram d;
    std::unordered_map<std::size_t, VertexId> compact;
    auto id = [&](std::size_t raw) {
      const auto rep = uf_.find(raw);
      auto [it, inserted] = compact.emplace(rep, static_cast<VertexId>(compact.size()));
      if (inserted) d.labels.push_back(labels_[rep]);
      return it->second;
    };
    for (auto b : boundary) d.boundary.push_back(id(b));
    for (const auto& cell : cells_) {
      std::vector<VertexId> mapped;
      for (auto v : cell) mapped.push_back(id(v));
      d.cells.push_back(std::move(mapped));
    }
    d.skeleton = Graph(compact.size());
    auto add_walk = [&](const std::vector<VertexId>& w) {
      for (std::size_t k = 0; k < w.size(); ++k) {
        const auto a = w[k];
        const auto b = w[(k + 1) % w.size()];
        if (a != b && !d.skeleton.has_edge(a, b)) d.skeleton.add_edge(a, b);
      }
    };
    add_walk(d.boundary);
    for (const auto& cell : d.cells) add_walk(cell);

    for (const auto& raw : nodes_) {
      DiagramNode node = raw.node;
      node.diameter = subdiagram_diameter(d, raw.first_cell, raw.last_cell);
      d.nodes.push_back(node);
    }
    return d;
  }

 private:
  static std::uint32_t subdiagram_diameter(const DiskDiagram& d, std::size_t first, std::size_t last) {
    std::unordered_map<VertexId, VertexId> local;
    std::vector<std::pair<VertexId, VertexId>> edges;
    auto index = [&](VertexId v) { return local.emplace(v, static_cast<VertexId>(local.size())).first->second; };
    for (std::size_t c = first; c < last; ++c) {
      const auto& w = d.cells[c];
      for (std::size_t k = 0; k < w.size(); ++k) {
        const auto a = index(w[k]);
        const auto b = index(w[(k + 1) % w.size()]);
        if (a != b) edges.emplace_back(std::min(a, b), std::max(a, b));
      }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    Graph sub(local.size());
    for (auto [a, b] : edges) sub.add_edge(a, b);
    return graph_diameter(sub);
  }

  const DistanceOracle& metric_;
  FillingParams params_;
  std::vector<VertexId> labels_;
  UnionFind uf_;
  std::vector<std::vector<std::size_t>> cells_;
  std::vector<RawNode> nodes_;
};

}  // namespace

DiskDiagram build_disk_diagram(const DistanceOracle& metric, const CycleInGraph& cycle, const FillingParams& params) {
  params.validate();
  require_cycle_in(metric, cycle);
  if (cycle.length() > params.max_length) throw CycleTooLong(cycle.length(), params.max_length);
  Builder builder(metric, params);
  std::vector<std::size_t> boundary;
  for (auto v : cycle.vertices()) boundary.push_back(builder.new_vertex(v));
  builder.build(boundary);
  return builder.finish(boundary);
}

std::vector<std::string> validate_diagram(const Graph& host, const CycleInGraph& cycle, const DiskDiagram& d,
                                          std::size_t theta) {
  std::vector<std::string> problems;
  const auto& sk = d.skeleton;
  if (d.labels.size() != sk.vertex_count()) {
    problems.push_back("label map does not cover the skeleton");
    return problems;
  }
  for (const auto& e : sk.edges()) {
    if (!host.has_edge(d.labels[e.u], d.labels[e.v])) {
      problems.push_back("skeleton edge {" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                         "} does not map to a host edge");
    }
  }
  auto labelled = [&](const std::vector<VertexId>& w) {
    std::vector<VertexId> out;
    for (auto v : w) out.push_back(d.labels.at(v));
    return out;
  };
  for (std::size_t c = 0; c < d.cells.size(); ++c) {
    const auto& cell = d.cells[c];
    const std::string name = "cell " + std::to_string(c);
    if (cell.size() < 2 || cell.size() > theta) problems.push_back(name + " has length " + std::to_string(cell.size()));
    if (!is_closed_walk(sk, cell)) problems.push_back(name + " is not a closed walk in the skeleton");
    if (!is_closed_walk(host, labelled(cell))) problems.push_back(name + " does not map to a closed walk in the host");
  }
  if (!is_closed_walk(sk, d.boundary)) problems.push_back("boundary is not a closed walk in the skeleton");
  const std::vector<VertexId> input(cycle.vertices().begin(), cycle.vertices().end());
  if (labelled(d.boundary) != input) problems.push_back("labelled boundary differs from the input cycle");
  if (d.nodes.empty() || d.nodes.front().area != d.area()) problems.push_back("root area differs from the cell count");
  if (!d.nodes.empty() && d.nodes.front().diameter != graph_diameter(sk)) {
    problems.push_back("root diameter differs from the skeleton diameter");
  }
  return problems;
}

bool diameter_subadditive(const DiskDiagram& d) {
  for (const auto& node : d.nodes) {
    if (!node.child1) continue;
    if (node.diameter > d.nodes[*node.child1].diameter + d.nodes[*node.child2].diameter) return false;
  }
  return true;
}

bool area_recurrence_holds(const DiskDiagram& d) {
  for (const auto& node : d.nodes) {
    if (!node.child1) continue;
    if (node.area > 2 * std::max(d.nodes[*node.child1].area, d.nodes[*node.child2].area)) return false;
    if (node.boundary_length <= d.nodes[*node.child1].boundary_length ||
        node.boundary_length <= d.nodes[*node.child2].boundary_length) {
      return false;
    }
  }
  return true;
}

std::optional<long double> polynomial_base(const FillingParams& params, std::size_t L) {
  const auto p = static_cast<long double>(params.xi.num());
  const auto q = static_cast<long double>(params.xi.den());
  const auto l = static_cast<long double>(L);
  if (L <= 3) return std::nullopt;
  // theta >= L / (1 - xi)  <=>  theta (q - p) >= L q
  if (static_cast<std::int64_t>(params.theta) * (params.xi.den() - params.xi.num()) <
      static_cast<std::int64_t>(L) * params.xi.den()) {
    return std::nullopt;
  }
  return 2 * l * q / ((l - 3) * p + (l + 3) * q);
}

namespace {

bool within_power(std::size_t area, std::size_t n, long double exponent) {
  const long double bound = std::pow(static_cast<long double>(n), exponent);
  return static_cast<long double>(area) <= bound * (1 + 1e-12L);
}

}  // namespace

FillingProfile filling_profile(const DistanceOracle& metric, const FillingParams& params,
                               const std::vector<CycleInGraph>& sample, std::optional<std::size_t> L) {
  FillingProfile profile;
  profile.params = params;
  profile.L = L;
  if (L) profile.base = polynomial_base(params, *L);
  std::vector<FillingRow> by_length(params.max_length + 1);
  for (const auto& cycle : sample) {
    const auto d = build_disk_diagram(metric, cycle, params);
    const auto problems = validate_diagram(metric.graph(), cycle, d, params.theta);
    if (!problems.empty()) throw Error("invalid disk diagram: " + problems.front());
    const std::size_t n = cycle.length();
    auto& row = by_length[n];
    row.length = n;
    row.cycles += 1;
    row.max_area = std::max(row.max_area, d.area());
    row.max_diameter = std::max(row.max_diameter, d.diameter());
    row.within_exponential = row.within_exponential && within_power(d.area(), 2, static_cast<long double>(n));
    if (profile.base) {
      const long double exponent = std::log(2.0L) / std::log(*profile.base);
      row.within_polynomial = row.within_polynomial.value_or(true) && within_power(d.area(), n, exponent);
    }
    row.diameter_subadditive = row.diameter_subadditive && diameter_subadditive(d);
  }
  for (auto& row : by_length)
    if (row.cycles > 0) profile.rows.push_back(row);
  return profile;
}

namespace {

nlohmann::ordered_json walk_json(const std::vector<VertexId>& w) { return nlohmann::ordered_json(w); }

}  // namespace

nlohmann::ordered_json to_json(const DiskDiagram& d) {
  nlohmann::ordered_json cells = nlohmann::ordered_json::array();
  for (const auto& c : d.cells) cells.push_back(walk_json(c));
  nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
  for (const auto& n : d.nodes) {
    nlohmann::ordered_json row{{"boundary_length", n.boundary_length}, {"area", n.area}, {"diameter", n.diameter}};
    if (n.chord_length) {
      row["chord_length"] = *n.chord_length;
      row["children"] = {*n.child1, *n.child2};
    }
    nodes.push_back(std::move(row));
  }
  return {{"skeleton", nlohmann::ordered_json::parse(to_json(d.skeleton))},
          {"cells", cells},
          {"boundary", walk_json(d.boundary)},
          {"labels", walk_json(d.labels)},
          {"area", d.area()},
          {"diameter", d.diameter()},
          {"nodes", nodes}};
}

nlohmann::ordered_json to_json(const FillingProfile& p) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : p.rows) {
    nlohmann::ordered_json row{{"n", r.length},
                               {"cycles", r.cycles},
                               {"max_area", r.max_area},
                               {"max_diameter", r.max_diameter},
                               {"area_le_2^n", r.within_exponential},
                               {"diameter_subadditive", r.diameter_subadditive}};
    if (r.within_polynomial) row["area_le_n^log_b(2)"] = *r.within_polynomial;
    rows.push_back(std::move(row));
  }
  nlohmann::ordered_json out{{"theta", p.params.theta}, {"xi", p.params.xi.to_string()}, {"N", p.params.max_length}};
  if (p.L) out["L"] = *p.L;
  if (p.base) out["b"] = static_cast<double>(*p.base);
  out["rows"] = rows;
  return out;
}

}  // namespace shortcut
