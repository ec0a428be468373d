#include "shortcut/shortcut_analysis.hpp"

#include <algorithm>
#include <cmath>

#include "shortcut/errors.hpp"
#include "shortcut/predicates.hpp"

namespace shortcut {

namespace {

// Antipodal points of an even cycle include vertex pairs (distance <= diam);
// those of an odd cycle are vertex-midpoint pairs (distance <= diam + 1/2).
// Either way xi |C| <= 2 diam + 1.
std::size_t almost_isometric_length_cap(std::uint32_t diameter, RationalParam xi) {
  const auto numerator = (2 * static_cast<std::int64_t>(diameter) + 1) * xi.den();
  return static_cast<std::size_t>(numerator / xi.num());
}

SearchOptions first_hit(const SearchOptions& options, CycleMode mode) {
  SearchOptions opts = options;
  opts.mode = mode;
  opts.max_results = 1;
  return opts;
}

}  // namespace

ShortcutReport shortcut_certificate(const DistanceOracle& metric, std::size_t max_len, const SearchOptions& options) {
  ShortcutReport report;
  report.range_checked = max_len;
  const auto opts = first_hit(options, CycleMode::isometric());
  const std::size_t limit = std::min<std::size_t>(max_len, 2 * std::size_t{metric.diameter()} + 1);
  for (std::size_t n = 3; n <= limit; ++n) {
    const auto found = search_cycles(metric, n, opts);
    report.expansions += found.expansions;
    report.exhaustive = report.exhaustive && found.complete;
    if (!found.cycles.empty()) {
      report.theta = n;
      report.witnesses.push_back(found.cycles.front());
    }
  }
  if (options.strategy == SearchStrategy::heuristic) report.exhaustive = false;
  return report;
}

StrongShortcutProfile strong_shortcut_profile(const Metric& metric, std::size_t min_len, std::size_t max_len,
                                              const SearchOptions& options) {
  if (min_len < 3) throw InvalidParameter("profile lengths start at 3");
  StrongShortcutProfile profile;
  for (std::size_t n = min_len; n <= max_len; ++n) {
    const auto r = max_antipodal_ratio(metric, n, options);
    profile.entries.push_back({n, r.best, r.witness, r.complete});
  }
  return profile;
}

HyperplaneMap tree_hyperplanes(const Graph& tree) {
  if (!tree.is_tree()) throw NotCubical("tree_hyperplanes needs a tree");
  HyperplaneMap map(tree.edge_count());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
  return map;
}

HyperplaneMap even_cycle_hyperplanes(std::size_t n) {
  if (n < 4 || n % 2 != 0) throw NotCubical("only even cycles of length >= 4 have a hyperplane structure");
  HyperplaneMap map(n);
  for (std::size_t i = 0; i < n; ++i) map[i] = i % (n / 2);
  return map;
}

ProductGraph product(const Graph& g1, const Graph& g2, std::optional<HyperplaneMap> h1,
                     std::optional<HyperplaneMap> h2) {
  if (h1 && h1->size() != g1.edge_count()) throw InvalidParameter("hyperplane map of factor 1 has the wrong size");
  if (h2 && h2->size() != g2.edge_count()) throw InvalidParameter("hyperplane map of factor 2 has the wrong size");
  // Trees have a canonical hyperplane structure, so their maps may be omitted.
  if (!h1 && g1.is_tree()) h1 = tree_hyperplanes(g1);
  if (!h2 && g2.is_tree()) h2 = tree_hyperplanes(g2);
  ProductGraph pg;
  pg.factor1_vertices = g1.vertex_count();
  pg.factor2_vertices = g2.vertex_count();
  pg.graph = Graph(g1.vertex_count() * g2.vertex_count());
  const bool walls = h1 && h2;
  std::vector<std::size_t> hyper;
  const std::size_t offset = walls && !h1->empty() ? *std::max_element(h1->begin(), h1->end()) + 1 : 0;

  const auto& e1 = g1.edges();
  for (std::size_t i = 0; i < e1.size(); ++i) {
    for (VertexId v2 = 0; v2 < g2.vertex_count(); ++v2) {
      pg.graph.add_edge(pg.vertex(e1[i].u, v2), pg.vertex(e1[i].v, v2));
      pg.edge_kind.push_back(EdgeKind::horizontal);
      pg.factor_edge.push_back(i);
      if (walls) hyper.push_back((*h1)[i]);
    }
  }
  const auto& e2 = g2.edges();
  for (VertexId v1 = 0; v1 < g1.vertex_count(); ++v1) {
    for (std::size_t j = 0; j < e2.size(); ++j) {
      pg.graph.add_edge(pg.vertex(v1, e2[j].u), pg.vertex(v1, e2[j].v));
      pg.edge_kind.push_back(EdgeKind::vertical);
      pg.factor_edge.push_back(j);
      if (walls) hyper.push_back(offset + (*h2)[j]);
    }
  }
  for (VertexId v = 0; v < pg.graph.vertex_count(); ++v) {
    pg.graph.set_label(v, std::to_string(pg.first(v)) + "," + std::to_string(pg.second(v)));
  }
  if (walls) pg.hyperplane = std::move(hyper);
  return pg;
}

FactorProjection project_cycle(const ProductGraph& pg, const CycleInGraph& cycle, int factor) {
  if (factor != 1 && factor != 2) throw InvalidParameter("factor must be 1 or 2");
  if (!cycle.is_valid_in(pg.graph)) throw CycleNotInGraph("cycle is not a closed walk in the product");
  FactorProjection proj;
  const std::size_t n = cycle.length();
  for (std::size_t i = 0; i < n; ++i) {
    const auto idx = *pg.graph.edge_index(cycle.at(i), cycle.at(i + 1));
    const bool horizontal = pg.edge_kind[idx] == EdgeKind::horizontal;
    (horizontal ? proj.horizontal : proj.vertical) += 1;
    if (horizontal == (factor == 1)) {
      proj.walk.push_back(factor == 1 ? pg.first(cycle.at(i)) : pg.second(cycle.at(i)));
    }
  }
  return proj;
}

AlmostIsometricBound certify_almost_isometric(const DistanceOracle& metric, RationalParam xi,
                                              const SearchOptions& options) {
  AlmostIsometricBound bound;
  bound.xi = xi;
  const auto opts = first_hit(options, CycleMode::almost_isometric(xi));
  bound.range_checked = almost_isometric_length_cap(metric.diameter(), xi);
  for (std::size_t n = 3; n <= bound.range_checked; ++n) {
    const auto found = search_cycles(metric, n, opts);
    bound.exhaustive = bound.exhaustive && found.complete;
    if (!found.cycles.empty()) bound.theta = n;
  }
  if (options.strategy == SearchStrategy::heuristic) bound.exhaustive = false;
  return bound;
}

ProductTheoremCheck check_product_theorem(const Graph& g1, const Graph& g2, RationalParam xi,
                                          const SearchOptions& options) {
  ProductTheoremCheck check;
  check.factor1 = certify_almost_isometric(DistanceOracle(g1), xi, options);
  check.factor2 = certify_almost_isometric(DistanceOracle(g2), xi, options);
  check.theta = std::max(check.factor1.theta, check.factor2.theta);
  check.product_xi = RationalParam(xi.den() + xi.num(), 2 * xi.den());
  const auto pg = product(g1, g2);
  const DistanceOracle metric(pg.graph);
  check.min_length = std::max<std::size_t>(3, 2 * check.theta);
  check.max_length = almost_isometric_length_cap(metric.diameter(), check.product_xi);
  check.exhaustive = check.factor1.exhaustive && check.factor2.exhaustive;

  SearchOptions opts = options;
  opts.mode = CycleMode::almost_isometric(check.product_xi);
  for (std::size_t n = check.min_length; n <= check.max_length; ++n) {
    const auto found = search_cycles(metric, n, opts);
    check.exhaustive = check.exhaustive && found.complete;
    auto& sink = n == 2 * check.theta ? check.boundary_cycles : check.counterexamples;
    sink.insert(sink.end(), found.cycles.begin(), found.cycles.end());
  }
  return check;
}

HyperbolicityEstimate delta_hyperbolicity(const DistanceOracle& metric, std::size_t max_vertices) {
  const auto n = static_cast<VertexId>(metric.graph().vertex_count());
  if (n > max_vertices) {
    throw TooLarge("four-point scan limited to " + std::to_string(max_vertices) + " vertices, graph has " +
                   std::to_string(n));
  }
  HyperbolicityEstimate est;
  for (VertexId x = 0; x < n; ++x)
    for (VertexId y = x + 1; y < n; ++y)
      for (VertexId z = y + 1; z < n; ++z)
        for (VertexId w = z + 1; w < n; ++w) {
          std::uint64_t s[3] = {std::uint64_t{metric.distance(x, y)} + metric.distance(z, w),
                                std::uint64_t{metric.distance(x, z)} + metric.distance(y, w),
                                std::uint64_t{metric.distance(x, w)} + metric.distance(y, z)};
          std::sort(s, s + 3);
          est.twice_delta = std::max(est.twice_delta, s[2] - s[1]);
        }
  return est;
}

long double hyperbolic_length_bound(RationalParam delta, std::size_t length) {
  return 16.0L * (static_cast<long double>(delta.num()) / delta.den() *
                      std::log2(static_cast<long double>(length) / 2.0L) +
                  1.0L);
}

HyperbolicBoundReport check_hyperbolic_bound(const DistanceOracle& metric, const HyperbolicityEstimate& delta,
                                             const SearchOptions& options) {
  HyperbolicBoundReport report;
  report.delta_used = std::max(delta.delta(), RationalParam(1, 1));
  report.convention = delta.method;
  const RationalParam xi(3, 4);
  report.max_length = almost_isometric_length_cap(metric.diameter(), xi);
  SearchOptions opts = options;
  opts.mode = CycleMode::almost_isometric(xi);
  for (std::size_t n = 3; n <= report.max_length; ++n) {
    const auto found = search_cycles(metric, n, opts);
    report.exhaustive = report.exhaustive && found.complete;
    if (found.cycles.empty()) continue;
    const bool ok = static_cast<long double>(n) <= hyperbolic_length_bound(report.delta_used, n);
    report.rows.push_back({n, found.cycles.size(), ok});
    if (!ok) report.violations.push_back(found.cycles.front());
  }
  return report;
}

nlohmann::ordered_json cycle_json(const CycleInGraph& c) {
  return nlohmann::ordered_json(std::vector<VertexId>(c.vertices().begin(), c.vertices().end()));
}

namespace {

nlohmann::ordered_json cycles_json(const std::vector<CycleInGraph>& cycles) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& c : cycles) out.push_back(cycle_json(c));
  return out;
}

nlohmann::ordered_json bound_json(const AlmostIsometricBound& b) {
  return {{"xi", b.xi.to_string()}, {"theta", b.theta}, {"range_checked", b.range_checked},
          {"exhaustive", b.exhaustive}};
}

}  // namespace

nlohmann::ordered_json to_json(const ShortcutReport& r) {
  return {{"theta", r.theta},           {"range_checked", r.range_checked}, {"exhaustive", r.exhaustive},
          {"witnesses", cycles_json(r.witnesses)}, {"expansions", r.expansions}};
}

nlohmann::ordered_json to_json(const StrongShortcutProfile& p) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& e : p.entries) {
    nlohmann::ordered_json row{{"n", e.length}};
    row["xi_max"] = e.xi_max ? nlohmann::ordered_json(e.xi_max->to_string()) : nlohmann::ordered_json(nullptr);
    row["witness"] = e.witness ? cycle_json(*e.witness) : nlohmann::ordered_json(nullptr);
    row["exhaustive"] = e.exhaustive;
    out.push_back(std::move(row));
  }
  return out;
}

nlohmann::ordered_json to_json(const ProductTheoremCheck& c) {
  return {{"factor1", bound_json(c.factor1)},
          {"factor2", bound_json(c.factor2)},
          {"theta", c.theta},
          {"product_xi", c.product_xi.to_string()},
          {"lengths", {c.min_length, c.max_length}},
          {"counterexamples", cycles_json(c.counterexamples)},
          {"boundary_cycles", cycles_json(c.boundary_cycles)},
          {"exhaustive", c.exhaustive},
          {"holds", c.holds()}};
}

nlohmann::ordered_json to_json(const HyperbolicBoundReport& r) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"length", row.length}, {"cycles_found", row.cycles_found}, {"within_bound", row.within_bound}});
  }
  return {{"delta_used", r.delta_used.to_string()},
          {"convention", r.convention},
          {"advisory", true},
          {"max_length", r.max_length},
          {"exhaustive", r.exhaustive},
          {"rows", rows},
          {"violations", cycles_json(r.violations)}};
}

}  // namespace shortcut
