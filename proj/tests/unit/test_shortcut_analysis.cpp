#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "shortcut/predicates.hpp"
#include "shortcut/shortcut_analysis.hpp"

using namespace shortcut;

namespace {

// Longest isometric closed walk by exhaustive unpruned enumeration.
std::size_t brute_theta(const Graph& g, std::size_t max_len) {
  const auto fw = oracle::floyd_warshall(g);
  std::size_t theta = 0;
  for (std::size_t n = 3; n <= max_len; ++n)
    for (const auto& w : oracle::closed_walks(g, n))
      if (oracle::isometric_by_pairs(fw, w)) {
        theta = n;
        break;
      }
  return theta;
}

int brute_best_antipodal2(const Graph& g, std::size_t n) {
  const auto sub = oracle::subdivide_by_hand(g);
  int best = -1;
  for (const auto& w : oracle::closed_walks(g, n)) best = std::max(best, oracle::min_antipodal2(sub, w));
  return best;
}

}  // namespace

TEST_CASE("shortcut certificates") {
  const auto c7 = shortcut_certificate(DistanceOracle(graphs::cycle(7)), 10);
  CHECK(c7.theta == 7);
  CHECK(c7.exhaustive);

  const auto grid = shortcut_certificate(DistanceOracle(graphs::grid(5, 5)), 12);
  CHECK(grid.theta == 4);
  CHECK(grid.exhaustive);
  CHECK(grid.range_checked == 12);
  CHECK(brute_theta(graphs::grid(4, 4), 8) == 4);

  // The 3-cube has isometric hexagons such as 000-001-011-111-110-100.
  const auto cube = shortcut_certificate(DistanceOracle(graphs::hypercube(3)), 8);
  CHECK(cube.theta == 6);
  CHECK(cube.theta == brute_theta(graphs::hypercube(3), 8));
  const DistanceOracle q3(graphs::hypercube(3));
  for (const auto& w : cube.witnesses) CHECK(is_isometric_cycle(q3, w));
}

TEST_CASE("certificate is monotone in the checked range") {
  const DistanceOracle d(graphs::grid(3, 4));
  std::size_t previous = 0;
  for (std::size_t n = 3; n <= 12; ++n) {
    const auto r = shortcut_certificate(d, n);
    CHECK(r.theta >= previous);
    CHECK(r.theta <= r.range_checked);
    previous = r.theta;
  }
  CHECK(previous == 4);
}

TEST_CASE("strong shortcut profiles") {
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto p = strong_shortcut_profile(DistanceOracle(graphs::cycle(n)), n, n);
    REQUIRE(p.entries.size() == 1);
    CHECK(p.entries[0].xi_max == RationalParam(1, 1));
  }

  const auto grid = graphs::grid(5, 5);
  const DistanceOracle d(grid);
  const auto p = strong_shortcut_profile(d, 3, 8);
  for (const auto& e : p.entries) {
    CHECK(e.exhaustive);
    const int best = brute_best_antipodal2(grid, e.length);
    if (best < 0) {
      CHECK_FALSE(e.xi_max);
      continue;
    }
    REQUIRE(e.xi_max);
    CHECK(*e.xi_max == RationalParam(best, static_cast<std::int64_t>(e.length)));
    CHECK(antipodal_ratio(d, *e.witness) == *e.xi_max);
  }
  CHECK(*p.entries.back().xi_max < RationalParam(1, 1));

  const auto tree = strong_shortcut_profile(DistanceOracle(graphs::regular_tree_ball(4, 2)), 3, 8);
  for (const auto& e : tree.entries) CHECK_FALSE(e.xi_max);
}

TEST_CASE("product graphs") {
  const auto square = product(graphs::path(1), graphs::path(1));
  CHECK(square.graph.vertex_count() == 4);
  CHECK(square.graph.edge_count() == 4);
  for (VertexId v = 0; v < 4; ++v) CHECK(square.graph.degree(v) == 2);
  CHECK(square.graph.is_connected());

  const auto prism = product(graphs::cycle(3), graphs::path(1));
  CHECK(prism.graph.edge_count() == 9);
  CHECK(std::count(prism.edge_kind.begin(), prism.edge_kind.end(), EdgeKind::horizontal) == 6);

  const auto torus = product(graphs::cycle(3), graphs::cycle(3));
  CHECK(torus.graph.vertex_count() == 9);
  CHECK(torus.graph.edge_count() == 18);
  const auto cert = shortcut_certificate(DistanceOracle(torus.graph), 8);
  CHECK(cert.theta == 4);
  CHECK(cert.theta == brute_theta(torus.graph, 8));
}

TEST_CASE("product edges follow the factor rule") {
  const auto g1 = graphs::cycle(4);
  const auto g2 = graphs::path(2);
  const auto pg = product(g1, g2);
  for (VertexId a = 0; a < pg.graph.vertex_count(); ++a)
    for (VertexId b = 0; b < pg.graph.vertex_count(); ++b) {
      const bool expected = (pg.first(a) == pg.first(b) && g2.has_edge(pg.second(a), pg.second(b))) ||
                            (pg.second(a) == pg.second(b) && g1.has_edge(pg.first(a), pg.first(b)));
      CHECK(pg.graph.has_edge(a, b) == expected);
    }
}

TEST_CASE("projecting product cycles onto a factor") {
  const auto g1 = graphs::cycle(4);
  const auto g2 = graphs::path(3);
  const auto pg = product(g1, g2);
  const DistanceOracle d(pg.graph);
  for (const auto& c : random_cycles(d, 2000, 3, 14, 17)) {
    for (int factor : {1, 2}) {
      const auto proj = project_cycle(pg, c, factor);
      CHECK(proj.horizontal + proj.vertical == c.length());
      CHECK(proj.walk.size() == (factor == 1 ? proj.horizontal : proj.vertical));
      const auto& host = factor == 1 ? g1 : g2;
      if (proj.walk.size() >= 2) CHECK(is_closed_walk(host, proj.walk));
    }
  }
}

TEST_CASE("product theorem holds on small products") {
  struct Case {
    Graph g1, g2;
    RationalParam xi;
  };
  const std::vector<Case> cases{{graphs::cycle(3), graphs::cycle(3), {1, 2}},
                                {graphs::cycle(3), graphs::cycle(3), {2, 3}},
                                {graphs::path(2), graphs::cycle(4), {2, 3}},
                                {graphs::path(2), graphs::cycle(4), {3, 4}}};
  for (const auto& c : cases) {
    const auto check = check_product_theorem(c.g1, c.g2, c.xi);
    CHECK(check.exhaustive);
    CHECK(check.min_length <= check.max_length);
    CHECK(check.holds());
    CHECK(check.product_xi == RationalParam(c.xi.den() + c.xi.num(), 2 * c.xi.den()));
  }
}

TEST_CASE("product search agrees with brute force at the boundary length") {
  const auto pg = product(graphs::cycle(3), graphs::cycle(3));
  const auto sub = oracle::subdivide_by_hand(pg.graph);
  std::size_t brute = 0;
  for (const auto& w : oracle::closed_walks(pg.graph, 6)) brute += oracle::almost_isometric(sub, w, 3, 4);
  CHECK(brute == 0);
  std::size_t hexagons = 0;
  for (const auto& w : oracle::closed_walks(pg.graph, 6)) hexagons += oracle::almost_isometric(sub, w, 2, 3);
  CHECK(hexagons > 0);  // 2/3 is attained, so the 3/4 verdict is not vacuous
}

TEST_CASE("hyperplane maps") {
  const auto pg = product(graphs::path(3), graphs::path(3), tree_hyperplanes(graphs::path(3)),
                          tree_hyperplanes(graphs::path(3)));
  REQUIRE(pg.hyperplane);
  std::set<std::size_t> walls(pg.hyperplane->begin(), pg.hyperplane->end());
  CHECK(walls.size() == 6);
  CHECK(even_cycle_hyperplanes(6) == HyperplaneMap{0, 1, 2, 0, 1, 2});
  CHECK_THROWS_AS(tree_hyperplanes(graphs::cycle(4)), NotCubical);
  CHECK_THROWS_AS(even_cycle_hyperplanes(5), NotCubical);
  CHECK(product(graphs::path(3), graphs::path(3)).hyperplane == pg.hyperplane);
  CHECK_FALSE(product(graphs::cycle(3), graphs::path(2)).hyperplane);
  CHECK_FALSE(product(graphs::cycle(4), graphs::path(2)).hyperplane);
  CHECK(product(graphs::cycle(4), graphs::path(2), even_cycle_hyperplanes(4)).hyperplane);
}

namespace {

int brute_twice_delta(const Graph& g) {
  const auto d = oracle::floyd_warshall(g);
  const int n = static_cast<int>(g.vertex_count());
  int best = 0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w) {
          const int a = d[x][y] + d[z][w];
          const int b = d[x][z] + d[y][w];
          const int c = d[x][w] + d[y][z];
          // (a - b) is twice the Gromov-product gap when a is the largest.
          if (a >= b && a >= c) best = std::max(best, a - std::max(b, c));
        }
  return best;
}

}  // namespace

TEST_CASE("four-point hyperbolicity") {
  CHECK(delta_hyperbolicity(DistanceOracle(graphs::regular_tree_ball(3, 3))).twice_delta == 0);
  CHECK(delta_hyperbolicity(DistanceOracle(graphs::path(6))).twice_delta == 0);
  const auto c4 = delta_hyperbolicity(DistanceOracle(graphs::cycle(4)));
  CHECK(c4.twice_delta == static_cast<std::uint64_t>(brute_twice_delta(graphs::cycle(4))));
  CHECK(c4.delta() == RationalParam(1, 1));
  const auto grid = delta_hyperbolicity(DistanceOracle(graphs::grid(5, 5)));
  CHECK(grid.twice_delta == static_cast<std::uint64_t>(brute_twice_delta(graphs::grid(5, 5))));
  CHECK(grid.twice_delta == 8);
  CHECK(grid.method == "four-point");
  CHECK_THROWS_AS(delta_hyperbolicity(DistanceOracle(graphs::grid(5, 5)), 20), TooLarge);
}

TEST_CASE("four-point delta is invariant under relabelling") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 15; ++trial) {
    const auto g = oracle::random_connected_graph(9, 0.2, rng);
    std::vector<VertexId> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(delta_hyperbolicity(DistanceOracle(g)).twice_delta ==
          delta_hyperbolicity(DistanceOracle(relabel(g, perm))).twice_delta);
    CHECK(delta_hyperbolicity(DistanceOracle(g)).twice_delta == static_cast<std::uint64_t>(brute_twice_delta(g)));
  }
}

TEST_CASE("hyperbolic length bound") {
  const auto tree = DistanceOracle(graphs::regular_tree_ball(3, 2));
  const auto t = check_hyperbolic_bound(tree, delta_hyperbolicity(tree));
  CHECK(t.rows.empty());
  CHECK(t.violations.empty());

  const DistanceOracle c6(graphs::cycle(6));
  const auto est = delta_hyperbolicity(c6);
  const auto r = check_hyperbolic_bound(c6, est);
  CHECK(r.violations.empty());
  CHECK(r.delta_used >= RationalParam(1, 1));
  // Direct evaluation: 16 (1 * log2(3) + 1) is about 41.4.
  CHECK(hyperbolic_length_bound({1, 1}, 6) > 41.0L);
  CHECK(hyperbolic_length_bound({1, 1}, 6) < 42.0L);
  REQUIRE_FALSE(r.rows.empty());
  CHECK(r.rows.front().length == 6);

  const DistanceOracle grid(graphs::grid(5, 5));
  const auto g = check_hyperbolic_bound(grid, delta_hyperbolicity(grid));
  CHECK(g.violations.empty());
  CHECK(g.exhaustive);
}
