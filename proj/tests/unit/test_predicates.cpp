#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "shortcut/cycle.hpp"
#include "shortcut/cycle_search.hpp"
#include "shortcut/distance.hpp"
#include "shortcut/predicates.hpp"

using namespace shortcut;

namespace {

// 6-cycle around two adjacent unit squares of the 4x4 grid. Its vertex
// antipodes (1,0) and (1,1) are adjacent, so the minimum antipodal distance
// is 1.
const std::vector<VertexId> kTwoSquares{0, 1, 2, 6, 5, 4};

}  // namespace

TEST_CASE("cycle validation") {
  const auto g = graphs::grid(4, 4);
  CHECK_NOTHROW(CycleInGraph(g, kTwoSquares));
  CHECK_THROWS_AS(CycleInGraph(g, {0, 1, 2}), CycleNotInGraph);
  CHECK_THROWS_AS(CycleInGraph(g, {0, 1}), CycleNotInGraph);
  // Backtracking walks are combinatorial cycles too.
  CHECK_NOTHROW(CycleInGraph(g, {0, 1, 0, 1}));
}

TEST_CASE("canonical form identifies rotations and reflections") {
  const std::vector<VertexId> w{5, 3, 9, 1};
  const auto c = canonical_form(w);
  CHECK(c == std::vector<VertexId>{1, 5, 3, 9});
  CHECK(canonical_form(std::vector<VertexId>{9, 3, 5, 1}) == c);
  CHECK(canonical_form(std::vector<VertexId>{3, 9, 1, 5}) == c);
}

TEST_CASE("isometric cycle examples") {
  const auto c7 = graphs::cycle(7);
  const DistanceOracle d7(c7);
  CHECK(is_isometric_cycle(d7, CycleInGraph(c7, {0, 1, 2, 3, 4, 5, 6})));

  const auto grid = graphs::grid(4, 4);
  const DistanceOracle d(grid);
  const CycleInGraph six(grid, kTwoSquares);
  CHECK_FALSE(is_isometric_cycle(d, six));
  CHECK(min_antipodal_distance2(d, six) == 2);
  CHECK(is_isometric_cycle(d, CycleInGraph(grid, {0, 1, 5, 4})));
}

TEST_CASE("almost isometric examples") {
  const auto grid = graphs::grid(4, 4);
  const DistanceOracle d(grid);
  const CycleInGraph six(grid, kTwoSquares);
  CHECK_FALSE(is_almost_isometric_cycle(d, six, RationalParam(9, 10)));
  CHECK_FALSE(is_almost_isometric_cycle(d, six, RationalParam(3, 5)));
  CHECK(is_almost_isometric_cycle(d, six, RationalParam(1, 3)));
  CHECK_FALSE(is_almost_isometric_cycle(d, six, RationalParam(2, 5)));
  CHECK(is_almost_isometric_cycle(d, CycleInGraph(grid, {0, 1, 5, 4}), RationalParam(1, 2)));
  CHECK_THROWS_AS(is_almost_isometric_cycle(d, six, RationalParam(1, 1)), InvalidParameter);
  CHECK_THROWS_AS(is_almost_isometric_cycle(d, six, RationalParam(0, 1)), InvalidParameter);
}

TEST_CASE("bilipschitz examples") {
  const auto grid = graphs::grid(4, 4);
  const DistanceOracle d(grid);
  const CycleInGraph six(grid, kTwoSquares);
  CHECK(is_bilipschitz_cycle(d, six, RationalParam(3, 1)));
  CHECK_FALSE(is_bilipschitz_cycle(d, six, RationalParam(14, 5)));
  CHECK_FALSE(is_bilipschitz_cycle(d, six, RationalParam(3, 2)));
  CHECK_FALSE(is_bilipschitz_cycle(d, six, RationalParam(5, 4)));
  CHECK(is_bilipschitz_cycle(d, CycleInGraph(grid, {0, 1, 5, 4}), RationalParam(1, 1)));
  CHECK_THROWS_AS(is_bilipschitz_cycle(d, six, RationalParam(1, 2)), InvalidParameter);
}

TEST_CASE("predicates reject cycles outside the host") {
  const auto grid = graphs::grid(4, 4);
  const DistanceOracle d(grid);
  CHECK_THROWS_AS(is_isometric_cycle(d, CycleInGraph::trusted({0, 1, 2})), CycleNotInGraph);
}

TEST_CASE("violating pair for the two-square cycle") {
  const auto grid = graphs::grid(4, 4);
  const DistanceOracle d(grid);
  const CycleInGraph six(grid, kTwoSquares);
  const auto pair = find_violating_pair(d, six, RationalParam(9, 10));
  REQUIRE(pair);
  CHECK(pair->i == 1);
  CHECK(pair->j == 4);
  CHECK(pair->cycle_distance == 3);
  CHECK(pair->graph_distance == 1);
  CHECK_FALSE(find_violating_pair(d, six, RationalParam(1, 3)));
}

// Randomized cross-checks against definitions evaluated on an explicitly
// subdivided host graph.
TEST_CASE("predicate routes agree on random cycles") {
  std::mt19937_64 rng(20240611);
  std::size_t cases = 0;
  std::size_t isometric_seen = 0;
  std::size_t violations_seen = 0;
  while (cases < 12000) {
    std::uniform_int_distribution<int> size(3, 11);
    const auto g = oracle::random_connected_graph(size(rng), 0.3, rng);
    if (g.edge_count() < g.vertex_count()) continue;
    const DistanceOracle d(g);
    const auto sub = oracle::subdivide_by_hand(g);
    const auto fw = oracle::floyd_warshall(g);
    const auto cycles = random_cycles(d, 30, 3, 12, rng());
    for (const auto& c : cycles) {
      ++cases;
      const oracle::Walk walk(c.vertices().begin(), c.vertices().end());
      const std::size_t n = c.length();

      // Point distances equal subdivided-graph distances.
      const auto pts = oracle::subdivided_points(sub, walk);
      for (std::size_t a = 0; a < 2 * n; ++a) {
        const std::size_t b = (a * 7 + 3) % (2 * n);
        REQUIRE(point_distance2(d, c, a, b) == static_cast<std::uint64_t>(sub.dist[pts[a]][pts[b]]));
      }
      REQUIRE(static_cast<int>(min_antipodal_distance2(d, c)) == oracle::min_antipodal2(sub, walk));

      // Lipschitz sanity.
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) REQUIRE(d.distance(c.at(i), c.at(j)) <= c.cycle_distance(i, j));

      // Antipodal isometry test vs all vertex pairs vs K = 1.
      const bool iso = is_isometric_cycle(d, c);
      REQUIRE(iso == oracle::isometric_by_pairs(fw, walk));
      REQUIRE(iso == is_isometric_all_pairs(d, c));
      REQUIRE(iso == is_bilipschitz_cycle(d, c, RationalParam(1, 1)));
      isometric_seen += iso;

      std::uniform_int_distribution<int> den(2, 12);
      const int q = den(rng);
      std::uniform_int_distribution<int> num(1, q - 1);
      const RationalParam xi(num(rng), q);
      const bool almost = is_almost_isometric_cycle(d, c, xi);
      REQUIRE(almost == oracle::almost_isometric(sub, walk, xi.num(), xi.den()));
      REQUIRE(almost == satisfies_pair_relaxation(d, c, xi));

      const RationalParam k(q + num(rng), q);
      REQUIRE(is_bilipschitz_cycle(d, c, k) == oracle::bilipschitz(sub, walk, k.num(), k.den()));

      // A failing cycle always exhibits a far violating vertex pair.
      const auto pair = find_violating_pair(d, c, xi);
      if (!almost) REQUIRE(pair.has_value());
      if (pair) {
        ++violations_seen;
        REQUIRE(pair->cycle_distance + 1 >= n / 2);
        REQUIRE(pair->cycle_distance == c.cycle_distance(pair->i, pair->j));
        REQUIRE(pair->graph_distance == d.distance(c.at(pair->i), c.at(pair->j)));
        REQUIRE(xi.den() * static_cast<std::int64_t>(pair->graph_distance) <
                xi.num() * static_cast<std::int64_t>(pair->cycle_distance));
      }
    }
  }
  CHECK(isometric_seen > 100);
  CHECK(violations_seen > 100);
}

TEST_CASE("subdividing doubles the longest isometric cycle") {
  SearchOptions opts;
  for (const auto& g : {graphs::cycle(5), graphs::grid(3, 3), graphs::complete(4), graphs::hypercube(3),
                        graphs::cycle(4)}) {
    auto longest = [&](const Graph& h, std::size_t max_len) {
      const DistanceOracle d(h);
      std::size_t best = 0;
      for (std::size_t n = 3; n <= max_len; ++n)
        if (!search_cycles(d, n, opts).cycles.empty()) best = n;
      return best;
    };
    const std::size_t theta = longest(g, 8);
    CHECK(longest(subdivide(g), 16) == 2 * theta);
  }
}
