#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "shortcut/cycle_search.hpp"
#include "shortcut/distance.hpp"
#include "shortcut/wall_cycle.hpp"

using namespace shortcut;

namespace {

using Coloring = std::vector<WallId>;

// Brute-force reference implementations working directly on colour lists.

std::map<WallId, std::size_t> segment_counts(const Coloring& c, std::size_t start, std::size_t len) {
  std::map<WallId, std::size_t> counts;
  for (std::size_t k = 0; k < len; ++k) ++counts[c[(start + k) % c.size()]];
  return counts;
}

bool cross_oracle(const Coloring& c, WallId w1, WallId w2) {
  const std::size_t n = c.size();
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t len = 1; len <= n; ++len) {
      const WallId first = c[s];
      const WallId last = c[(s + len - 1) % n];
      if (first != last || (first != w1 && first != w2)) continue;
      const WallId other = first == w1 ? w2 : w1;
      if (segment_counts(c, s, len)[other] % 2 == 1) return true;
    }
  }
  return false;
}

std::size_t alpha_oracle(const Coloring& c, std::size_t u, std::size_t v) {
  if (u > v) std::swap(u, v);
  std::size_t odd = 0;
  for (auto [w, k] : segment_counts(c, u, v - u)) odd += k % 2;
  return odd;
}

std::size_t dimension_oracle(const Coloring& c) {
  std::vector<WallId> walls(c.begin(), c.end());
  std::sort(walls.begin(), walls.end());
  walls.erase(std::unique(walls.begin(), walls.end()), walls.end());
  std::size_t best = 1;
  for (std::uint32_t mask = 1; mask < (1U << walls.size()); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size <= best) continue;
    bool clique = true;
    for (std::size_t i = 0; i < walls.size() && clique; ++i) {
      for (std::size_t j = i + 1; j < walls.size() && clique; ++j) {
        if ((mask >> i & 1U) && (mask >> j & 1U)) clique = cross_oracle(c, walls[i], walls[j]);
      }
    }
    if (clique) best = size;
  }
  return best;
}

// Premise in floating point: d_alpha >= (5d-1)/(5d) * n/2 for antipodes.
bool premise_oracle(const Coloring& c, std::size_t d) {
  const std::size_t n = c.size();
  const double need = (5.0 * static_cast<double>(d) - 1.0) / (5.0 * static_cast<double>(d)) * static_cast<double>(n) / 2.0;
  for (std::size_t u = 0; u < n / 2; ++u) {
    if (static_cast<double>(alpha_oracle(c, u, u + n / 2)) + 1e-9 < need) return false;
  }
  return true;
}

void all_pairings(std::vector<std::size_t>& partner, std::vector<Coloring>& out) {
  const std::size_t n = partner.size();
  std::size_t a = 0;
  while (a < n && partner[a] != SIZE_MAX) ++a;
  if (a == n) {
    Coloring c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = std::min(i, partner[i]);
    out.push_back(c);
    return;
  }
  for (std::size_t b = a + 1; b < n; ++b) {
    if (partner[b] != SIZE_MAX) continue;
    partner[a] = b;
    partner[b] = a;
    all_pairings(partner, out);
    partner[a] = partner[b] = SIZE_MAX;
  }
}

// Dihedral class key computed independently: the sorted set of chords, each
// as an unordered pair, minimised over all symmetries.
std::vector<std::pair<std::size_t, std::size_t>> chord_key(const Coloring& c) {
  const std::size_t n = c.size();
  std::vector<std::pair<std::size_t, std::size_t>> best;
  for (int reflect = 0; reflect < 2; ++reflect) {
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<std::pair<std::size_t, std::size_t>> chords;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (c[i] != c[j]) continue;
          auto map = [&](std::size_t x) { return reflect ? (2 * n - 1 - x + r) % n : (x + r) % n; };
          chords.emplace_back(std::min(map(i), map(j)), std::max(map(i), map(j)));
        }
      }
      std::sort(chords.begin(), chords.end());
      if (best.empty() || chords < best) best = chords;
    }
  }
  return best;
}

Coloring random_coloring(std::size_t half, std::size_t max_wall, std::mt19937_64& rng) {
  Coloring c;
  for (std::size_t i = 0; i < half; ++i) {
    const WallId w = rng() % max_wall;
    c.push_back(w);
    c.push_back(w);
  }
  std::shuffle(c.begin(), c.end(), rng);
  return c;
}

}  // namespace

TEST_CASE("wall cycle validation and JSON") {
  CHECK_THROWS_AS(WallCycle({1, 2, 1}), InvalidParameter);
  CHECK_THROWS_AS(WallCycle({}), InvalidParameter);
  const WallCycle wc({7, 3, 7, 3});
  CHECK(wc.walls() == std::vector<WallId>{7, 3});
  CHECK(wc.multiplicity(7) == 2);
  CHECK_THROWS_AS(wc.multiplicity(5), UnknownWall);
  const auto text = to_json(wc).dump();
  CHECK(text == R"({"length":4,"coloring":[7,3,7,3]})");
  CHECK(wall_cycle_from_json(text) == wc);
  CHECK_THROWS_AS(wall_cycle_from_json(R"({"length":5,"coloring":[1,1]})"), InvalidParameter);
  try {
    wall_cycle_from_json("{\n  \"coloring\": [1, 1,\n}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("crossing examples") {
  const WallCycle alternating({1, 2, 1, 2});
  CHECK(walls_cross(alternating, 1, 2));
  CHECK(walls_cross(alternating, 2, 1));
  CHECK(dimension(alternating) == 2);
  CHECK(wall_crossing_distance(alternating, 0, 2) == 2);
  CHECK(wall_crossing_distance(alternating, 1, 1) == 0);
  CHECK(wallcycle_premise(alternating, dimension(alternating)));
  CHECK(within_wallcycle_bound(4, 2));

  const WallCycle nested({1, 1, 2, 2});
  CHECK_FALSE(walls_cross(nested, 1, 2));
  CHECK(dimension(nested) == 1);
  CHECK_THROWS_AS(walls_cross(nested, 1, 1), InvalidParameter);
  CHECK_THROWS_AS(walls_cross(nested, 1, 9), UnknownWall);

  CHECK(dimension(WallCycle({4, 4, 4, 4, 4, 4})) == 1);
  CHECK(wall_crossing_distance(WallCycle({4, 4, 4, 4, 4, 4}), 0, 3) == 1);
  CHECK(dimension(WallCycle({1, 2, 3, 1, 2, 3})) == 3);
}

TEST_CASE("bound arithmetic") {
  CHECK(within_wallcycle_bound(12, 1));
  CHECK_FALSE(within_wallcycle_bound(13, 1));
  CHECK(within_wallcycle_bound(22, 2));
  CHECK_FALSE(within_wallcycle_bound(23, 2));
  CHECK(within_wallcycle_bound(32, 3));  // 450 / 14 = 32.1
  CHECK_FALSE(within_wallcycle_bound(33, 3));
}

TEST_CASE("max clique against subset enumeration") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 1 + rng() % 10;
    std::vector<std::vector<bool>> adj(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) adj[i][j] = adj[j][i] = rng() % 2 == 0;
    }
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1U << k); ++mask) {
      bool ok = true;
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
          if ((mask >> i & 1U) && (mask >> j & 1U) && !adj[i][j]) ok = false;
        }
      }
      if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
    }
    CHECK(max_clique(adj) == best);
  }
}

TEST_CASE("random wall cycles agree with brute force") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t half = 1 + rng() % 6;
    const Coloring c = random_coloring(half, 1 + rng() % half, rng);
    const WallCycle wc(c);
    const std::size_t n = c.size();
    const auto graph = crossing_graph(wc);
    const auto& walls = wc.walls();
    for (std::size_t i = 0; i < walls.size(); ++i) {
      CHECK_FALSE(graph[i][i]);
      for (std::size_t j = 0; j < walls.size(); ++j) {
        CHECK(graph[i][j] == graph[j][i]);
        if (i != j) CHECK(graph[i][j] == cross_oracle(c, walls[i], walls[j]));
      }
    }
    CHECK(dimension(wc) == dimension_oracle(c));
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        const std::size_t a = wall_crossing_distance(wc, u, v);
        CHECK(a == alpha_oracle(c, u, v));
        // Both segments cross the same walls; the complementary segment has
        // n - |u - v| edges.
        const std::size_t gap = u > v ? u - v : v - u;
        CHECK(a <= std::min(gap, n - gap));
        for (std::size_t x = 0; x < n; ++x) {
          CHECK(a <= wall_crossing_distance(wc, u, x) + wall_crossing_distance(wc, x, v));
        }
      }
    }
    for (std::size_t d = 1; d <= 3; ++d) CHECK(wallcycle_premise(wc, d) == premise_oracle(c, d));
    // Each multiplicity-2 wall contributes to exactly diam X_w antipodal pairs.
    for (WallId w : walls) {
      if (wc.multiplicity(w) != 2) continue;
      std::size_t contributes = 0;
      for (std::size_t u = 0; u < n / 2; ++u) contributes += segment_counts(c, u, n / 2)[w] % 2;
      CHECK(contributes == wall_diameter(wc, w));
    }
  }
}

TEST_CASE("canonical coloring is a dihedral invariant") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Coloring c = random_coloring(2 + rng() % 5, 4, rng);
    const auto key = canonical_coloring(c);
    Coloring moved = c;
    std::rotate(moved.begin(), moved.begin() + static_cast<std::ptrdiff_t>(rng() % c.size()), moved.end());
    if (rng() % 2) std::reverse(moved.begin(), moved.end());
    for (auto& w : moved) w += 100;
    CHECK(canonical_coloring(moved) == key);
  }
}

TEST_CASE("exhaustive pairing search matches a brute-force census") {
  for (std::size_t dim = 1; dim <= 2; ++dim) {
    WallVerifyOptions opt;
    opt.dim = dim;
    opt.max_len = 10;
    const auto report = verify_wallcycle_theorem(opt);

    std::uint64_t classes = 0;
    std::uint64_t within = 0;
    std::map<std::size_t, std::uint64_t> satisfying;
    for (std::size_t n = 2; n <= 10; n += 2) {
      std::vector<std::size_t> partner(n, SIZE_MAX);
      std::vector<Coloring> pairings;
      all_pairings(partner, pairings);
      std::set<std::vector<std::pair<std::size_t, std::size_t>>> seen;
      for (const auto& c : pairings) {
        if (!seen.insert(chord_key(c)).second) continue;
        ++classes;
        const std::size_t d = dimension_oracle(c);
        if (d > dim) continue;
        ++within;
        if (premise_oracle(c, d)) ++satisfying[n];
      }
      // Chord diagrams up to rotation and reflection: 1, 2, 5, 17, 79.
      static const std::map<std::size_t, std::size_t> census{{2, 1}, {4, 2}, {6, 5}, {8, 17}, {10, 79}};
      CHECK(seen.size() == census.at(n));
    }
    CHECK(report.candidates == classes);
    CHECK(report.within_dimension == within);
    CHECK(report.satisfying_by_length == satisfying);
    CHECK(report.holds());
  }
}

TEST_CASE("dimension one exhaustive search respects the bound") {
  WallVerifyOptions opt;
  opt.dim = 1;
  opt.max_len = 14;
  const auto report = verify_wallcycle_theorem(opt);
  CHECK(report.counterexamples.empty());
  CHECK(report.lemma_failures.empty());
  CHECK(report.longest_satisfying <= 12);
  CHECK(report.longest_satisfying >= 2);
  REQUIRE(report.longest_witness);
  CHECK(wallcycle_premise(*report.longest_witness, dimension(*report.longest_witness)));
  CHECK(report.fewappear.checked > 0);
  CHECK(report.diamcontrib.checked > 0);
}

TEST_CASE("random search is deterministic and finds no counterexample") {
  WallVerifyOptions opt;
  opt.dim = 2;
  opt.max_len = 24;
  opt.strategy = WallSearch::random;
  opt.samples = 30000;
  opt.seed = 11;
  const auto one = verify_wallcycle_theorem(opt);
  opt.threads = 3;
  const auto three = verify_wallcycle_theorem(opt);
  CHECK(to_json(one).dump() == to_json(three).dump());
  CHECK(one.candidates == 30000);
  CHECK(one.holds());
  CHECK(one.premise_holds > 0);
  CHECK(one.longest_satisfying <= 22);
  CHECK(one.turan.checked == one.within_dimension);
  // Random mode also exercises walls of multiplicity above two.
  CHECK(one.fewappear.checked == one.premise_holds);
}

TEST_CASE("budget and parameter errors") {
  WallVerifyOptions opt;
  opt.max_len = 20;
  opt.max_candidates = 1000;
  CHECK_THROWS_AS(verify_wallcycle_theorem(opt), BudgetExhausted);
  opt.dim = 0;
  CHECK_THROWS_AS(verify_wallcycle_theorem(opt), InvalidParameter);
}

TEST_CASE("wall cycles from products of trees") {
  const auto pg = product(graphs::path(2), graphs::path(2));
  REQUIRE(pg.hyperplane);
  const CycleInGraph square(pg.graph, {pg.vertex(0, 0), pg.vertex(1, 0), pg.vertex(1, 1), pg.vertex(0, 1)});
  const auto wc = wall_cycle_from_product_cycle(pg, square);
  CHECK(wc.length() == 4);
  CHECK(wc.coloring()[0] == wc.coloring()[2]);
  CHECK(wc.coloring()[1] == wc.coloring()[3]);
  CHECK(wc.coloring()[0] != wc.coloring()[1]);

  // 2 x 1 rectangle: h1, v, h2 along one side and back.
  const CycleInGraph rect(pg.graph, {pg.vertex(0, 0), pg.vertex(1, 0), pg.vertex(2, 0), pg.vertex(2, 1),
                                     pg.vertex(1, 1), pg.vertex(0, 1)});
  const auto r = wall_cycle_from_product_cycle(pg, rect);
  const auto& c = r.coloring();
  CHECK(c[0] == c[4]);
  CHECK(c[1] == c[3]);
  CHECK(c[2] == c[5]);
  CHECK(dimension(r) == 2);

  CHECK_THROWS_AS(wall_cycle_from_product_cycle(product(graphs::cycle(3), graphs::path(1)), CycleInGraph::trusted({0, 2, 4})),
                  NotCubical);
}

TEST_CASE("product cycles: wall distance equals graph distance") {
  const Graph t1 = graphs::regular_tree_ball(3, 2);
  const Graph t2 = graphs::path(4);
  const auto pg = product(t1, t2);
  const DistanceOracle oracle(pg.graph);
  const auto cycles = random_cycles(oracle, 300, 4, 16, 99);
  REQUIRE(cycles.size() > 100);
  for (const auto& cycle : cycles) {
    const auto wc = wall_cycle_from_product_cycle(pg, cycle);
    CHECK(dimension(wc) <= 2);
    for (std::size_t u = 0; u < cycle.length(); ++u) {
      for (std::size_t v = u; v < cycle.length(); ++v) {
        CHECK(wall_crossing_distance(wc, u, v) == oracle.distance(cycle.at(u), cycle.at(v)));
      }
    }
  }
}
