#include "shortcut/wall_cycle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>

#include "json_location.hpp"
#include "shortcut/parallel.hpp"

namespace shortcut {

namespace {

constexpr std::size_t kMaxWalls = 64;

std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

// A wall cycle with walls renamed 0 .. k-1 in order of first appearance.
// prefix[i] holds the parity of every wall over edges 0 .. i-1, so the walls
// crossed between vertices u and v are prefix[u] ^ prefix[v].
struct Packed {
  std::vector<std::uint32_t> colors;
  std::size_t walls = 0;
  std::vector<std::uint64_t> prefix;

  std::size_t n() const { return colors.size(); }
};

void fill_prefix(Packed& p) {
  p.prefix.assign(p.n() + 1, 0);
  for (std::size_t i = 0; i < p.n(); ++i) p.prefix[i + 1] = p.prefix[i] ^ bit(p.colors[i]);
}

Packed pack(const WallCycle& wc) {
  if (wc.walls().size() > kMaxWalls) throw TooLarge("wall cycles are limited to 64 distinct walls");
  Packed p;
  p.walls = wc.walls().size();
  std::map<WallId, std::uint32_t> index;
  for (std::size_t i = 0; i < p.walls; ++i) index[wc.walls()[i]] = static_cast<std::uint32_t>(i);
  p.colors.reserve(wc.length());
  for (WallId w : wc.coloring()) p.colors.push_back(index.at(w));
  fill_prefix(p);
  return p;
}

// Crossing masks: bit j of result[i] is set when walls i and j cross. Edges a
// and b of the same wall delimit the segment a..b (cyclically, inclusive),
// whose parity vector is prefix[a] ^ prefix[b + 1].
std::vector<std::uint64_t> crossing_masks(const Packed& p) {
  const std::size_t n = p.n();
  std::vector<std::uint64_t> cross(p.walls, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || p.colors[a] != p.colors[b]) continue;
      const std::uint32_t w = p.colors[a];
      cross[w] |= (p.prefix[a] ^ p.prefix[b + 1]) & ~bit(w);
    }
  }
  for (std::size_t i = 0; i < p.walls; ++i) {
    for (std::uint64_t m = cross[i]; m != 0; m &= m - 1) cross[std::countr_zero(m)] |= bit(i);
  }
  return cross;
}

void grow_clique(const std::vector<std::uint64_t>& adj, std::uint64_t candidates, std::size_t size,
                 std::size_t& best) {
  if (candidates == 0) {
    best = std::max(best, size);
    return;
  }
  while (candidates != 0) {
    if (size + static_cast<std::size_t>(std::popcount(candidates)) <= best) return;
    const auto v = static_cast<std::size_t>(std::countr_zero(candidates));
    grow_clique(adj, candidates & adj[v], size + 1, best);
    candidates &= ~bit(v);
  }
}

std::size_t clique_of_masks(const std::vector<std::uint64_t>& adj) {
  std::size_t best = 0;
  const std::uint64_t all = adj.size() == 64 ? ~std::uint64_t{0} : bit(adj.size()) - 1;
  grow_clique(adj, all, 0, best);
  return best;
}

std::size_t min_antipodal(const Packed& p) {
  const std::size_t n = p.n();
  const std::size_t half = n / 2;
  std::size_t best = SIZE_MAX;
  // For odd n each vertex has two antipodes, at offsets floor(n/2) either way.
  const std::size_t sweep = n % 2 == 0 ? half : n;
  for (std::size_t u = 0; u < sweep; ++u) {
    const std::size_t v = (u + half) % n;
    best = std::min(best, static_cast<std::size_t>(std::popcount(p.prefix[u] ^ p.prefix[v])));
  }
  return best;
}

bool premise_from_min(std::size_t min_alpha, std::size_t n, std::size_t d) {
  return 10 * d * min_alpha >= (5 * d - 1) * n;
}

std::size_t edge_distance(std::size_t a, std::size_t b, std::size_t n) {
  const std::size_t gap = a > b ? a - b : b - a;
  return std::min(gap, n - gap);
}

std::vector<std::size_t> wall_diameters(const Packed& p) {
  std::vector<std::size_t> diam(p.walls, 0);
  for (std::size_t a = 0; a < p.n(); ++a) {
    for (std::size_t b = a + 1; b < p.n(); ++b) {
      if (p.colors[a] == p.colors[b]) {
        diam[p.colors[a]] = std::max(diam[p.colors[a]], edge_distance(a, b, p.n()));
      }
    }
  }
  return diam;
}

struct Tally {
  std::uint64_t candidates = 0;
  std::uint64_t within_dimension = 0;
  std::uint64_t premise_holds = 0;
  std::map<std::size_t, std::uint64_t> satisfying_by_length;
  std::size_t longest = 0;
  std::optional<std::vector<std::uint32_t>> longest_witness;
  std::set<std::vector<WallId>> counterexamples;
  std::set<std::vector<WallId>> lemma_failures;
  LemmaTally fewappear, diamcontrib, diamints, turan;
};

constexpr std::size_t kMaxReported = 16;

void record(std::set<std::vector<WallId>>& into, const std::vector<std::uint32_t>& colors) {
  if (into.size() >= kMaxReported) return;
  into.insert(canonical_coloring(std::vector<WallId>(colors.begin(), colors.end())));
}

bool check(LemmaTally& t, bool ok) {
  ++t.checked;
  if (!ok) ++t.failed;
  return ok;
}

// Evaluates one candidate. Lemma checks run on every cycle inside the
// dimension limit whose own premise holds.
void examine(const Packed& p, std::size_t dim, Tally& tally) {
  ++tally.candidates;
  const std::size_t n = p.n();
  const auto cross = crossing_masks(p);
  const std::size_t d = std::max<std::size_t>(1, clique_of_masks(cross));
  if (d > dim) return;
  ++tally.within_dimension;

  std::uint64_t edges = 0;
  for (auto m : cross) edges += static_cast<std::uint64_t>(std::popcount(m));
  edges /= 2;
  const std::uint64_t walls = p.walls;
  bool lemmas_ok = check(tally.turan, 2 * d * edges <= (d - 1) * walls * walls);

  const std::size_t min_alpha = min_antipodal(p);
  if (!premise_from_min(min_alpha, n, d)) {
    if (!lemmas_ok) record(tally.lemma_failures, p.colors);
    return;
  }
  ++tally.premise_holds;
  ++tally.satisfying_by_length[n];
  if (n > tally.longest) {
    tally.longest = n;
    tally.longest_witness = p.colors;
  }
  if (!within_wallcycle_bound(n, d)) record(tally.counterexamples, p.colors);

  std::vector<std::size_t> multiplicity(p.walls, 0);
  for (auto c : p.colors) ++multiplicity[c];
  const auto heavy = static_cast<std::uint64_t>(
      std::count_if(multiplicity.begin(), multiplicity.end(), [](std::size_t m) { return m > 2; }));
  lemmas_ok &= check(tally.fewappear, (5 * d - 1) * heavy <= walls);

  const auto diam = wall_diameters(p);
  for (std::size_t w = 0; w < p.walls; ++w) {
    const auto crosses = static_cast<std::int64_t>(std::popcount(cross[w]));
    const auto dd = static_cast<std::int64_t>(d);
    lemmas_ok &= check(tally.diamints, 10 * dd * crosses >= 10 * dd * (static_cast<std::int64_t>(diam[w]) - 1) -
                                                             static_cast<std::int64_t>(n));
    if (multiplicity[w] == 2 && n % 2 == 0) {
      std::size_t contributes = 0;
      for (std::size_t u = 0; u < n / 2; ++u) {
        if (((p.prefix[u] ^ p.prefix[u + n / 2]) & bit(w)) != 0) ++contributes;
      }
      lemmas_ok &= check(tally.diamcontrib, contributes == diam[w]);
    }
  }
  if (!lemmas_ok) record(tally.lemma_failures, p.colors);
}

void merge(Tally& into, Tally&& part) {
  into.candidates += part.candidates;
  into.within_dimension += part.within_dimension;
  into.premise_holds += part.premise_holds;
  for (auto [len, count] : part.satisfying_by_length) into.satisfying_by_length[len] += count;
  if (part.longest > into.longest) {
    into.longest = part.longest;
    into.longest_witness = std::move(part.longest_witness);
  }
  for (auto& c : part.counterexamples) {
    if (into.counterexamples.size() < kMaxReported) into.counterexamples.insert(c);
  }
  for (auto& c : part.lemma_failures) {
    if (into.lemma_failures.size() < kMaxReported) into.lemma_failures.insert(c);
  }
  for (auto [dst, src] : {std::pair{&into.fewappear, &part.fewappear}, std::pair{&into.diamcontrib, &part.diamcontrib},
                          std::pair{&into.diamints, &part.diamints}, std::pair{&into.turan, &part.turan}}) {
    dst->checked += src->checked;
    dst->failed += src->failed;
  }
}

// ---- exhaustive perfect pairings ----

// offset[i] = (partner(i) - i) mod n. A pairing is canonical when its offset
// sequence is lexicographically minimal over all rotations and reflections.
bool is_canonical_pairing(const std::vector<std::size_t>& partner) {
  const std::size_t n = partner.size();
  std::vector<std::size_t> offset(n);
  for (std::size_t i = 0; i < n; ++i) offset[i] = (partner[i] + n - i) % n;
  for (int reflect = 0; reflect < 2; ++reflect) {
    for (std::size_t r = 0; r < n; ++r) {
      if (reflect == 0 && r == 0) continue;
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t other =
            reflect == 0 ? offset[(i + r) % n] : (n - offset[(2 * n - 1 - i + r) % n]) % n;
        if (other < offset[i]) return false;
        if (other > offset[i]) break;
      }
    }
  }
  return true;
}

class PairingEnumerator {
 public:
  PairingEnumerator(std::size_t n, std::size_t dim, Tally& tally)
      : n_(n), dim_(dim), tally_(tally), partner_(n, SIZE_MAX) {}

  void run_with_first_partner(std::size_t first) {
    partner_[0] = first;
    partner_[first] = 0;
    extend();
  }

 private:
  void extend() {
    std::size_t a = 0;
    while (a < n_ && partner_[a] != SIZE_MAX) ++a;
    if (a == n_) {
      leaf();
      return;
    }
    for (std::size_t b = a + 1; b < n_; ++b) {
      if (partner_[b] != SIZE_MAX) continue;
      partner_[a] = b;
      partner_[b] = a;
      extend();
      partner_[a] = partner_[b] = SIZE_MAX;
    }
  }

  void leaf() {
    if (!is_canonical_pairing(partner_)) return;
    Packed p;
    p.colors.assign(n_, 0);
    std::uint32_t next = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (partner_[i] > i) p.colors[i] = p.colors[partner_[i]] = next++;
    }
    p.walls = next;
    fill_prefix(p);
    examine(p, dim_, tally_);
  }

  std::size_t n_;
  std::size_t dim_;
  Tally& tally_;
  std::vector<std::size_t> partner_;
};

double pairing_count(std::size_t n) {
  double c = 1;
  for (std::size_t k = n - 1; k > 1; k -= 2) c *= static_cast<double>(k);
  return c;
}

Tally exhaustive(const WallVerifyOptions& opt) {
  double total = 0;
  for (std::size_t n = 2; n <= opt.max_len; n += 2) total += pairing_count(n);
  if (total > static_cast<double>(opt.max_candidates)) {
    throw BudgetExhausted("exhaustive pairing search up to length " + std::to_string(opt.max_len) +
                          " needs more than " + std::to_string(opt.max_candidates) + " candidates");
  }
  struct Job {
    std::size_t n;
    std::size_t first;
  };
  std::vector<Job> jobs;
  for (std::size_t n = 2; n <= opt.max_len; n += 2) {
    for (std::size_t first = 1; first < n; ++first) jobs.push_back({n, first});
  }
  std::vector<Tally> parts(jobs.size());
  parallel_for(jobs.size(), opt.threads, [&](std::size_t i) {
    PairingEnumerator(jobs[i].n, opt.dim, parts[i]).run_with_first_partner(jobs[i].first);
  });
  Tally total_tally;
  for (auto& part : parts) merge(total_tally, std::move(part));
  return total_tally;
}

// ---- randomized search ----

constexpr std::uint64_t kChunk = 4096;

Packed from_raw(const std::vector<std::uint64_t>& raw) {
  Packed p;
  std::map<std::uint64_t, std::uint32_t> index;
  for (auto w : raw) {
    auto [it, inserted] = index.emplace(w, static_cast<std::uint32_t>(index.size()));
    p.colors.push_back(it->second);
  }
  p.walls = index.size();
  fill_prefix(p);
  return p;
}

std::vector<std::uint64_t> uniform_pairing(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::uint64_t> raw(n);
  for (std::size_t i = 0; i < n; i += 2) raw[order[i]] = raw[order[i + 1]] = i / 2;
  return raw;
}

// Closed lattice walk in Z^dim given as signed axis steps (axis, +1/-1).
// The wall crossed by a step is the hyperplane between its endpoints.
std::vector<std::uint64_t> lattice_walls(const std::vector<std::pair<std::size_t, int>>& steps) {
  std::vector<std::int64_t> pos(64, 0);
  std::vector<std::uint64_t> raw;
  raw.reserve(steps.size());
  for (auto [axis, sign] : steps) {
    const std::int64_t low = sign > 0 ? pos[axis] : pos[axis] - 1;
    pos[axis] += sign;
    raw.push_back((static_cast<std::uint64_t>(axis) << 32) ^ static_cast<std::uint64_t>(low + (1 << 20)));
  }
  return raw;
}

std::vector<std::pair<std::size_t, int>> random_steps(std::size_t n, std::size_t dim, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> axis(0, dim - 1);
  std::vector<std::pair<std::size_t, int>> steps;
  for (std::size_t i = 0; i < n / 2; ++i) {
    const std::size_t a = axis(rng);
    const int s = (rng() & 1) != 0 ? 1 : -1;
    steps.emplace_back(a, s);
    steps.emplace_back(a, -s);
  }
  return steps;
}

// Convex-position walk: all positive steps axis by axis, then all negative
// steps in the same order, followed by a few adjacent swaps. These sit close
// to the premise boundary.
std::vector<std::pair<std::size_t, int>> near_convex_steps(std::size_t n, std::size_t dim, std::mt19937_64& rng) {
  auto steps = random_steps(n, dim, rng);
  std::stable_sort(steps.begin(), steps.end(), [](const auto& x, const auto& y) {
    return std::pair{-x.second, x.first} < std::pair{-y.second, y.first};
  });
  const std::size_t swaps = rng() % 4;
  for (std::size_t s = 0; s < swaps; ++s) {
    const std::size_t i = rng() % n;
    std::swap(steps[i], steps[(i + 1) % n]);
  }
  return steps;
}

Packed random_candidate(const WallVerifyOptions& opt, std::mt19937_64& rng) {
  const std::size_t max_half = opt.max_len / 2;
  std::uniform_int_distribution<std::size_t> half(2, max_half);
  const std::size_t n = 2 * half(rng);
  switch (rng() % 4) {
    case 0:
      return from_raw(uniform_pairing(n, rng));
    case 1: {
      auto steps = random_steps(n, opt.dim, rng);
      std::shuffle(steps.begin(), steps.end(), rng);
      return from_raw(lattice_walls(steps));
    }
    case 2:
      return from_raw(lattice_walls(near_convex_steps(n, opt.dim, rng)));
    default: {
      // Uniform pairing with one or two walls merged into others.
      auto raw = uniform_pairing(n, rng);
      const std::size_t merges = 1 + rng() % 2;
      for (std::size_t m = 0; m < merges; ++m) {
        const std::uint64_t from = rng() % (n / 2);
        const std::uint64_t to = rng() % (n / 2);
        std::replace(raw.begin(), raw.end(), from, to);
      }
      return from_raw(raw);
    }
  }
}

Tally randomized(const WallVerifyOptions& opt) {
  if (opt.max_len < 4) throw InvalidParameter("random wall-cycle search needs max_len >= 4");
  if (opt.dim > 64) throw TooLarge("random lattice walks are limited to 64 axes");
  if (opt.samples > opt.max_candidates) {
    throw BudgetExhausted("requested samples exceed the candidate budget");
  }
  const std::uint64_t chunks = (opt.samples + kChunk - 1) / kChunk;
  std::vector<Tally> parts(chunks);
  parallel_for(chunks, opt.threads, [&](std::size_t c) {
    std::mt19937_64 rng(mix_seed(opt.seed, c));
    const std::uint64_t count = std::min(kChunk, opt.samples - c * kChunk);
    for (std::uint64_t s = 0; s < count; ++s) examine(random_candidate(opt, rng), opt.dim, parts[c]);
  });
  Tally total;
  for (auto& part : parts) merge(total, std::move(part));
  return total;
}

}  // namespace

WallCycle::WallCycle(std::vector<WallId> coloring) : coloring_(std::move(coloring)) {
  if (coloring_.empty()) throw InvalidParameter("a wall cycle needs at least one edge");
  for (WallId w : coloring_) {
    auto [it, inserted] = index_.emplace(w, walls_.size());
    if (inserted) {
      walls_.push_back(w);
      counts_.push_back(0);
    }
    ++counts_[it->second];
  }
  for (std::size_t i = 0; i < walls_.size(); ++i) {
    if (counts_[i] % 2 != 0) {
      throw InvalidParameter("wall " + std::to_string(walls_[i]) + " occurs an odd number of times");
    }
  }
}

std::size_t WallCycle::multiplicity(WallId w) const {
  auto it = index_.find(w);
  if (it == index_.end()) throw UnknownWall("wall " + std::to_string(w) + " does not occur on the cycle");
  return counts_[it->second];
}

bool walls_cross(const WallCycle& wc, WallId w1, WallId w2) {
  if (!wc.has_wall(w1) || !wc.has_wall(w2)) throw UnknownWall("both walls must occur on the cycle");
  if (w1 == w2) throw InvalidParameter("a wall is not compared with itself");
  const Packed p = pack(wc);
  const auto cross = crossing_masks(p);
  const auto& walls = wc.walls();
  const auto i = static_cast<std::size_t>(std::find(walls.begin(), walls.end(), w1) - walls.begin());
  const auto j = static_cast<std::size_t>(std::find(walls.begin(), walls.end(), w2) - walls.begin());
  return (cross[i] & bit(j)) != 0;
}

std::vector<std::vector<bool>> crossing_graph(const WallCycle& wc) {
  const Packed p = pack(wc);
  const auto cross = crossing_masks(p);
  std::vector<std::vector<bool>> adj(p.walls, std::vector<bool>(p.walls, false));
  for (std::size_t i = 0; i < p.walls; ++i) {
    for (std::size_t j = 0; j < p.walls; ++j) adj[i][j] = (cross[i] & bit(j)) != 0;
  }
  return adj;
}

std::size_t max_clique(const std::vector<std::vector<bool>>& adjacency) {
  if (adjacency.size() > kMaxWalls) throw TooLarge("max_clique handles at most 64 vertices");
  std::vector<std::uint64_t> masks(adjacency.size(), 0);
  for (std::size_t i = 0; i < adjacency.size(); ++i) {
    for (std::size_t j = 0; j < adjacency.size(); ++j) {
      if (i != j && adjacency[i][j] && adjacency[j][i]) masks[i] |= bit(j);
    }
  }
  return clique_of_masks(masks);
}

std::size_t dimension(const WallCycle& wc) {
  return std::max<std::size_t>(1, clique_of_masks(crossing_masks(pack(wc))));
}

std::size_t wall_crossing_distance(const WallCycle& wc, std::size_t u, std::size_t v) {
  if (u >= wc.length() || v >= wc.length()) throw InvalidParameter("vertex is not on the wall cycle");
  const Packed p = pack(wc);
  return static_cast<std::size_t>(std::popcount(p.prefix[u] ^ p.prefix[v]));
}

bool wallcycle_premise(const WallCycle& wc, std::size_t d) {
  if (d == 0) throw InvalidParameter("dimension must be positive");
  return premise_from_min(min_antipodal(pack(wc)), wc.length(), d);
}

bool within_wallcycle_bound(std::size_t length, std::size_t d) {
  return length * (5 * d - 1) <= 50 * d * d;
}

std::size_t wall_diameter(const WallCycle& wc, WallId w) {
  if (!wc.has_wall(w)) throw UnknownWall("wall " + std::to_string(w) + " does not occur on the cycle");
  const auto& c = wc.coloring();
  std::size_t best = 0;
  for (std::size_t a = 0; a < c.size(); ++a) {
    for (std::size_t b = a + 1; b < c.size(); ++b) {
      if (c[a] == w && c[b] == w) best = std::max(best, edge_distance(a, b, c.size()));
    }
  }
  return best;
}

std::vector<WallId> canonical_coloring(const std::vector<WallId>& coloring) {
  const std::size_t n = coloring.size();
  std::vector<WallId> best;
  std::vector<WallId> candidate(n);
  for (int reflect = 0; reflect < 2; ++reflect) {
    for (std::size_t r = 0; r < n; ++r) {
      std::map<WallId, WallId> rename;
      for (std::size_t i = 0; i < n; ++i) {
        const WallId w = reflect == 0 ? coloring[(i + r) % n] : coloring[(2 * n - 1 - i + r) % n];
        auto [it, inserted] = rename.emplace(w, rename.size());
        candidate[i] = it->second;
      }
      if (best.empty() || candidate < best) best = candidate;
    }
  }
  return best;
}

WallCycle wall_cycle_from_product_cycle(const ProductGraph& pg, const CycleInGraph& cycle) {
  if (!pg.hyperplane) throw NotCubical("product graph carries no hyperplane map");
  std::vector<WallId> coloring;
  coloring.reserve(cycle.length());
  for (std::size_t i = 0; i < cycle.length(); ++i) {
    const auto idx = pg.graph.edge_index(cycle.at(i), cycle.at(i + 1));
    if (!idx) throw CycleNotInGraph("cycle edge is not an edge of the product");
    coloring.push_back((*pg.hyperplane)[*idx]);
  }
  return WallCycle(std::move(coloring));
}

WallTheoremReport verify_wallcycle_theorem(const WallVerifyOptions& options) {
  if (options.dim == 0) throw InvalidParameter("dimension must be positive");
  if (options.max_len < 2) throw InvalidParameter("max_len must be at least 2");
  if (options.max_len > 2 * kMaxWalls) throw TooLarge("max_len is limited to 128");
  Tally tally = options.strategy == WallSearch::exhaustive_pairs ? exhaustive(options) : randomized(options);

  WallTheoremReport report;
  report.options = options;
  report.candidates = tally.candidates;
  report.within_dimension = tally.within_dimension;
  report.premise_holds = tally.premise_holds;
  report.satisfying_by_length = std::move(tally.satisfying_by_length);
  report.longest_satisfying = tally.longest;
  if (tally.longest_witness) {
    report.longest_witness.emplace(std::vector<WallId>(tally.longest_witness->begin(), tally.longest_witness->end()));
  }
  for (const auto& c : tally.counterexamples) report.counterexamples.emplace_back(c);
  for (const auto& c : tally.lemma_failures) report.lemma_failures.emplace_back(c);
  report.fewappear = tally.fewappear;
  report.diamcontrib = tally.diamcontrib;
  report.diamints = tally.diamints;
  report.turan = tally.turan;
  return report;
}

nlohmann::ordered_json to_json(const WallCycle& wc) {
  return {{"length", wc.length()}, {"coloring", wc.coloring()}};
}

WallCycle wall_cycle_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, column] = detail::line_column(text, e.byte);
    throw ParseError("malformed wall cycle JSON: " + std::string(e.what()), line, column);
  }
  try {
    auto coloring = j.at("coloring").get<std::vector<WallId>>();
    if (j.contains("length") && j.at("length").get<std::size_t>() != coloring.size()) {
      throw InvalidParameter("wall cycle length does not match its coloring");
    }
    return WallCycle(std::move(coloring));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidParameter(std::string("wall cycle JSON has the wrong shape: ") + e.what());
  }
}

nlohmann::ordered_json to_json(const WallTheoremReport& r) {
  const auto& o = r.options;
  nlohmann::ordered_json j;
  j["dim"] = o.dim;
  j["max_len"] = o.max_len;
  j["strategy"] = o.strategy == WallSearch::exhaustive_pairs ? "exhaustive_pairs" : "random";
  if (o.strategy == WallSearch::random) {
    j["seed"] = o.seed;
    j["samples"] = o.samples;
  }
  j["bound"] = {{"numerator", 50 * o.dim * o.dim}, {"denominator", 5 * o.dim - 1}};
  j["candidates"] = r.candidates;
  j["within_dimension"] = r.within_dimension;
  j["premise_holds"] = r.premise_holds;
  nlohmann::ordered_json by_length = nlohmann::ordered_json::object();
  for (auto [len, count] : r.satisfying_by_length) by_length[std::to_string(len)] = count;
  j["satisfying_by_length"] = std::move(by_length);
  j["longest_satisfying"] = r.longest_satisfying;
  j["longest_witness"] = r.longest_witness ? to_json(*r.longest_witness) : nlohmann::ordered_json(nullptr);
  auto list = [](const std::vector<WallCycle>& cs) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& c : cs) a.push_back(to_json(c));
    return a;
  };
  j["counterexamples"] = list(r.counterexamples);
  nlohmann::ordered_json lemmas;
  for (auto [name, t] : {std::pair{"fewappear", r.fewappear}, std::pair{"diamcontrib", r.diamcontrib},
                         std::pair{"diamints", r.diamints}, std::pair{"turan", r.turan}}) {
    lemmas[name] = {{"checked", t.checked}, {"failed", t.failed}};
  }
  j["lemmas"] = std::move(lemmas);
  j["lemma_failures"] = list(r.lemma_failures);
  j["complete"] = r.complete;
  j["holds"] = r.holds();
  return j;
}

}  // namespace shortcut
