#include "shortcut/cycle_search.hpp"

#include <algorithm>
#include <set>

#include "shortcut/errors.hpp"
#include "shortcut/parallel.hpp"
#include "shortcut/predicates.hpp"

namespace shortcut {

CycleMode CycleMode::almost_isometric(RationalParam xi) {
  if (!xi.is_valid_xi()) throw InvalidParameter("xi must lie strictly between 0 and 1, got " + xi.to_string());
  return {CycleModeKind::almost_isometric, xi};
}

CycleMode CycleMode::bilipschitz(RationalParam k) {
  if (!k.is_valid_k()) throw InvalidParameter("K must be at least 1, got " + k.to_string());
  return {CycleModeKind::bilipschitz, k};
}

bool CycleMode::accepts(const Metric& metric, const CycleInGraph& cycle) const {
  switch (kind) {
    case CycleModeKind::any: return true;
    case CycleModeKind::isometric: return is_isometric_cycle(metric, cycle);
    case CycleModeKind::almost_isometric: return is_almost_isometric_cycle(metric, cycle, param);
    case CycleModeKind::bilipschitz: return is_bilipschitz_cycle(metric, cycle, param);
  }
  return false;
}

namespace {

// Necessary condition on a single vertex pair at cycle distance c.
//   antipodal, xi_bar = p/q:  2q d >= 2q c - (q - p) n
//   bilipschitz, K = p/q:     p d >= q c
struct PairRule {
  enum class Kind { none, antipodal, bilipschitz } kind = Kind::none;
  std::int64_t p = 1;
  std::int64_t q = 1;
  std::int64_t n = 0;

  bool ok(std::int64_t d, std::int64_t c) const noexcept {
    switch (kind) {
      case Kind::none: return true;
      case Kind::antipodal: return 2 * q * d + (q - p) * n >= 2 * q * c;
      case Kind::bilipschitz: return p * d >= q * c;
    }
    return true;
  }
};

PairRule rule_for(const CycleMode& mode, std::size_t n) {
  PairRule rule;
  rule.n = static_cast<std::int64_t>(n);
  rule.p = mode.param.num();
  rule.q = mode.param.den();
  switch (mode.kind) {
    case CycleModeKind::any: rule.kind = PairRule::Kind::none; break;
    case CycleModeKind::isometric:
    case CycleModeKind::almost_isometric: rule.kind = PairRule::Kind::antipodal; break;
    case CycleModeKind::bilipschitz: rule.kind = PairRule::Kind::bilipschitz; break;
  }
  return rule;
}

struct Partition {
  VertexId start;
  VertexId second;
  bool restrict_to_larger;  // enumerate only walks whose vertices are all >= start
};

std::vector<Partition> partitions_for(const Graph& g, const SearchOptions& options) {
  std::vector<Partition> parts;
  auto add_start = [&](VertexId s, bool restrict) {
    for (VertexId y : g.neighbors(s)) {
      if (restrict && y < s) continue;
      parts.push_back({s, y, restrict});
    }
  };
  if (options.base_vertex) {
    if (*options.base_vertex >= g.vertex_count()) {
      throw InvalidParameter("base vertex " + std::to_string(*options.base_vertex) + " is not in the graph");
    }
    add_start(*options.base_vertex, false);
  } else {
    for (VertexId s = 0; s < g.vertex_count(); ++s) add_start(s, true);
  }
  return parts;
}

// Depth-first extension of a walk from a fixed first edge. `on_closed` sees
// every closed walk that survived pruning and returns false to stop.
class WalkDfs {
 public:
  WalkDfs(const Metric& metric, std::size_t length, const Partition& part, std::uint64_t cap)
      : metric_(metric), g_(metric.graph()), n_(length), part_(part), cap_(cap) {}

  template <class OnClosed>
  void run(const PairRule& rule, OnClosed&& on_closed) {
    path_.assign(1, part_.start);
    if (!admissible(part_.second, 1, rule)) return;
    path_.push_back(part_.second);
    extend(rule, on_closed);
  }

  std::uint64_t expansions() const noexcept { return expansions_; }
  bool exhausted() const noexcept { return exhausted_; }

 private:
  bool admissible(VertexId y, std::size_t j, const PairRule& rule) const {
    if (part_.restrict_to_larger && y < part_.start) return false;
    const auto n = static_cast<std::int64_t>(n_);
    const auto jj = static_cast<std::int64_t>(j);
    // Closure: the walk must still be able to return to the start.
    const auto d0 = static_cast<std::int64_t>(metric_.distance(part_.start, y));
    if (d0 > n - jj) return false;
    if (j == n_ - 1 && !g_.has_edge(y, part_.start)) return false;
    // Pair (0, j) first: for Cayley metrics it is always within the ball.
    if (!rule.ok(d0, std::min(jj, n - jj))) return false;
    if (rule.kind == PairRule::Kind::none) return true;
    for (std::size_t i = 1; i < j; ++i) {
      const auto c = static_cast<std::int64_t>(j - i);
      if (!rule.ok(metric_.distance(path_[i], y), std::min(c, n - c))) return false;
    }
    return true;
  }

  template <class OnClosed>
  bool extend(const PairRule& rule, OnClosed& on_closed) {
    if (path_.size() == n_) return on_closed(path_);
    if (expansions_ >= cap_) {
      exhausted_ = true;
      return false;
    }
    ++expansions_;
    const VertexId last = path_.back();
    const std::size_t j = path_.size();
    for (VertexId y : g_.neighbors(last)) {
      if (!admissible(y, j, rule)) continue;
      path_.push_back(y);
      const bool keep_going = extend(rule, on_closed);
      path_.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }

  const Metric& metric_;
  const Graph& g_;
  std::size_t n_;
  Partition part_;
  std::uint64_t cap_;
  std::uint64_t expansions_ = 0;
  bool exhausted_ = false;
  std::vector<VertexId> path_;
};

struct PartitionHits {
  std::set<std::vector<VertexId>> forms;
  std::uint64_t expansions = 0;
  bool exhausted = false;
};

SearchResult exhaustive_search(const Metric& metric, std::size_t length, const SearchOptions& options) {
  const auto parts = partitions_for(metric.graph(), options);
  const PairRule rule = rule_for(options.mode, length);
  std::vector<PartitionHits> hits(parts.size());
  parallel_for(parts.size(), options.threads, [&](std::size_t idx) {
    WalkDfs dfs(metric, length, parts[idx], options.budget.max_expansions);
    auto& out = hits[idx];
    dfs.run(rule, [&](const std::vector<VertexId>& walk) {
      auto cycle = CycleInGraph::trusted(walk);
      if (options.mode.accepts(metric, cycle)) out.forms.insert(canonical_form(walk));
      return out.forms.size() < options.max_results;
    });
    out.expansions = dfs.expansions();
    out.exhausted = dfs.exhausted();
  });

  SearchResult result;
  std::set<std::vector<VertexId>> merged;
  for (auto& h : hits) {
    result.expansions += h.expansions;
    if (h.exhausted) result.complete = false;
    merged.insert(h.forms.begin(), h.forms.end());
  }
  if (result.expansions > options.budget.max_expansions) result.complete = false;
  for (const auto& form : merged) {
    if (result.cycles.size() >= options.max_results) break;
    result.cycles.push_back(CycleInGraph::trusted(form));
  }
  return result;
}

std::vector<VertexId> sample_starts(const Graph& g, const SearchOptions& options) {
  if (options.base_vertex) return {*options.base_vertex};
  std::vector<VertexId> starts;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 0) starts.push_back(v);
  }
  return starts;
}

constexpr std::size_t kSampleChunk = 1024;

template <class PerSample>
std::uint64_t run_samples(const Metric& metric, std::size_t length, const SearchOptions& options,
                          PerSample&& per_sample) {
  const auto starts = sample_starts(metric.graph(), options);
  if (starts.empty()) return 0;
  const std::size_t chunks = (options.heuristic_samples + kSampleChunk - 1) / kSampleChunk;
  std::vector<std::uint64_t> steps(chunks, 0);
  parallel_for(chunks, options.threads, [&](std::size_t chunk) {
    std::mt19937_64 rng(mix_seed(options.seed, chunk));
    const std::size_t begin = chunk * kSampleChunk;
    const std::size_t end = std::min(options.heuristic_samples, begin + kSampleChunk);
    std::uniform_int_distribution<std::size_t> pick(0, starts.size() - 1);
    for (std::size_t s = begin; s < end; ++s) {
      steps[chunk] += length;
      auto walk = random_closed_walk(metric, length, starts[pick(rng)], rng);
      if (walk) per_sample(chunk, std::move(*walk));
    }
  });
  std::uint64_t total = 0;
  for (auto s : steps) total += s;
  return total;
}

SearchResult heuristic_search(const Metric& metric, std::size_t length, const SearchOptions& options) {
  const std::size_t chunks = (options.heuristic_samples + kSampleChunk - 1) / kSampleChunk;
  std::vector<std::set<std::vector<VertexId>>> found(chunks);
  SearchResult result;
  result.expansions = run_samples(metric, length, options, [&](std::size_t chunk, std::vector<VertexId> walk) {
    if (options.mode.accepts(metric, CycleInGraph::trusted(walk))) found[chunk].insert(canonical_form(walk));
  });
  std::set<std::vector<VertexId>> merged;
  for (auto& f : found) merged.insert(f.begin(), f.end());
  for (const auto& form : merged) {
    if (result.cycles.size() >= options.max_results) break;
    result.cycles.push_back(CycleInGraph::trusted(form));
  }
  result.complete = false;
  return result;
}

// Graphs with fewer than 3 vertices or without cycles give empty results,
// even though a forest still carries backtracking closed walks.
bool degenerate_input(const Metric& metric) {
  const Graph& g = metric.graph();
  if (g.vertex_count() < 3) return true;
  std::vector<bool> seen(g.vertex_count(), false);
  std::size_t components = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    ++components;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (VertexId y : g.neighbors(x)) {
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
  }
  return g.edge_count() + components <= g.vertex_count();
}

}  // namespace

SearchResult search_cycles(const Metric& metric, std::size_t length, const SearchOptions& options) {
  if (length < 3) throw InvalidParameter("cycle length must be at least 3");
  if (degenerate_input(metric)) return {};
  if (options.strategy == SearchStrategy::heuristic) return heuristic_search(metric, length, options);
  return exhaustive_search(metric, length, options);
}

namespace {

struct RatioHit {
  std::int64_t best2 = -1;  // doubled minimum antipodal distance
  std::vector<VertexId> witness;
  std::uint64_t expansions = 0;
  bool exhausted = false;
};

// Within one partition: keep raising the target to best + 1 so that only
// strictly better cycles survive the pair relaxation.
RatioHit ratio_partition(const Metric& metric, std::size_t length, const Partition& part,
                         std::int64_t floor2, std::uint64_t cap) {
  RatioHit hit;
  PairRule rule;
  rule.kind = PairRule::Kind::antipodal;
  rule.n = static_cast<std::int64_t>(length);
  rule.q = rule.n;
  rule.p = floor2;  // xi_bar = target / n with doubled target
  WalkDfs dfs(metric, length, part, cap);
  dfs.run(rule, [&](const std::vector<VertexId>& walk) {
    const auto value = static_cast<std::int64_t>(min_antipodal_distance2(metric, CycleInGraph::trusted(walk)));
    if (value > hit.best2 && value >= floor2) {
      hit.best2 = value;
      hit.witness = walk;
      rule.p = value + 1;
      if (value == rule.n) return false;  // isometric, cannot improve
    }
    return true;
  });
  hit.expansions = dfs.expansions();
  hit.exhausted = dfs.exhausted();
  return hit;
}

// Replace v_i by another common neighbour of v_{i-1} and v_{i+1} while that
// raises the minimum antipodal distance.
std::int64_t improve_locally(const Metric& metric, std::vector<VertexId>& walk) {
  const Graph& g = metric.graph();
  const std::size_t n = walk.size();
  auto score = [&](const std::vector<VertexId>& w) {
    return static_cast<std::int64_t>(min_antipodal_distance2(metric, CycleInGraph::trusted(w)));
  };
  std::int64_t best = score(walk);
  bool improved = true;
  while (improved && best < static_cast<std::int64_t>(n)) {
    improved = false;
    for (std::size_t i = 0; i < n && !improved; ++i) {
      const VertexId prev = walk[(i + n - 1) % n];
      const VertexId next = walk[(i + 1) % n];
      const VertexId original = walk[i];
      for (VertexId y : g.neighbors(prev)) {
        if (y == original || !g.has_edge(y, next)) continue;
        walk[i] = y;
        const auto s = score(walk);
        if (s > best) {
          best = s;
          improved = true;
          break;
        }
        walk[i] = original;
      }
    }
  }
  return best;
}

}  // namespace

RatioSearchResult max_antipodal_ratio(const Metric& metric, std::size_t length, const SearchOptions& options) {
  if (length < 3) throw InvalidParameter("cycle length must be at least 3");
  RatioSearchResult result;
  if (degenerate_input(metric)) return result;

  std::int64_t best2 = -1;
  std::vector<VertexId> witness;

  if (options.strategy == SearchStrategy::heuristic) {
    const std::size_t chunks = (options.heuristic_samples + kSampleChunk - 1) / kSampleChunk;
    std::vector<RatioHit> hits(chunks);
    result.expansions = run_samples(metric, length, options, [&](std::size_t chunk, std::vector<VertexId> walk) {
      const auto value = improve_locally(metric, walk);
      auto& h = hits[chunk];
      auto form = canonical_form(walk);
      if (value > h.best2 || (value == h.best2 && form < h.witness)) {
        h.best2 = value;
        h.witness = std::move(form);
      }
    });
    for (auto& h : hits) {
      if (h.best2 > best2 || (h.best2 == best2 && h.best2 >= 0 && h.witness < witness)) {
        best2 = h.best2;
        witness = h.witness;
      }
    }
    result.complete = false;
  } else {
    const auto parts = partitions_for(metric.graph(), options);
    std::vector<RatioHit> hits(parts.size());
    if (options.threads <= 1) {
      // Sequentially the bound carries over between partitions; the first
      // cycle in global order attaining the optimum is the same either way.
      std::int64_t floor2 = 0;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        hits[i] = ratio_partition(metric, length, parts[i], floor2, options.budget.max_expansions);
        if (hits[i].best2 >= 0) floor2 = hits[i].best2 + 1;
        if (floor2 > static_cast<std::int64_t>(length)) break;
      }
    } else {
      parallel_for(parts.size(), options.threads, [&](std::size_t i) {
        hits[i] = ratio_partition(metric, length, parts[i], 0, options.budget.max_expansions);
      });
    }
    for (auto& h : hits) {
      result.expansions += h.expansions;
      if (h.exhausted) result.complete = false;
      if (h.best2 > best2) {
        best2 = h.best2;
        witness = h.witness;
      }
    }
    if (result.expansions > options.budget.max_expansions) result.complete = false;
  }

  if (best2 >= 0) {
    result.best = RationalParam(best2, static_cast<std::int64_t>(length));
    result.witness = CycleInGraph::trusted(canonical_form(witness));
  }
  return result;
}

std::optional<std::vector<VertexId>> random_closed_walk(const Metric& metric, std::size_t length,
                                                        VertexId start, std::mt19937_64& rng) {
  const Graph& g = metric.graph();
  std::vector<VertexId> walk{start};
  std::vector<VertexId> options;
  while (walk.size() < length) {
    const std::size_t remaining = length - walk.size();
    options.clear();
    for (VertexId y : g.neighbors(walk.back())) {
      if (metric.distance(start, y) > remaining) continue;
      if (remaining == 1 && !g.has_edge(y, start)) continue;
      options.push_back(y);
    }
    if (options.empty()) return std::nullopt;
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    walk.push_back(options[pick(rng)]);
  }
  if (!g.has_edge(walk.back(), start)) return std::nullopt;
  return walk;
}

std::vector<CycleInGraph> random_cycles(const Metric& metric, std::size_t count, std::size_t min_length,
                                        std::size_t max_length, std::uint64_t seed) {
  std::vector<CycleInGraph> out;
  const Graph& g = metric.graph();
  if (g.vertex_count() == 0 || g.edge_count() == 0 || min_length < 3 || max_length < min_length) return out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> len(min_length, max_length);
  std::uniform_int_distribution<VertexId> vertex(0, static_cast<VertexId>(g.vertex_count() - 1));
  // Bounded retries: bipartite hosts never close odd walks.
  for (std::size_t attempt = 0; out.size() < count && attempt < count * 64; ++attempt) {
    auto walk = random_closed_walk(metric, len(rng), vertex(rng), rng);
    if (walk) out.push_back(CycleInGraph::trusted(std::move(*walk)));
  }
  return out;
}

}  // namespace shortcut
