#include "shortcut/predicates.hpp"

#include <algorithm>

namespace shortcut {

namespace {

// The edge {v_i, v_{i+1}} as an unordered pair.
std::pair<VertexId, VertexId> edge_at(const CycleInGraph& c, std::size_t i) {
  const VertexId a = c.at(i);
  const VertexId b = c.at(i + 1);
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

std::uint64_t doubled_cycle_distance(std::size_t a, std::size_t b, std::size_t n) {
  const std::size_t gap = a > b ? a - b : b - a;
  return std::min(gap, 2 * n - gap);
}

}  // namespace

void require_cycle_in(const Metric& metric, const CycleInGraph& cycle) {
  if (!cycle.is_valid_in(metric.graph())) {
    throw CycleNotInGraph("cycle is not a closed nondegenerate walk in the host graph");
  }
}

std::uint64_t point_distance2(const Metric& metric, const CycleInGraph& cycle, std::size_t a,
                              std::size_t b) {
  const bool a_mid = a % 2 == 1;
  const bool b_mid = b % 2 == 1;
  const std::size_t ia = a / 2;
  const std::size_t ib = b / 2;
  if (!a_mid && !b_mid) return 2ULL * metric.distance(cycle.at(ia), cycle.at(ib));
  if (a_mid && b_mid) {
    const auto ea = edge_at(cycle, ia);
    const auto eb = edge_at(cycle, ib);
    if (ea == eb) return 0;
    const std::uint32_t best = std::min({metric.distance(ea.first, eb.first),
                                         metric.distance(ea.first, eb.second),
                                         metric.distance(ea.second, eb.first),
                                         metric.distance(ea.second, eb.second)});
    return 2ULL * best + 2;
  }
  const VertexId vertex = a_mid ? cycle.at(ib) : cycle.at(ia);
  const auto edge = edge_at(cycle, a_mid ? ia : ib);
  const std::uint32_t best =
      std::min(metric.distance(vertex, edge.first), metric.distance(vertex, edge.second));
  return 2ULL * best + 1;
}

std::uint64_t min_antipodal_distance2(const Metric& metric, const CycleInGraph& cycle) {
  require_cycle_in(metric, cycle);
  const std::size_t n = cycle.length();
  std::uint64_t best = n;
  for (std::size_t p = 0; p < n && best > 0; ++p) {
    best = std::min(best, point_distance2(metric, cycle, p, p + n));
  }
  return best;
}

RationalParam antipodal_ratio(const Metric& metric, const CycleInGraph& cycle) {
  return {static_cast<std::int64_t>(min_antipodal_distance2(metric, cycle)),
          static_cast<std::int64_t>(cycle.length())};
}

bool satisfies_antipodal_bound(const Metric& metric, const CycleInGraph& cycle,
                               RationalParam xi_bar) {
  if (xi_bar.num() <= 0 || xi_bar > RationalParam(1, 1)) {
    throw InvalidParameter("antipodal bound needs 0 < xi <= 1, got " + xi_bar.to_string());
  }
  require_cycle_in(metric, cycle);
  const std::size_t n = cycle.length();
  const auto p = static_cast<std::uint64_t>(xi_bar.num());
  const auto q = static_cast<std::uint64_t>(xi_bar.den());
  for (std::size_t a = 0; a < n; ++a) {
    if (q * point_distance2(metric, cycle, a, a + n) < p * n) return false;
  }
  return true;
}

bool is_isometric_cycle(const Metric& metric, const CycleInGraph& cycle) {
  return satisfies_antipodal_bound(metric, cycle, RationalParam(1, 1));
}

bool is_almost_isometric_cycle(const Metric& metric, const CycleInGraph& cycle,
                               RationalParam xi) {
  if (!xi.is_valid_xi()) throw InvalidParameter("xi must satisfy 0 < xi < 1, got " + xi.to_string());
  return satisfies_antipodal_bound(metric, cycle, xi);
}

bool is_bilipschitz_cycle(const Metric& metric, const CycleInGraph& cycle, RationalParam k) {
  if (!k.is_valid_k()) throw InvalidParameter("K must satisfy K >= 1, got " + k.to_string());
  require_cycle_in(metric, cycle);
  const std::size_t points = 2 * cycle.length();
  const auto p = static_cast<std::uint64_t>(k.num());
  const auto q = static_cast<std::uint64_t>(k.den());
  for (std::size_t a = 0; a < points; ++a) {
    for (std::size_t b = a + 1; b < points; ++b) {
      // d_Gamma >= d_C / K  <=>  p * D >= q * DC with K = p / q.
      if (p * point_distance2(metric, cycle, a, b) <
          q * doubled_cycle_distance(a, b, cycle.length())) {
        return false;
      }
    }
  }
  return true;
}

bool is_isometric_all_pairs(const Metric& metric, const CycleInGraph& cycle) {
  require_cycle_in(metric, cycle);
  const std::size_t n = cycle.length();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (metric.distance(cycle.at(i), cycle.at(j)) != cycle.cycle_distance(i, j)) return false;
    }
  }
  return true;
}

bool satisfies_pair_relaxation(const Metric& metric, const CycleInGraph& cycle,
                               RationalParam xi_bar) {
  require_cycle_in(metric, cycle);
  const std::size_t n = cycle.length();
  const auto p = static_cast<std::int64_t>(xi_bar.num());
  const auto q = static_cast<std::int64_t>(xi_bar.den());
  for (std::size_t a = 0; a < 2 * n; ++a) {
    for (std::size_t b = a + 1; b < 2 * n; ++b) {
      const auto lhs = q * static_cast<std::int64_t>(point_distance2(metric, cycle, a, b));
      const auto rhs = q * static_cast<std::int64_t>(doubled_cycle_distance(a, b, n)) -
                       (q - p) * static_cast<std::int64_t>(n);
      if (lhs < rhs) return false;
    }
  }
  return true;
}

std::optional<ViolatingPair> find_violating_pair(const Metric& metric, const CycleInGraph& cycle,
                                                 RationalParam xi_bar) {
  require_cycle_in(metric, cycle);
  const std::size_t n = cycle.length();
  const std::size_t floor_half = n / 2;
  const std::size_t min_gap = floor_half >= 1 ? floor_half - 1 : 0;
  const auto p = static_cast<std::uint64_t>(xi_bar.num());
  const auto q = static_cast<std::uint64_t>(xi_bar.den());
  std::optional<ViolatingPair> best;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t dc = cycle.cycle_distance(i, j);
      if (dc < min_gap) continue;
      if (best && dc <= best->cycle_distance) continue;
      const std::uint32_t d = metric.distance(cycle.at(i), cycle.at(j));
      if (q * d < p * dc) {
        best = ViolatingPair{i, j, static_cast<std::uint32_t>(dc), d};
      }
    }
  }
  return best;
}

}  // namespace shortcut
