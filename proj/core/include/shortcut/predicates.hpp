#pragma once

#include <cstdint>
#include <optional>

#include "shortcut/cycle.hpp"
#include "shortcut/distance.hpp"
#include "shortcut/rational.hpp"

namespace shortcut {

// Points of a cycle of length n are addressed on its subdivision: position
// 2i is the vertex v_i and position 2i + 1 is the midpoint of the edge
// {v_i, v_{i+1}}. Every antipodal pair of points is then a pair of positions
// n apart, and every distance below is doubled so it stays integral.

/// Doubled host distance between the images of two subdivision positions.
std::uint64_t point_distance2(const Metric& metric, const CycleInGraph& cycle, std::size_t a,
                              std::size_t b);

/// Minimum doubled host distance over all antipodal pairs of points. For a
/// cycle of length n this lies in [0, n].
std::uint64_t min_antipodal_distance2(const Metric& metric, const CycleInGraph& cycle);

/// min over antipodal pairs of 2 d(f(p), f(q)) / |C|, as an exact fraction.
RationalParam antipodal_ratio(const Metric& metric, const CycleInGraph& cycle);

bool is_isometric_cycle(const Metric& metric, const CycleInGraph& cycle);
bool is_almost_isometric_cycle(const Metric& metric, const CycleInGraph& cycle, RationalParam xi);
bool is_bilipschitz_cycle(const Metric& metric, const CycleInGraph& cycle, RationalParam k);

// Antipodal test with xi_bar in (0, 1]; xi_bar = 1 is the isometric case.
bool satisfies_antipodal_bound(const Metric& metric, const CycleInGraph& cycle,
                               RationalParam xi_bar);

// Direct definitions, kept separate from the antipodal tests above so the
// two routes can be checked against each other.
bool is_isometric_all_pairs(const Metric& metric, const CycleInGraph& cycle);
// d(f(p), f(q)) >= d_C(p, q) - (1 - xi_bar)|C|/2 for every pair of points.
bool satisfies_pair_relaxation(const Metric& metric, const CycleInGraph& cycle,
                               RationalParam xi_bar);

struct ViolatingPair {
  std::size_t i = 0;  // cycle positions, i < j
  std::size_t j = 0;
  std::uint32_t cycle_distance = 0;
  std::uint32_t graph_distance = 0;
};

/// Vertices u, v with d_C(u, v) >= floor(|C|/2) - 1 and
/// d(f(u), f(v)) < xi_bar d_C(u, v). Among all such pairs returns the one
/// with the largest d_C, ties broken by the smallest (i, j).
std::optional<ViolatingPair> find_violating_pair(const Metric& metric, const CycleInGraph& cycle,
                                                 RationalParam xi_bar);

void require_cycle_in(const Metric& metric, const CycleInGraph& cycle);

}  // namespace shortcut
