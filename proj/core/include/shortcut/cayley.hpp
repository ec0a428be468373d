#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "shortcut/bs12.hpp"
#include "shortcut/distance.hpp"

namespace shortcut {

/// Z^rank with integer-vector elements.
struct ZnGroup {
  using Element = std::vector<std::int64_t>;
  struct Hash {
    std::size_t operator()(const Element& x) const noexcept;
  };

  std::size_t rank = 1;

  Element identity() const { return Element(rank, 0); }
  Element multiply(const Element& x, const Element& y) const;
  Element inverse(const Element& x) const;
  std::string format(const Element& x) const;
  nlohmann::ordered_json coordinates(const Element& x) const;
};

struct BS12Group {
  using Element = BS12Element;
  using Hash = BS12Hash;

  Element identity() const { return {}; }
  Element multiply(const Element& x, const Element& y) const { return x * y; }
  Element inverse(const Element& x) const { return x.inverse(); }
  std::string format(const Element& x) const { return x.to_string(); }
  // {"r": "num/2^exp" or integer string, "z": height, "normal_form": ...}
  nlohmann::ordered_json coordinates(const Element& x) const;
};

struct FreeAbelianSpec {
  std::size_t rank = 1;
  std::vector<std::vector<std::int64_t>> generators;
};

struct BS12Spec {
  std::vector<std::string> generators{"a", "t"};

  static BS12Spec standard() { return {}; }
  static BS12Spec with_tau() { return {{"a", "t", "tau"}}; }
};

using GroupSpec = std::variant<FreeAbelianSpec, BS12Spec>;

struct BallOptions {
  std::size_t max_elements = 5'000'000;
  unsigned threads = 1;
};

/// Ball of the given radius around the identity of a Cayley graph, generated
/// breadth-first. Elements are indexed level by level, sorted within each
/// level, so index order is independent of thread count. The graph contains
/// every generator edge between two ball elements.
template <class Group>
class CayleyBall {
 public:
  using Element = typename Group::Element;

  // Generators are closed under inversion; duplicates and the identity are
  // rejected. Labels name the generators in the same order.
  CayleyBall(Group group, std::vector<Element> generators, std::vector<std::string> labels, std::size_t radius,
             const BallOptions& options = {});

  const Group& group() const noexcept { return group_; }
  std::size_t radius() const noexcept { return radius_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const Graph& graph() const noexcept { return graph_; }

  const Element& element(VertexId v) const { return elements_.at(v); }
  std::uint32_t depth(VertexId v) const { return depth_.at(v); }
  std::optional<VertexId> find(const Element& x) const;
  // Number of elements at depth <= r; they occupy indices [0, level_end(r)).
  std::size_t level_end(std::size_t r) const { return level_start_.at(std::min(r, radius_) + 1); }

  const std::vector<Element>& generators() const noexcept { return generators_; }
  const std::vector<std::string>& generator_labels() const noexcept { return labels_; }
  // Generator taking edge.u to edge.v, per graph edge.
  const std::vector<std::size_t>& edge_generator() const noexcept { return edge_generator_; }
  // Index of the generator s with element(u) * s = element(v), if any.
  std::optional<std::size_t> step(VertexId u, VertexId v) const;

 private:
  Group group_;
  std::vector<Element> generators_;
  std::vector<std::string> labels_;
  std::size_t radius_;
  std::vector<Element> elements_;
  std::vector<std::uint32_t> depth_;
  std::vector<std::size_t> level_start_;
  std::unordered_map<Element, VertexId, typename Group::Hash> index_;
  Graph graph_;
  std::vector<std::size_t> edge_generator_;
};

extern template class CayleyBall<ZnGroup>;
extern template class CayleyBall<BS12Group>;

using ZnBall = CayleyBall<ZnGroup>;
using BS12Ball = CayleyBall<BS12Group>;

ZnBall cayley_ball(const FreeAbelianSpec& spec, std::size_t radius, const BallOptions& options = {});
BS12Ball cayley_ball(const BS12Spec& spec, std::size_t radius, const BallOptions& options = {});

/// Word-metric distance |x^-1 y| read from the depth table. Throws
/// RadiusInsufficient when x^-1 y lies outside the ball.
template <class Group>
std::uint32_t group_distance(const CayleyBall<Group>& ball, const typename Group::Element& x,
                             const typename Group::Element& y);

/// Exact distance up to twice the ball radius: a geodesic longer than the
/// radius passes through the sphere of that radius, so
/// d = min over s in the sphere of radius + |s^-1 x^-1 y|.
template <class Group>
std::uint32_t group_distance_mitm(const CayleyBall<Group>& ball, const typename Group::Element& x,
                                  const typename Group::Element& y);

/// The sub-ball of radius vertex_radius as a Metric whose distances are
/// word-metric distances in the whole group. Distances that exceed what the
/// ball can certify throw RadiusInsufficient. With `precompute`, all pairs
/// are tabulated up front (only for vertex balls of at most 6000 elements).
template <class Group>
class CayleyMetric final : public Metric {
 public:
  CayleyMetric(std::shared_ptr<const CayleyBall<Group>> ball, std::size_t vertex_radius, unsigned threads = 1,
               bool precompute = true);

  const Graph& graph() const noexcept override { return graph_; }
  std::uint32_t distance(VertexId u, VertexId v) const override;
  const CayleyBall<Group>& ball() const noexcept { return *ball_; }

 private:
  std::uint32_t compute(VertexId u, VertexId v) const;

  std::shared_ptr<const CayleyBall<Group>> ball_;
  Graph graph_;
  std::size_t n_;
  std::vector<std::uint8_t> table_;  // filled when the vertex ball is small
};

extern template class CayleyMetric<ZnGroup>;
extern template class CayleyMetric<BS12Group>;

/// Word spelled by a closed walk in the ball, one generator label per step.
template <class Group>
std::vector<std::string> walk_labels(const CayleyBall<Group>& ball, std::span<const VertexId> walk);

/// {"group", "radius", "generators", "graph", "edge_generators", "elements"}.
nlohmann::ordered_json ball_to_json(const ZnBall& ball);
nlohmann::ordered_json ball_to_json(const BS12Ball& ball);

}  // namespace shortcut
