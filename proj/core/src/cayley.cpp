#include "shortcut/cayley.hpp"

#include <algorithm>
#include <boost/container_hash/hash.hpp>

#include "shortcut/parallel.hpp"

namespace shortcut {

std::size_t ZnGroup::Hash::operator()(const Element& x) const noexcept {
  return boost::hash_range(x.begin(), x.end());
}

ZnGroup::Element ZnGroup::multiply(const Element& x, const Element& y) const {
  Element out(rank);
  for (std::size_t i = 0; i < rank; ++i) out[i] = x[i] + y[i];
  return out;
}

ZnGroup::Element ZnGroup::inverse(const Element& x) const {
  Element out(rank);
  for (std::size_t i = 0; i < rank; ++i) out[i] = -x[i];
  return out;
}

std::string ZnGroup::format(const Element& x) const {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(x[i]);
  }
  return out + ")";
}

nlohmann::ordered_json ZnGroup::coordinates(const Element& x) const { return x; }

nlohmann::ordered_json BS12Group::coordinates(const Element& x) const {
  const std::string r = x.r_is_integer() ? x.r_integer().str()
                                         : x.r_num().str() + "/" + (BigInt(1) << static_cast<unsigned>(x.r_exp())).str();
  return {{"r", r}, {"z", x.z()}, {"normal_form", to_string(normal_form(x))}};
}

template <class Group>
CayleyBall<Group>::CayleyBall(Group group, std::vector<Element> generators, std::vector<std::string> labels,
                              std::size_t radius, const BallOptions& options)
    : group_(std::move(group)), radius_(radius) {
  if (radius == 0) throw InvalidParameter("ball radius must be at least 1");
  if (generators.empty()) throw InvalidParameter("generating set is empty");
  if (labels.size() != generators.size()) throw InvalidParameter("one label per generator is required");
  const Element id = group_.identity();
  auto known = [&](const Element& g) { return std::find(generators_.begin(), generators_.end(), g) != generators_.end(); };
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i] == id) throw InvalidParameter("the identity is not a generator");
    if (known(generators[i])) throw InvalidParameter("duplicate generator " + labels[i]);
    generators_.push_back(generators[i]);
    labels_.push_back(labels[i]);
  }
  const std::size_t given = generators_.size();
  for (std::size_t i = 0; i < given; ++i) {
    Element inv = group_.inverse(generators_[i]);
    if (!known(inv)) {
      generators_.push_back(std::move(inv));
      labels_.push_back(labels_[i] + "^-1");
    }
  }

  elements_.push_back(id);
  depth_.push_back(0);
  index_.emplace(id, 0);
  level_start_ = {0, 1};
  const std::size_t gens = generators_.size();
  for (std::size_t r = 1; r <= radius_; ++r) {
    const std::size_t begin = level_start_[r - 1];
    const std::size_t end = level_start_[r];
    constexpr std::size_t kChunk = 1024;
    const std::size_t chunks = (end - begin + kChunk - 1) / kChunk;
    std::vector<std::vector<Element>> fresh(chunks);
    parallel_for(chunks, options.threads, [&](std::size_t c) {
      const std::size_t lo = begin + c * kChunk;
      const std::size_t hi = std::min(end, lo + kChunk);
      for (std::size_t i = lo; i < hi; ++i) {
        for (std::size_t g = 0; g < gens; ++g) {
          Element y = group_.multiply(elements_[i], generators_[g]);
          if (index_.find(y) == index_.end()) fresh[c].push_back(std::move(y));
        }
      }
    });
    std::vector<Element> level;
    for (auto& f : fresh) std::move(f.begin(), f.end(), std::back_inserter(level));
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
    if (elements_.size() + level.size() > options.max_elements) {
      throw BudgetExhausted("Cayley ball exceeds " + std::to_string(options.max_elements) + " elements at radius " +
                                std::to_string(r),
                            r - 1);
    }
    for (auto& y : level) {
      index_.emplace(y, static_cast<VertexId>(elements_.size()));
      elements_.push_back(std::move(y));
      depth_.push_back(static_cast<std::uint32_t>(r));
    }
    level_start_.push_back(elements_.size());
  }

  // Edges between ball elements; each undirected edge is recorded once,
  // from its smaller endpoint.
  const std::size_t n = elements_.size();
  std::vector<std::vector<std::pair<VertexId, std::size_t>>> out(n);
  constexpr std::size_t kChunk = 1024;
  parallel_for((n + kChunk - 1) / kChunk, options.threads, [&](std::size_t c) {
    for (std::size_t i = c * kChunk; i < std::min(n, (c + 1) * kChunk); ++i) {
      for (std::size_t g = 0; g < gens; ++g) {
        auto it = index_.find(group_.multiply(elements_[i], generators_[g]));
        if (it != index_.end() && it->second > i) out[i].emplace_back(it->second, g);
      }
    }
  });
  graph_ = Graph(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto [j, g] : out[i]) {
      graph_.add_edge(static_cast<VertexId>(i), j);
      edge_generator_.push_back(g);
    }
  }
}

template <class Group>
std::optional<VertexId> CayleyBall<Group>::find(const Element& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

template <class Group>
std::optional<std::size_t> CayleyBall<Group>::step(VertexId u, VertexId v) const {
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    if (group_.multiply(element(u), generators_[g]) == element(v)) return g;
  }
  return std::nullopt;
}

template class CayleyBall<ZnGroup>;
template class CayleyBall<BS12Group>;

ZnBall cayley_ball(const FreeAbelianSpec& spec, std::size_t radius, const BallOptions& options) {
  if (spec.rank == 0) throw InvalidParameter("rank must be positive");
  ZnGroup group{spec.rank};
  std::vector<std::string> labels;
  for (const auto& g : spec.generators) {
    if (g.size() != spec.rank) throw InvalidParameter("generator " + group.format(g) + " has the wrong rank");
    labels.push_back(group.format(g));
  }
  return ZnBall(group, spec.generators, std::move(labels), radius, options);
}

BS12Ball cayley_ball(const BS12Spec& spec, std::size_t radius, const BallOptions& options) {
  std::vector<BS12Element> gens;
  std::vector<std::string> labels;
  for (const auto& text : spec.generators) {
    const Word w = parse_word(text);
    gens.push_back(evaluate(w));
    labels.push_back(format_word(w));
  }
  return BS12Ball(BS12Group{}, std::move(gens), std::move(labels), radius, options);
}

template <class Group>
std::uint32_t group_distance(const CayleyBall<Group>& ball, const typename Group::Element& x,
                             const typename Group::Element& y) {
  const auto& g = ball.group();
  const auto diff = g.multiply(g.inverse(x), y);
  const auto v = ball.find(diff);
  if (!v) throw RadiusInsufficient(g.format(diff), ball.radius());
  return ball.depth(*v);
}

template <class Group>
std::uint32_t group_distance_mitm(const CayleyBall<Group>& ball, const typename Group::Element& x,
                                  const typename Group::Element& y) {
  const auto& g = ball.group();
  const auto diff = g.multiply(g.inverse(x), y);
  if (const auto v = ball.find(diff)) return ball.depth(*v);
  const std::size_t r = ball.radius();
  std::optional<std::uint32_t> best;
  for (std::size_t s = ball.level_end(r - 1); s < ball.size(); ++s) {
    const auto rest = ball.find(g.multiply(g.inverse(ball.element(static_cast<VertexId>(s))), diff));
    if (!rest) continue;
    const auto d = static_cast<std::uint32_t>(r + ball.depth(*rest));
    if (!best || d < *best) best = d;
  }
  if (!best) throw RadiusInsufficient(g.format(diff), 2 * r);
  return *best;
}

template std::uint32_t group_distance(const ZnBall&, const ZnGroup::Element&, const ZnGroup::Element&);
template std::uint32_t group_distance(const BS12Ball&, const BS12Element&, const BS12Element&);
template std::uint32_t group_distance_mitm(const ZnBall&, const ZnGroup::Element&, const ZnGroup::Element&);
template std::uint32_t group_distance_mitm(const BS12Ball&, const BS12Element&, const BS12Element&);

namespace {

constexpr std::size_t kTableLimit = 6000;

}  // namespace

template <class Group>
CayleyMetric<Group>::CayleyMetric(std::shared_ptr<const CayleyBall<Group>> ball, std::size_t vertex_radius,
                                  unsigned threads, bool precompute)
    : ball_(std::move(ball)) {
  if (!ball_) throw InvalidParameter("CayleyMetric needs a ball");
  if (vertex_radius > ball_->radius()) throw InvalidParameter("vertex radius exceeds the generated ball");
  n_ = ball_->level_end(vertex_radius);
  graph_ = Graph(n_);
  for (const Edge& e : ball_->graph().edges()) {
    if (e.u < n_ && e.v < n_) graph_.add_edge(e.u, e.v);
  }
  if (precompute && n_ <= kTableLimit) {
    table_.assign(n_ * n_, 0);
    parallel_for(n_, threads, [&](std::size_t u) {
      for (std::size_t v = u + 1; v < n_; ++v) {
        const auto d = compute(static_cast<VertexId>(u), static_cast<VertexId>(v));
        if (d > 255) throw TooLarge("distance exceeds the table range");
        table_[u * n_ + v] = table_[v * n_ + u] = static_cast<std::uint8_t>(d);
      }
    });
  }
}

template <class Group>
std::uint32_t CayleyMetric<Group>::compute(VertexId u, VertexId v) const {
  return group_distance_mitm(*ball_, ball_->element(u), ball_->element(v));
}

template <class Group>
std::uint32_t CayleyMetric<Group>::distance(VertexId u, VertexId v) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(u) * n_ + v];
  if (u == v) return 0;
  return compute(u, v);
}

template class CayleyMetric<ZnGroup>;
template class CayleyMetric<BS12Group>;

template <class Group>
std::vector<std::string> walk_labels(const CayleyBall<Group>& ball, std::span<const VertexId> walk) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    const auto g = ball.step(walk[i], walk[(i + 1) % walk.size()]);
    if (!g) throw CycleNotInGraph("consecutive walk vertices are not joined by a generator");
    labels.push_back(ball.generator_labels()[*g]);
  }
  return labels;
}

template std::vector<std::string> walk_labels(const ZnBall&, std::span<const VertexId>);
template std::vector<std::string> walk_labels(const BS12Ball&, std::span<const VertexId>);

namespace {

template <class Group>
nlohmann::ordered_json ball_json(const CayleyBall<Group>& ball, const char* name) {
  nlohmann::ordered_json j;
  j["group"] = name;
  j["radius"] = ball.radius();
  nlohmann::ordered_json gens = nlohmann::ordered_json::array();
  for (std::size_t g = 0; g < ball.generators().size(); ++g) {
    gens.push_back({{"label", ball.generator_labels()[g]}, {"coordinates", ball.group().coordinates(ball.generators()[g])}});
  }
  j["generators"] = std::move(gens);
  j["graph"] = nlohmann::ordered_json::parse(to_json(ball.graph()));
  j["edge_generators"] = ball.edge_generator();
  nlohmann::ordered_json elements = nlohmann::ordered_json::array();
  for (VertexId v = 0; v < ball.size(); ++v) {
    elements.push_back({{"id", v}, {"depth", ball.depth(v)}, {"coordinates", ball.group().coordinates(ball.element(v))}});
  }
  j["elements"] = std::move(elements);
  return j;
}

}  // namespace

nlohmann::ordered_json ball_to_json(const ZnBall& ball) { return ball_json(ball, "zn"); }
nlohmann::ordered_json ball_to_json(const BS12Ball& ball) { return ball_json(ball, "bs12"); }

}  // namespace shortcut
