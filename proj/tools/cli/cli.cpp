#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "shortcut/bs12_verify.hpp"
#include "shortcut/cayley.hpp"
#include "shortcut/disk_diagram.hpp"
#include "shortcut/shortcut_analysis.hpp"
#include "shortcut/wall_cycle.hpp"

namespace shortcut::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Global {
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::uint64_t budget = 200'000'000;
};

// What a command hands back: its result block, its exit code and, for
// commands that produce a file (graphs, balls, DOT), that file's text.
struct Outcome {
  Json config = Json::object();
  Json result = Json::object();
  int code = ok;
  std::optional<std::string> artifact;
};

// Raised for command-line values that CLI11 accepts syntactically but the
// command cannot use.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

Graph load_graph(const std::string& path) {
  try {
    return graph_from_json(read_file(path));
  } catch (const ParseError& e) {
    // The message already carries the line and column.
    throw UsageError(path + ": " + e.what());
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  return parts;
}

std::int64_t to_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw UsageError("bad " + what + ": '" + s + "'");
  return v;
}

// "3" or "1..3".
std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto k = to_int(text, "range");
    if (k < 0) throw UsageError("range bounds must be nonnegative");
    return {static_cast<std::size_t>(k), static_cast<std::size_t>(k)};
  }
  const auto lo = to_int(text.substr(0, dots), "range");
  const auto hi = to_int(text.substr(dots + 2), "range");
  if (lo < 0 || hi < lo) throw UsageError("bad range '" + text + "'");
  return {static_cast<std::size_t>(lo), static_cast<std::size_t>(hi)};
}

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  if (const char* env = std::getenv("SHORTCUT_LAB_THREADS")) {
    const auto v = to_int(env, "SHORTCUT_LAB_THREADS");
    if (v < 1 || v > 1024) throw UsageError("SHORTCUT_LAB_THREADS must lie in 1..1024");
    return static_cast<unsigned>(v);
  }
  return 1;
}

// ---- text rendering ----

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render_object(const Json& obj, const std::string& prefix, int depth, std::string& out) {
  for (const auto& [key, v] : obj.items()) {
    const std::string name = prefix + key;
    if (v.is_object() && depth < 2) {
      render_object(v, name + ".", depth + 1, out);
    } else if (v.is_array()) {
      const bool flat = std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); });
      if (flat && v.size() <= 16) {
        std::string items;
        for (const auto& e : v) items += (items.empty() ? "" : ", ") + scalar_text(e);
        out += name + ": [" + items + "]\n";
      } else {
        out += name + ": " + std::to_string(v.size()) + " entries\n";
      }
    } else if (v.is_object()) {
      out += name + ": {" + std::to_string(v.size()) + " fields}\n";
    } else {
      out += name + ": " + scalar_text(v) + "\n";
    }
  }
}

std::string render_text(const Json& report) {
  std::string out = "command: " + report["command"].get<std::string>() + "\n";
  out += "verdict: " + report["verdict"].get<std::string>() + "\n";
  render_object(report["result"], "", 0, out);
  out += "time: " + report["timing"]["seconds"].dump() + " s\n";
  return out;
}

const char* verdict_name(int code) {
  switch (code) {
    case ok: return "pass";
    case violation: return "violation";
    case budget: return "budget_exhausted";
    default: return "error";
  }
}

// ---- commands ----

Outcome cmd_analyze(const Global& g, const std::string& graph_path, std::size_t max_len, const std::string& mode,
                    bool profile, std::optional<VertexId> base) {
  if (mode != "exact" && mode != "heuristic") throw UsageError("--mode must be exact or heuristic");
  const Graph graph = load_graph(graph_path);
  const DistanceOracle metric(graph);
  SearchOptions opts;
  opts.strategy = mode == "exact" ? SearchStrategy::exhaustive : SearchStrategy::heuristic;
  opts.budget.max_expansions = g.budget;
  opts.seed = g.seed;
  opts.threads = resolve_threads(g.threads);
  opts.base_vertex = base;

  Outcome o;
  o.config = {{"graph", graph_path}, {"max_cycle_len", max_len}, {"mode", mode}, {"profile", profile},
              {"base_vertex", base ? Json(*base) : Json(nullptr)}};
  const ShortcutReport cert = shortcut_certificate(metric, max_len, opts);
  o.result = to_json(cert);
  o.result["vertices"] = graph.vertex_count();
  o.result["diameter"] = metric.diameter();
  bool complete = cert.exhaustive;
  if (profile) {
    const StrongShortcutProfile p = strong_shortcut_profile(metric, 3, max_len, opts);
    o.result["profile"] = to_json(p);
    for (const auto& e : p.entries) complete = complete && e.exhaustive;
  }
  if (mode == "exact" && !complete) o.code = budget;
  return o;
}

Outcome cmd_disk(const std::string& graph_path, const std::string& cycle_text, std::size_t theta,
                 const std::string& xi, std::size_t max_length, const std::string& dot_path) {
  const Graph graph = load_graph(graph_path);
  std::vector<VertexId> walk;
  for (const auto& part : split(cycle_text, ',')) {
    const auto v = to_int(part, "cycle vertex");
    if (v < 0 || static_cast<std::size_t>(v) >= graph.vertex_count()) {
      throw UsageError("cycle vertex " + part + " is not in the graph");
    }
    walk.push_back(static_cast<VertexId>(v));
  }
  const CycleInGraph cycle(graph, walk);
  FillingParams params;
  params.theta = theta;
  params.xi = RationalParam::parse(xi);
  params.max_length = max_length == 0 ? std::max(cycle.length(), theta) : max_length;
  params.validate();

  Outcome o;
  o.config = {{"graph", graph_path}, {"cycle", walk}, {"theta", theta}, {"xi", params.xi.to_string()},
              {"max_length", params.max_length}};
  const DistanceOracle metric(graph);
  try {
    const DiskDiagram d = build_disk_diagram(metric, cycle, params);
    const auto problems = validate_diagram(graph, cycle, d, theta);
    o.result = {{"area", d.area()},
                {"diameter", d.diameter()},
                {"valid", problems.empty()},
                {"problems", problems},
                {"diameter_subadditive", diameter_subadditive(d)},
                {"area_recurrence", area_recurrence_holds(d)},
                {"diagram", to_json(d)}};
    if (!problems.empty()) o.code = violation;
    if (!dot_path.empty()) write_file(dot_path, to_dot(d.skeleton, "diagram"));
  } catch (const PropertyAViolated& e) {
    o.result = {{"property_a_violated", true}, {"witness", e.witness()}, {"message", e.what()}};
    o.code = violation;
  }
  return o;
}

Outcome cmd_wallcycle(const Global& g, std::size_t dim, std::size_t max_len, bool random, std::size_t samples,
                      std::uint64_t max_candidates) {
  WallVerifyOptions opts;
  opts.dim = dim;
  opts.max_len = max_len;
  opts.strategy = random ? WallSearch::random : WallSearch::exhaustive_pairs;
  opts.samples = samples;
  opts.seed = g.seed;
  opts.max_candidates = max_candidates;
  opts.threads = resolve_threads(g.threads);
  Outcome o;
  o.config = {{"dim", dim}, {"max_len", max_len}, {"strategy", random ? "random" : "exhaustive"}};
  if (random) {
    o.config["samples"] = samples;
    o.config["seed"] = g.seed;
  }
  const WallTheoremReport r = verify_wallcycle_theorem(opts);
  o.result = to_json(r);
  o.code = !r.holds() ? violation : r.complete ? ok : budget;
  return o;
}

Outcome cmd_cayley(const Global& g, const std::string& group, const std::string& vectors, const std::string& gens,
                   std::size_t radius, std::size_t max_elements) {
  BallOptions opts;
  opts.max_elements = max_elements;
  opts.threads = resolve_threads(g.threads);
  Outcome o;
  o.config = {{"group", group}, {"radius", radius}};
  auto summarize = [&](const auto& ball) {
    Json levels = Json::array();
    for (std::size_t r = 0; r <= ball.radius(); ++r) {
      levels.push_back(ball.level_end(r) - (r == 0 ? 0 : ball.level_end(r - 1)));
    }
    o.result = {{"size", ball.size()},
                {"edges", ball.graph().edges().size()},
                {"generators", ball.generator_labels()},
                {"sphere_sizes", std::move(levels)}};
    o.artifact = ball_to_json(ball).dump() + "\n";
  };
  if (group == "zn") {
    if (vectors.empty()) throw UsageError("--group zn needs --vectors, e.g. \"1,0;0,1\"");
    FreeAbelianSpec spec;
    for (const auto& v : split(vectors, ';')) {
      std::vector<std::int64_t> coords;
      for (const auto& c : split(v, ',')) coords.push_back(to_int(c, "vector coordinate"));
      spec.generators.push_back(std::move(coords));
    }
    spec.rank = spec.generators.front().size();
    o.config["vectors"] = spec.generators;
    summarize(cayley_ball(spec, radius, opts));
  } else if (group == "bs12") {
    BS12Spec spec{split(gens, ',')};
    o.config["gens"] = spec.generators;
    summarize(cayley_ball(spec, radius, opts));
  } else {
    throw UsageError("--group must be zn or bs12");
  }
  return o;
}

int verdict(bool holds) { return holds ? ok : violation; }

Outcome cmd_graph(const std::string& family, std::size_t n, std::size_t width, std::size_t height,
                  std::size_t degree, std::size_t radius) {
  Graph graph;
  Outcome o;
  o.config = {{"family", family}};
  if (family == "cycle") {
    graph = graphs::cycle(n), o.config["n"] = n;
  } else if (family == "path") {
    graph = graphs::path(n), o.config["n"] = n;
  } else if (family == "complete") {
    graph = graphs::complete(n), o.config["n"] = n;
  } else if (family == "hypercube") {
    graph = graphs::hypercube(n), o.config["n"] = n;
  } else if (family == "grid") {
    graph = graphs::grid(width, height), o.config["width"] = width, o.config["height"] = height;
  } else if (family == "tree") {
    graph = graphs::regular_tree_ball(degree, radius), o.config["degree"] = degree, o.config["radius"] = radius;
  } else {
    throw UsageError("unknown family '" + family + "' (cycle, path, complete, hypercube, grid, tree)");
  }
  o.result = {{"vertices", graph.vertex_count()}, {"edges", graph.edges().size()}};
  o.artifact = to_json(graph) + "\n";
  return o;
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  RunResult res;
  CLI::App app{"shortcut-lab: shortcut certificates, disk diagrams, wall cycles and BS(1,2) checks",
               "shortcut-lab"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", g.out, "Write the report (or the generated file) here");
  app.add_option("--seed", g.seed, "Seed for randomized modes");
  app.add_option("--threads", g.threads, "Worker threads (default: $SHORTCUT_LAB_THREADS or 1)");
  app.add_option("--budget", g.budget, "Maximum search node expansions")->check(CLI::PositiveNumber);

  std::function<Outcome()> action;
  std::string command;

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Shortcut certificate and strong-shortcut profile of a graph");
  std::string graph_path, mode = "exact";
  std::size_t max_len = 0;
  bool no_profile = false;
  std::optional<VertexId> base;
  analyze->add_option("--graph", graph_path, "Graph JSON file")->required();
  analyze->add_option("--max-cycle-len", max_len, "Longest cycle length to search")->required();
  analyze->add_option("--mode", mode, "exact or heuristic");
  analyze->add_flag("--no-profile", no_profile, "Skip the xi_max profile");
  analyze->add_option("--base-vertex", base, "Only search cycles through this vertex (vertex-transitive input)");
  analyze->callback([&] {
    command = "analyze";
    action = [&] { return cmd_analyze(g, graph_path, max_len, mode, !no_profile, base); };
  });

  // disk
  auto* disk = app.add_subcommand("disk", "Build a disk diagram for a cycle");
  std::string cycle_text, xi = "9/10", dot_path;
  std::size_t theta = 4, fill_range = 0;
  disk->add_option("--graph", graph_path, "Graph JSON file")->required();
  disk->add_option("--cycle", cycle_text, "Comma-separated vertex ids")->required();
  disk->add_option("--theta", theta, "Longest cell");
  disk->add_option("--xi", xi, "Almost-isometry parameter p/q");
  disk->add_option("--max-length", fill_range, "Filling range N (default: max(|C|, theta))");
  disk->add_option("--dot", dot_path, "Also write the skeleton as DOT");
  disk->callback([&] {
    command = "disk";
    action = [&] { return cmd_disk(graph_path, cycle_text, theta, xi, fill_range, dot_path); };
  });

  // wallcycle verify
  auto* wall = app.add_subcommand("wallcycle", "Wall-cycle checks");
  wall->require_subcommand(1);
  auto* wall_verify = wall->add_subcommand("verify", "Search for wall cycles that break the length bound");
  std::size_t dim = 1, wall_len = 14, samples = 100'000;
  std::uint64_t max_candidates = 500'000'000;
  bool exhaustive = false, random = false;
  wall_verify->add_option("--dim", dim, "Dimension bound d")->check(CLI::PositiveNumber);
  wall_verify->add_option("--max-len", wall_len, "Longest cycle");
  auto* ex_flag = wall_verify->add_flag("--exhaustive", exhaustive, "Enumerate every wall pairing");
  wall_verify->add_flag("--random", random, "Sample random wall cycles")->excludes(ex_flag);
  wall_verify->add_option("--samples", samples, "Random samples");
  wall_verify->add_option("--max-candidates", max_candidates, "Exhaustive budget (raw pairings)");
  wall_verify->callback([&] {
    command = "wallcycle verify";
    action = [&] { return cmd_wallcycle(g, dim, wall_len, random, samples, max_candidates); };
  });

  // cayley
  auto* cay = app.add_subcommand("cayley", "Generate a Cayley-graph ball");
  std::string group, vectors, gens = "a,t";
  std::size_t radius = 0, max_elements = 5'000'000;
  cay->add_option("--group", group, "zn or bs12")->required();
  cay->add_option("--vectors", vectors, "Z^n generators, e.g. \"1,0;0,1;1,1\"");
  cay->add_option("--gens", gens, "BS(1,2) generators, e.g. a,t,tau");
  cay->add_option("--radius", radius, "Ball radius")->required();
  cay->add_option("--max-elements", max_elements, "Element budget");
  cay->callback([&] {
    command = "cayley";
    action = [&] { return cmd_cayley(g, group, vectors, gens, radius, max_elements); };
  });

  // bs12
  auto* bs = app.add_subcommand("bs12", "Baumslag-Solitar BS(1,2) checks");
  bs->require_subcommand(1);
  VerifyOptions vopts;
  auto bind = [&](CLI::App* sub, std::string name, std::function<Outcome()> body) {
    sub->callback([&, name, body] {
      command = "bs12 " + name;
      action = body;
    });
  };
  auto set_threads = [&] {
    vopts.ball.threads = resolve_threads(g.threads);
    vopts.max_expansions = g.budget;
  };

  std::size_t bss_len = 10;
  auto* bss = bs->add_subcommand("verify-bss", "No isometric cycles longer than 5 for {a, t}");
  bss->add_option("--max-cycle-len", bss_len, "Longest cycle to search");
  bind(bss, "verify-bss", [&] {
    set_threads();
    Outcome o;
    o.config = {{"max_cycle_len", bss_len}};
    const BssReport r = verify_bss(bss_len, vopts);
    o.result = to_json(r);
    o.code = !r.holds() ? violation : r.exhaustive ? ok : budget;
    return o;
  });

  std::string k_range = "1..3";
  auto* attaugc = bs->add_subcommand("verify-attaugc", "Isometric cycles of length 4k + 4 for {a, t, tau}");
  attaugc->add_option("--k", k_range, "k or k1..k2");
  bind(attaugc, "verify-attaugc", [&] {
    set_threads();
    const auto [lo, hi] = parse_range(k_range);
    Outcome o;
    o.config = {{"k", {lo, hi}}};
    const AttaugcReport r = verify_attaugc(lo, hi, vopts);
    o.result = to_json(r);
    o.code = verdict(r.holds());
    return o;
  });

  std::string geo_range = "2..5";
  auto* attaugeos = bs->add_subcommand("verify-attaugeos", "Geodesics tau^l a tau^-k a^(+-1) tau^(k-l)");
  attaugeos->add_option("--k", geo_range, "k or k1..k2 (k >= 2)");
  bind(attaugeos, "verify-attaugeos", [&] {
    set_threads();
    const auto [lo, hi] = parse_range(geo_range);
    Outcome o;
    o.config = {{"k", {lo, hi}}};
    const AttaugeosReport r = verify_attaugeos(lo, hi, vopts);
    o.result = to_json(r);
    o.code = verdict(r.holds());
    return o;
  });

  std::size_t geo_radius = 8;
  auto* lemmas = bs->add_subcommand("verify-geodesic-lemmas", "Structure of {a, t} geodesics in a ball");
  lemmas->add_option("--radius", geo_radius, "Ball radius")->check(CLI::PositiveNumber);
  bind(lemmas, "verify-geodesic-lemmas", [&] {
    set_threads();
    Outcome o;
    o.config = {{"radius", geo_radius}};
    const GeodesicLemmaReport r = verify_geodesic_lemmas(geo_radius, vopts);
    o.result = to_json(r);
    o.code = verdict(r.holds());
    return o;
  });

  std::size_t zero_len = 8;
  auto* zero = bs->add_subcommand("verify-zeroheight", "Height-zero words with nonnegative prefixes are powers of a");
  zero->add_option("--max-len", zero_len, "Longest word");
  bind(zero, "verify-zeroheight", [&] {
    Outcome o;
    o.config = {{"max_len", zero_len}};
    const LemmaCheck c = verify_zeroheight(zero_len);
    o.result = to_json(c);
    o.code = verdict(c.ok());
    return o;
  });

  std::size_t kmax = 6, mmax = 4;
  auto* powtsum = bs->add_subcommand("verify-powtsum", "Lower bounds for sums of signed powers of two");
  powtsum->add_option("--kmax", kmax, "Largest k");
  powtsum->add_option("--mmax", mmax, "Largest m");
  bind(powtsum, "verify-powtsum", [&] {
    Outcome o;
    o.config = {{"kmax", kmax}, {"mmax", mmax}};
    const PowtsumReport r = verify_powtsum(kmax, mmax);
    o.result = to_json(r);
    o.code = verdict(r.holds());
    return o;
  });

  // graph
  auto* graph_cmd = app.add_subcommand("graph", "Graph files");
  graph_cmd->require_subcommand(1);
  auto* generate = graph_cmd->add_subcommand("generate", "Write a standard graph as JSON");
  std::string family;
  std::size_t n = 0, width = 0, height = 0, degree = 3, tree_radius = 2;
  generate->add_option("--family", family, "cycle, path, complete, hypercube, grid or tree")->required();
  generate->add_option("--n", n, "Size (vertices; dimension for hypercube)");
  generate->add_option("--width", width, "Grid width");
  generate->add_option("--height", height, "Grid height");
  generate->add_option("--degree", degree, "Tree degree");
  generate->add_option("--radius", tree_radius, "Tree radius");
  generate->callback([&] {
    command = "graph generate";
    action = [&] { return cmd_graph(family, n, width, height, degree, tree_radius); };
  });
  auto* dot = graph_cmd->add_subcommand("dot", "Convert a graph JSON file to DOT");
  dot->add_option("--graph", graph_path, "Graph JSON file")->required();
  dot->callback([&] {
    command = "graph dot";
    action = [&] {
      const Graph graph = load_graph(graph_path);
      Outcome o;
      o.config = {{"graph", graph_path}};
      o.result = {{"vertices", graph.vertex_count()}, {"edges", graph.edges().size()}};
      o.artifact = to_dot(graph);
      return o;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    res.exit_code = app.exit(e, out, err) == 0 ? ok : usage;
    res.out = out.str();
    res.err = err.str();
    return res;
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  unsigned threads = 1;
  try {
    threads = resolve_threads(g.threads);
    outcome = action();
  } catch (const BudgetExhausted& e) {
    outcome.code = budget;
    outcome.result = {{"error", e.what()}, {"completed", e.completed()}};
  } catch (const ParseError& e) {
    res.exit_code = usage;
    res.err = std::string("error: ") + e.what() + "\n";
    return res;
  } catch (const std::exception& e) {
    // Library errors and bad option values are all input problems here.
    res.exit_code = usage;
    res.err = std::string("error: ") + e.what() + "\n";
    return res;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  Json report;
  report["tool"] = "shortcut-lab";
  report["version"] = SHORTCUT_LAB_VERSION;
  report["command"] = command;
  outcome.config["threads"] = threads;
  report["config"] = outcome.config;
  report["verdict"] = verdict_name(outcome.code);
  report["result"] = outcome.result;
  report["timing"] = {{"seconds", seconds}};
  res.exit_code = outcome.code;
  res.report = report;

  const std::string rendered = g.format == "text" ? render_text(report) : report.dump(2) + "\n";
  try {
    if (outcome.artifact) {
      // Generated files go to --out when given (with the report on stdout),
      // otherwise straight to stdout.
      if (g.out.empty()) {
        res.out = *outcome.artifact;
      } else {
        write_file(g.out, *outcome.artifact);
        res.out = rendered;
      }
    } else if (!g.out.empty()) {
      write_file(g.out, rendered);
    } else {
      res.out = rendered;
    }
  } catch (const std::exception& e) {
    res.exit_code = usage;
    res.err = std::string("error: ") + e.what() + "\n";
  }
  return res;
}

}  // namespace shortcut::cli
