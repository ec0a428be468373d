#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "cli.hpp"
#include "shortcut/graph.hpp"

namespace fs = std::filesystem;
using shortcut::cli::run;

namespace {

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path p = fs::temp_directory_path() / ("shortcut_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

std::string file(const std::string& name) { return (scratch() / name).string(); }

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

nlohmann::ordered_json without_timing(nlohmann::ordered_json report) {
  report.erase("timing");
  return report;
}

}  // namespace

TEST_CASE("analyze a hexagon") {
  REQUIRE(run({"graph", "generate", "--family", "cycle", "--n", "6", "--out", file("c6.json")}).exit_code == 0);
  const auto r = run({"analyze", "--graph", file("c6.json"), "--max-cycle-len", "8"});
  CHECK(r.exit_code == 0);
  CHECK(r.report["verdict"] == "pass");
  CHECK(r.report["result"]["theta"] == 6);
  CHECK(r.report["result"]["exhaustive"] == true);
  CHECK(r.report["result"]["profile"].size() == 6);
  // stdout carries the same report
  CHECK(without_timing(nlohmann::ordered_json::parse(r.out)) == without_timing(r.report));
}

TEST_CASE("report layout and text format") {
  const auto r = run({"bs12", "verify-powtsum", "--kmax", "3", "--mmax", "1", "--format", "text"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("command: bs12 verify-powtsum\nverdict: pass\n") == 0);
  const std::vector<std::string> keys{"tool", "version", "command", "config", "verdict", "result", "timing"};
  std::vector<std::string> got;
  for (const auto& [k, v] : r.report.items()) got.push_back(k);
  CHECK(got == keys);
}

TEST_CASE("wall-cycle verification through the CLI") {
  const auto ex = run({"wallcycle", "verify", "--dim", "1", "--max-len", "14", "--exhaustive"});
  CHECK(ex.exit_code == 0);
  CHECK(ex.report["result"]["longest_satisfying"].get<int>() <= 12);

  const std::vector<std::string> args{"wallcycle", "verify", "--dim", "2", "--max-len", "16", "--random",
                                      "--samples", "4000", "--seed", "5", "--threads", "2"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.exit_code == 0);
  CHECK(without_timing(a.report).dump() == without_timing(b.report).dump());
  CHECK(a.report["config"]["seed"] == 5);

  CHECK(run({"wallcycle", "verify", "--exhaustive", "--random"}).exit_code == 2);
  const auto over = run({"wallcycle", "verify", "--max-len", "14", "--exhaustive", "--max-candidates", "10"});
  CHECK(over.exit_code == 3);
  CHECK(over.report["verdict"] == "budget_exhausted");
}

TEST_CASE("BS(1,2) verifiers through the CLI") {
  const auto bss = run({"bs12", "verify-bss", "--max-cycle-len", "10"});
  CHECK(bss.exit_code == 0);
  CHECK(bss.report["result"]["long_cycles"].empty());

  // k = 1 is reported as a violation (see the library tests); k >= 2 passes.
  CHECK(run({"bs12", "verify-attaugc", "--k", "1..3"}).exit_code == 1);
  CHECK(run({"bs12", "verify-attaugc", "--k", "2..3"}).exit_code == 0);
  CHECK(run({"bs12", "verify-attaugc", "--k", "0"}).exit_code == 2);
  CHECK(run({"bs12", "verify-attaugc", "--k", "3..1"}).exit_code == 2);
  CHECK(run({"bs12", "verify-attaugeos", "--k", "2..4"}).exit_code == 0);
  CHECK(run({"bs12", "verify-geodesic-lemmas", "--radius", "6"}).exit_code == 0);
  CHECK(run({"bs12", "verify-zeroheight", "--max-len", "6"}).exit_code == 0);
}

TEST_CASE("Cayley balls and graph files round-trip") {
  const auto c = run({"cayley", "--group", "zn", "--vectors", "1,0;0,1;1,1", "--radius", "2", "--out", file("zn.json")});
  REQUIRE(c.exit_code == 0);
  CHECK(c.report["result"]["size"] == 19);
  const auto ball = nlohmann::json::parse(slurp(file("zn.json")));
  CHECK(ball["elements"].size() == 19);
  // The embedded graph is itself a valid graph file.
  const auto g = shortcut::graph_from_json(ball["graph"].dump());
  CHECK(g.vertex_count() == 19);

  const auto bs = run({"cayley", "--group", "bs12", "--gens", "a,t,tau", "--radius", "2"});
  CHECK(bs.exit_code == 0);
  CHECK(nlohmann::json::parse(bs.out)["group"] == "bs12");
  CHECK(run({"cayley", "--group", "zn", "--radius", "2"}).exit_code == 2);
  CHECK(run({"cayley", "--group", "bs12", "--gens", "a,q", "--radius", "2"}).exit_code == 2);
  CHECK(run({"cayley", "--group", "bs12", "--radius", "9", "--max-elements", "50"}).exit_code == 3);

  for (const char* family : {"cycle", "path", "complete", "hypercube"}) {
    const auto r = run({"graph", "generate", "--family", family, "--n", "4"});
    REQUIRE(r.exit_code == 0);
    const auto parsed = shortcut::graph_from_json(r.out);
    CHECK(shortcut::to_json(parsed) + "\n" == r.out);
  }
  const auto grid = run({"graph", "generate", "--family", "grid", "--width", "3", "--height", "2"});
  CHECK(shortcut::graph_from_json(grid.out).vertex_count() == 6);
  CHECK(run({"graph", "generate", "--family", "moebius"}).exit_code == 2);
  write(file("grid.json"), grid.out);
  const auto dot = run({"graph", "dot", "--graph", file("grid.json")});
  CHECK(dot.out.find("graph") != std::string::npos);
}

TEST_CASE("disk diagrams through the CLI") {
  write(file("g32.json"), run({"graph", "generate", "--family", "grid", "--width", "3", "--height", "2"}).out);
  const auto d = run({"disk", "--graph", file("g32.json"), "--cycle", "0,1,2,5,4,3", "--theta", "4", "--xi", "9/10",
                      "--dot", file("d.dot")});
  CHECK(d.exit_code == 0);
  CHECK(d.report["result"]["area"] == 2);
  CHECK(d.report["result"]["valid"] == true);
  CHECK(fs::exists(file("d.dot")));

  // The hexagon is isometric, so theta = 4 cannot fill it.
  const auto bad = run({"disk", "--graph", file("c6.json"), "--cycle", "0,1,2,3,4,5", "--theta", "4"});
  CHECK(bad.exit_code == 1);
  CHECK(bad.report["result"]["witness"].size() == 6);
  CHECK(run({"disk", "--graph", file("g32.json"), "--cycle", "0,1,7"}).exit_code == 2);
  CHECK(run({"disk", "--graph", file("g32.json"), "--cycle", "0,2,5,3"}).exit_code == 2);
}

TEST_CASE("usage and input errors") {
  write(file("bad.json"), "{\"vertex_count\": 3,\n \"edges\": [[0,1],\n");
  const auto bad = run({"analyze", "--graph", file("bad.json"), "--max-cycle-len", "4"});
  CHECK(bad.exit_code == 2);
  CHECK(bad.err.find("line 3") != std::string::npos);
  CHECK(run({"analyze", "--graph", file("missing.json"), "--max-cycle-len", "4"}).exit_code == 2);
  CHECK(run({"analyze", "--graph", file("c6.json")}).exit_code == 2);
  CHECK(run({"analyze", "--graph", file("c6.json"), "--max-cycle-len", "8", "--mode", "fast"}).exit_code == 2);
  CHECK(run({"frobnicate"}).exit_code == 2);
  CHECK(run({}).exit_code == 2);
  CHECK(run({"--format", "xml", "bs12", "verify-powtsum"}).exit_code == 2);
  const auto help = run({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("analyze") != std::string::npos);
}

TEST_CASE("threads come from the environment unless given") {
  ::setenv("SHORTCUT_LAB_THREADS", "3", 1);
  CHECK(run({"bs12", "verify-powtsum", "--kmax", "2"}).report["config"]["threads"] == 3);
  CHECK(run({"--threads", "2", "bs12", "verify-powtsum", "--kmax", "2"}).report["config"]["threads"] == 2);
  ::setenv("SHORTCUT_LAB_THREADS", "lots", 1);
  CHECK(run({"bs12", "verify-powtsum", "--kmax", "2"}).exit_code == 2);
  ::unsetenv("SHORTCUT_LAB_THREADS");
  CHECK(run({"bs12", "verify-powtsum", "--kmax", "2"}).report["config"]["threads"] == 1);
}

TEST_CASE("reports can be written to a file") {
  const auto r = run({"--out", file("report.json"), "bs12", "verify-powtsum", "--kmax", "2"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  CHECK(nlohmann::json::parse(slurp(file("report.json")))["verdict"] == "pass");
}

TEST_CASE("exact analysis reports an exhausted budget") {
  write(file("g55.json"), run({"graph", "generate", "--family", "grid", "--width", "5", "--height", "5"}).out);
  const auto r = run({"--budget", "5", "analyze", "--graph", file("g55.json"), "--max-cycle-len", "10"});
  CHECK(r.exit_code == 3);
  const auto h = run({"--budget", "5", "analyze", "--graph", file("g55.json"), "--max-cycle-len", "10", "--mode",
                      "heuristic", "--seed", "9"});
  CHECK(h.exit_code == 0);
}
