#include "doctest.h"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "graphcap/graph.hpp"
#include "graphcap/io.hpp"

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Run r;
  r.code = graphcap::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string write_graph(const std::string& name, const std::string& text) {
  fs::path dir = fs::temp_directory_path() / "graphcap_cli_test";
  fs::create_directories(dir);
  fs::path p = dir / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string graph_file(const std::string& name, const graphcap::Graph& g) {
  return write_graph(name, graphcap::to_edge_list(g));
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("capacity report") {
    auto c5 = graph_file("c5.txt", graphcap::cycle_graph(5));
    Run r = run({"capacity", "--input", c5});
    REQUIRE(r.code == 0);
    json j = r.doc();
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"command", "input", "n", "m", "result", "certificates", "warnings",
                                           "timing_ms"});
    CHECK(j["command"] == "capacity");
    CHECK(j["n"] == 5);
    CHECK(j["m"] == 5);
    CHECK(j["result"]["theta"].get<double>() == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(j["certificates"]["stationarity"] == true);
    CHECK(j["timing_ms"].is_null());
    CHECK(run({"capacity", "--input", c5, "--timing"}).doc()["timing_ms"].is_number());
  }

  TEST_CASE("split report") {
    auto p3 = graph_file("p3.txt", graphcap::path_graph(3));
    Run r = run({"split", "--input", p3});
    REQUIRE(r.code == 0);
    json res = r.doc()["result"];
    CHECK(res["X"] == json::array({0, 2}));
    CHECK(res["F"]["vertices"].empty());
    CHECK(res["lower"] == 2);
    CHECK(res["upper"] == 2);
    json b = run({"bounds", "--input", p3}).doc()["result"];
    CHECK(b["lower"] == 2);
    CHECK(b["upper"] == 2);
  }

  TEST_CASE("verify report") {
    auto g = graph_file("star.txt", graphcap::star_graph(3));
    Run r = run({"verify", "--input", g, "--seed", "7"});
    REQUIRE(r.code == 0);
    json cert = r.doc()["certificates"];
    for (const char* name : {"line_cover", "critical_stable", "two_levels", "e_identity", "precedence", "deficiency",
                             "stationarity", "all_passed"}) {
      INFO(name);
      REQUIRE(cert.contains(name));
      CHECK(cert[name] == true);
    }
  }

  TEST_CASE("matching, cover, power and oracle") {
    auto k12 = graph_file("k12.txt", graphcap::star_graph(2));
    json m = run({"matching", "--input", k12}).doc();
    CHECK(m["result"]["nu"] == 1);
    CHECK(m["result"]["perfect_2matching"] == false);
    CHECK(m["certificates"]["violator"] == json::array({1, 2}));

    auto c5 = graph_file("c5.txt", graphcap::cycle_graph(5));
    json c = run({"cover", "--input", c5}).doc();
    CHECK(c["result"]["value"] == 2.5);
    CHECK(c["result"]["basic"] == true);
    CHECK(c["result"]["uniform_unique"] == true);
    json lit = run({"cover", "--input", c5, "--convention", "paper-literal"}).doc();
    CHECK(lit["result"]["basic"] == false);

    auto k2 = graph_file("k2.txt", graphcap::complete_graph(2));
    json p = run({"power", "--input", k2, "--t", "3", "--omega"}).doc();
    CHECK(p["result"]["n_power"] == 8);
    CHECK(p["result"]["omega"] == 8);
    CHECK(p["certificates"]["bound_holds"] == true);

    json o = run({"oracle", "--input", c5}).doc();
    CHECK(o["result"]["alpha"] == 2);
    CHECK(o["result"]["tau"] == 3);
    CHECK(o["result"]["omega"] == 2);
    CHECK(o["certificates"]["gallai"] == true);
  }

  TEST_CASE("corpus output") {
    fs::path dir = fs::temp_directory_path() / "graphcap_cli_corpus";
    fs::remove_all(dir);
    Run r = run({"oracle", "--corpus-out", dir.string(), "--count", "5", "--seed", "3"});
    REQUIRE(r.code == 0);
    json files = r.doc()["result"]["files"];
    CHECK(files.size() == 5);
    for (const auto& f : files) CHECK(fs::exists(dir / f.get<std::string>()));
    fs::remove_all(dir);
  }

  TEST_CASE("text format") {
    auto c5 = graph_file("c5.txt", graphcap::cycle_graph(5));
    Run r = run({"capacity", "--input", c5, "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out.find("theta: 0.4") != std::string::npos);
    CHECK(r.out.find("command: capacity") != std::string::npos);
  }

  TEST_CASE("DIMACS input") {
    auto d = write_graph("p3.col", "c path\np edge 3 2\ne 1 2\ne 2 3\n");
    json j = run({"split", "--input", d}).doc();
    CHECK(j["result"]["X"] == json::array({0, 2}));
  }

  TEST_CASE("input errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"capacity"}).code == 2);
    CHECK(run({"capacity", "--input", "/nonexistent/graph.txt"}).code == 2);
    auto bad = write_graph("bad.txt", "0 1\n1 1\n");
    Run r = run({"capacity", "--input", bad});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);
    auto iso = write_graph("iso.col", "p edge 3 1\ne 1 2\n");
    CHECK(run({"capacity", "--input", iso}).code == 2);
    CHECK(run({"capacity", "--input", bad, "--format", "xml"}).code == 2);
    CHECK(run({"capacity", "--help"}).code == 0);
  }

  TEST_CASE("non-convergence still reports") {
    // A tolerance below rounding error cannot be certified.
    auto p3 = graph_file("p3.txt", graphcap::path_graph(3));
    Run r = run({"capacity", "--input", p3, "--tol", "1e-300", "--max-iter", "500"});
    CHECK(r.code == 3);
    json j = r.doc();
    CHECK(j["result"]["converged"] == false);
    CHECK(j["result"]["theta"].get<double>() > 0.69);
    CHECK(j["warnings"].size() == 1);
  }

  TEST_CASE("critical rule flag") {
    auto g = write_graph("slack.txt", "0 2\n0 3\n0 4\n1 5\n1 10\n2 11\n3 6\n4 5\n5 9\n6 11\n7 9\n8 9\n9 11\n");
    CHECK(run({"split", "--input", g}).doc()["result"]["X"] == json::array({7, 8}));
    Run lit = run({"split", "--input", g, "--critical-rule", "literal"});
    CHECK(lit.code == 0);
    CHECK(lit.doc()["result"]["X"] == json::array({5, 7, 8, 11}));
    CHECK(lit.doc()["certificates"]["reliable"] == false);
    CHECK_FALSE(lit.doc()["warnings"].empty());
  }

  TEST_CASE("byte-identical reports") {
    auto g = graph_file("mixed.txt", graphcap::disjoint_union(graphcap::star_graph(4), graphcap::cycle_graph(5)));
    for (const char* cmd : {"capacity", "split", "verify"}) {
      Run a = run({cmd, "--input", g, "--seed", "5"});
      Run b = run({cmd, "--input", g, "--seed", "5"});
      CHECK(a.code == 0);
      CHECK(a.out == b.out);
    }
  }
}
