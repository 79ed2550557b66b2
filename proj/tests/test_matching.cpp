#include "doctest.h"

#include <algorithm>
#include <set>

#include "brute.hpp"
#include "graphcap/errors.hpp"
#include "graphcap/matching.hpp"
#include "graphcap/oracle.hpp"

using namespace graphcap;

namespace {

bool is_matching_of(const Graph& g, const Matching& m) {
  std::set<Vertex> seen;
  for (const Edge& e : m.edges) {
    if (!g.adjacent(e.u, e.v)) return false;
    if (!seen.insert(e.u).second || !seen.insert(e.v).second) return false;
  }
  return m.edges.size() == m.size;
}

bool is_cycle_graph(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return false;
  return components(g).size() == 1;
}

}  // namespace

TEST_SUITE("matching") {
  TEST_CASE("double cover") {
    Graph k2 = bipartite_double_cover(complete_graph(2));
    CHECK(k2.order() == 4);
    CHECK(k2.edges() == std::vector<Edge>{{0, 3}, {1, 2}});
    Graph k3 = bipartite_double_cover(complete_graph(3));
    CHECK(k3.order() == 6);
    CHECK(is_cycle_graph(k3));
    Graph c5 = bipartite_double_cover(cycle_graph(5));
    CHECK(c5.order() == 10);
    CHECK(is_cycle_graph(c5));
    // Even cycles double into two disjoint copies.
    CHECK(components(bipartite_double_cover(cycle_graph(4))).size() == 2);
  }

  TEST_CASE("maximum matching") {
    CHECK(max_matching(cycle_graph(5)).size == 2);
    CHECK(max_matching(complete_graph(4)).size == 2);
    CHECK(max_matching(petersen_graph()).size == 5);
    CHECK(max_matching(star_graph(5)).size == 1);
    CHECK(max_matching(Graph(3, {})).size == 0);
    for (const auto& entry : random_corpus(120, 2, 12, 41)) {
      Matching m = max_matching(entry.graph);
      CHECK(is_matching_of(entry.graph, m));
      CHECK(m.size == brute::matching_number(entry.graph));
    }
  }

  TEST_CASE("hopcroft-karp") {
    // Left 0 reaches both; left 1 only right 0.
    auto mate = hopcroft_karp(2, 2, {{0, 1}, {0}});
    CHECK(mate[0] == 1);
    CHECK(mate[1] == 0);
    auto partial = hopcroft_karp(3, 1, {{0}, {0}, {0}});
    CHECK(std::count(partial.begin(), partial.end(), -1) == 2);
  }

  TEST_CASE("maximum 2-matching") {
    TwoMatching k3 = max_2matching(complete_graph(3));
    CHECK(k3.twice_value == 3);
    CHECK(k3.value == 1.5);
    for (auto h : k3.weights.halves) CHECK(h == 1);
    TwoMatching k2 = max_2matching(complete_graph(2));
    CHECK(k2.value == 1.0);
    CHECK(k2.weights.halves == std::vector<std::uint8_t>{2});
    CHECK(max_2matching(star_graph(3)).value == 1.0);

    for (const auto& entry : random_corpus(80, 3, 9, 43)) {
      const Graph& g = entry.graph;
      if (g.size() > 12) continue;
      TwoMatching tm = max_2matching(g);
      CHECK(tm.twice_value == brute::twice_fractional_matching(g));
      // Witness is feasible and attains the value.
      std::vector<int> load(g.order(), 0);
      for (std::size_t i = 0; i < g.size(); ++i) {
        load[g.edges()[i].u] += tm.weights.halves[i];
        load[g.edges()[i].v] += tm.weights.halves[i];
      }
      for (int l : load) CHECK(l <= 2);
      CHECK(tm.weights.twice_total() == tm.twice_value);
    }
  }

  TEST_CASE("perfect 2-matching examples") {
    auto c5 = has_perfect_2matching(cycle_graph(5));
    REQUIRE(c5.exists);
    REQUIRE(c5.certificate);
    CHECK(c5.certificate->cycles.size() == 1);
    CHECK(c5.certificate->cycles[0].size() == 5);
    CHECK(c5.certificate->matched_edges.empty());
    CHECK(c5.certificate->validate(cycle_graph(5)));

    auto k12 = has_perfect_2matching(star_graph(2));
    CHECK_FALSE(k12.exists);
    REQUIRE(k12.violator);
    CHECK(*k12.violator == VertexSet{1, 2});

    auto c4 = has_perfect_2matching(cycle_graph(4));
    REQUIRE(c4.exists);
    CHECK(c4.certificate->cycles.empty());
    CHECK(c4.certificate->matched_edges.size() == 2);

    CHECK_THROWS_AS(has_perfect_2matching(Graph(3, {{0, 1}})), IsolatedVertexError);
    CHECK_FALSE(admits_perfect_2matching(Graph(3, {{0, 1}})));
    CHECK(admits_perfect_2matching(Graph()));
  }

  TEST_CASE("certificate soundness and oracle agreement") {
    for (const auto& entry : random_corpus(200, 3, 12, 47)) {
      const Graph& g = entry.graph;
      auto r = has_perfect_2matching(g);
      CHECK(r.exists == perfect_2matching_oracle(g));
      if (r.exists) {
        REQUIRE(r.certificate);
        CHECK(r.certificate->validate(g));
        CHECK(r.certificate->covered);
        HalfIntegralVector w = r.certificate->as_edge_weights(g);
        CHECK(w.twice_total() == static_cast<std::int64_t>(g.order()));
        // Hall argument: a perfect 2-matching bounds α by ν, and ν ≥ n/3.
        std::size_t nu = max_matching(g).size;
        CHECK(alpha_bruteforce(g).alpha <= nu);
        CHECK(3 * nu >= g.order());
      } else {
        REQUIRE(r.violator);
        CHECK(is_stable(g, *r.violator));
        CHECK(neighborhood(g, *r.violator).size() < r.violator->size());
      }
      CHECK(alpha_bruteforce(g).alpha + 2 * max_matching(g).size >= g.order());
    }
  }

  TEST_CASE("tampered certificates are rejected") {
    Graph g = cycle_graph(5);
    TwoMatchingCertificate cert = *has_perfect_2matching(g).certificate;
    auto even = cert;
    even.cycles[0].pop_back();
    CHECK_FALSE(even.validate(g));
    auto off_graph = cert;
    std::swap(off_graph.cycles[0][1], off_graph.cycles[0][2]);
    CHECK_FALSE(off_graph.validate(g));
    auto overlap = cert;
    overlap.matched_edges.push_back({0, 1});
    CHECK_FALSE(overlap.validate(g));
  }

  TEST_CASE("fractional cover") {
    FractionalCover c5 = min_fractional_cover(cycle_graph(5));
    CHECK(c5.value == 2.5);
    for (auto h : c5.weights.halves) CHECK(h == 1);
    CHECK(min_fractional_cover(complete_graph(2)).value == 1.0);
    FractionalCover star = min_fractional_cover(star_graph(3));
    CHECK(star.value == 1.0);
    CHECK(star.weights.halves == std::vector<std::uint8_t>{2, 0, 0, 0});

    for (const auto& entry : random_corpus(100, 3, 11, 53)) {
      const Graph& g = entry.graph;
      FractionalCover c = min_fractional_cover(g);
      CHECK(c.twice_value == brute::twice_fractional_cover(g));
      CHECK(c.weights.twice_total() == c.twice_value);
      for (const Edge& e : g.edges()) CHECK(c.weights.halves[e.u] + c.weights.halves[e.v] >= 2);
      CHECK(c.twice_value == max_2matching(g).twice_value);
    }
  }

  TEST_CASE("basic covers") {
    HalfIntegralVector half5{HalfIntegralVector::Carrier::Vertices, {1, 1, 1, 1, 1}};
    CHECK(is_basic_2cover(cycle_graph(5), half5));
    CHECK_FALSE(is_basic_2cover(cycle_graph(5), half5, BasicConvention::PaperLiteral));
    HalfIntegralVector half4{HalfIntegralVector::Carrier::Vertices, {1, 1, 1, 1}};
    CHECK_FALSE(is_basic_2cover(cycle_graph(4), half4));
    HalfIntegralVector integral{HalfIntegralVector::Carrier::Vertices, {2, 0}};
    CHECK(is_basic_2cover(complete_graph(2), integral));
    // Weight-1 triangle: basic in the literal reading.
    HalfIntegralVector ones{HalfIntegralVector::Carrier::Vertices, {2, 2, 2}};
    CHECK(is_basic_2cover(complete_graph(3), ones, BasicConvention::PaperLiteral));
    HalfIntegralVector bad{HalfIntegralVector::Carrier::Vertices, {1, 0, 2}};
    CHECK_THROWS_AS(is_basic_2cover(path_graph(3), bad), PreconditionError);

    CHECK(parse_convention("paper-literal") == BasicConvention::PaperLiteral);
    CHECK(parse_convention("half-set") == BasicConvention::HalfSet);
    CHECK(to_string(BasicConvention::HalfSet) == "half-set");
    CHECK_THROWS(parse_convention("other"));
  }

  TEST_CASE("uniform cover status") {
    auto c5 = uniform_cover_status(cycle_graph(5));
    CHECK(c5.optimal);
    CHECK(c5.unique);
    auto k33 = uniform_cover_status(complete_bipartite(3, 3));
    CHECK(k33.optimal);
    CHECK_FALSE(k33.unique);
    auto k12 = uniform_cover_status(star_graph(2));
    CHECK_FALSE(k12.optimal);
    CHECK_FALSE(k12.unique);
  }

  TEST_CASE("deficiency levels") {
    DeficientSet star = max_ratio_set(star_graph(3));
    CHECK(star.low == VertexSet{1, 2, 3});
    CHECK(star.high == VertexSet{0});
    DeficientSet c5 = max_ratio_set(cycle_graph(5));
    CHECK(c5.low.size() <= c5.high.size());

    DeficiencyLevels p3k3 = deficiency_levels(disjoint_union(path_graph(3), complete_graph(3)));
    REQUIRE(p3k3.levels.size() == 1);
    CHECK(p3k3.levels[0].low == VertexSet{0, 2});
    CHECK(p3k3.levels[0].high == VertexSet{1});
    CHECK(p3k3.remainder == VertexSet{3, 4, 5});

    for (const auto& entry : random_corpus(150, 3, 12, 59)) {
      const Graph& g = entry.graph;
      DeficiencyLevels d = deficiency_levels(g);
      VertexSet seen = d.remainder;
      double prev = 1e9;
      for (const auto& level : d.levels) {
        CHECK(is_stable(g, level.low));
        CHECK(level.low.size() > level.high.size());
        double ratio = static_cast<double>(level.low.size()) / static_cast<double>(level.high.size());
        CHECK(ratio < prev);
        prev = ratio;
        CHECK(seen.intersected(level.low).empty());
        CHECK(seen.intersected(level.high).empty());
        seen = seen.united(level.low).united(level.high);
      }
      CHECK(seen.size() == g.order());
      CHECK(admits_perfect_2matching(induced(g, d.remainder).graph));
      CHECK(d.levels.empty() == admits_perfect_2matching(g));
    }
  }

  TEST_CASE("bipartite transport") {
    // Two leaves feeding one centre: supply 1 each, centre absorbs 2.
    CHECK(bipartite_transport_feasible({1, 2}, {0}, {{0, 1}, {0, 2}}, 1, 2));
    CHECK_FALSE(bipartite_transport_feasible({1, 2}, {0}, {{0, 1}, {0, 2}}, 1, 1));
    CHECK_FALSE(bipartite_transport_feasible({1, 2}, {0}, {{0, 1}}, 1, 2));
  }
}
