#include "doctest.h"

#include <random>

#include "graphcap/errors.hpp"
#include "graphcap/graph.hpp"
#include "graphcap/io.hpp"

using namespace graphcap;

namespace {

// Definitional predicate for the conjunctive power, evaluated on explicit tuples.
bool realizes_every_edge(const Graph& g, const std::vector<Vertex>& x, const std::vector<Vertex>& y) {
  for (const Edge& e : g.edges()) {
    bool found = false;
    for (std::size_t i = 0; i < x.size() && !found; ++i) found = Edge(x[i], y[i]) == e && x[i] != y[i];
    if (!found) return false;
  }
  return true;
}

std::vector<Vertex> tuple_of(std::size_t index, std::size_t n, unsigned t) {
  std::vector<Vertex> out(t);
  for (unsigned i = t; i-- > 0;) {
    out[i] = static_cast<Vertex>(index % n);
    index /= n;
  }
  return out;
}

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("parse edge lists") {
    Graph p3 = parse_graph("0 1\n1 2");
    CHECK(p3.order() == 3);
    CHECK(p3.size() == 2);
    CHECK(p3.adjacent(0, 1));
    CHECK_FALSE(p3.adjacent(0, 2));

    Graph c5 = parse_graph("0 1\n1 2\n2 3\n3 4\n4 0");
    CHECK(c5.order() == 5);
    CHECK(c5.edges() == cycle_graph(5).edges());

    Graph commented = parse_graph("# header\n\n0 1   # trailing\n 1\t2 \n");
    CHECK(commented.edges() == p3.edges());
  }

  TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(parse_graph("0 0"), ParseError);
    CHECK_THROWS_AS(parse_graph("0 1\n1 0"), ParseError);
    CHECK_THROWS_AS(parse_graph("0 1 2"), ParseError);
    CHECK_THROWS_AS(parse_graph("0 x"), ParseError);
    CHECK_THROWS_AS(parse_graph("-1 2"), ParseError);
    try {
      parse_graph("0 1\n2 2\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }

  TEST_CASE("parse DIMACS") {
    Graph g = parse_graph("c triangle plus pendant\np edge 4 4\ne 1 2\ne 2 3\ne 1 3\ne 3 4\n");
    CHECK(detect_format("c x\np edge 1 0\n") == GraphFormat::Dimacs);
    CHECK(g.order() == 4);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(2, 3));
    CHECK_THROWS_AS(parse_graph("p edge 3 2\ne 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("p edge 3 1\ne 1 4\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("p edge 3 2\ne 1 2\ne 2 1\n"), ParseError);
    // Declared order wins over the largest id.
    CHECK(parse_graph("p edge 5 1\ne 1 2\n").order() == 5);
  }

  TEST_CASE("construction invariants") {
    CHECK_THROWS_AS(Graph(3, {Edge(1, 1)}), GraphError);
    CHECK_THROWS_AS(Graph(3, {Edge(0, 1), Edge(1, 0)}), GraphError);
    CHECK_THROWS_AS(Graph(2, {Edge(0, 2)}), GraphError);
    Graph g(4, {Edge(0, 1), Edge(2, 1)});
    CHECK(g.first_isolated() == Vertex{3});
    CHECK_THROWS_AS(g.require_no_isolated(), IsolatedVertexError);
    for (Vertex v = 0; v < g.order(); ++v)
      for (Vertex w : g.neighbors(v)) CHECK(g.adjacent(w, v));
  }

  TEST_CASE("neighbourhoods") {
    CHECK(neighborhood(star_graph(3), {1, 2, 3}) == VertexSet{0});
    CHECK(neighborhood(cycle_graph(5), {}).empty());
    CHECK(neighborhood(cycle_graph(5), {0}) == VertexSet{1, 4});
    CHECK_THROWS_AS(neighborhood(cycle_graph(5), {7}), GraphError);

    std::mt19937 rng(3);
    Graph pet = petersen_graph();
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Vertex> ids;
      for (Vertex v = 0; v < 10; ++v)
        if (rng() % 2) ids.push_back(v);
      VertexSet x(ids);
      VertexSet gx = neighborhood(pet, x);
      CHECK(gx.intersected(x).empty());
      for (Vertex w : gx) {
        bool touches = false;
        for (Vertex u : pet.neighbors(w)) touches |= x.contains(u);
        CHECK(touches);
      }
    }
  }

  TEST_CASE("stable sets") {
    Graph c5 = cycle_graph(5);
    CHECK(is_stable(c5, {0, 2}));
    CHECK_FALSE(is_stable(c5, {0, 1}));
    CHECK(is_stable(c5, {}));
    CHECK(is_maximal_stable(c5, {0, 2}));
    CHECK_FALSE(is_maximal_stable(c5, {0}));
    CHECK(extend_to_maximal_stable(c5, {1}) == VertexSet{1, 3});
  }

  TEST_CASE("vertex deletion") {
    CHECK(delete_vertices(path_graph(3), {0, 1, 2}).graph.order() == 0);
    Subgraph same = delete_vertices(cycle_graph(5), {});
    CHECK(same.graph.edges() == cycle_graph(5).edges());
    CHECK(same.original == std::vector<Vertex>{0, 1, 2, 3, 4});

    // P3 ⊔ K3: deleting the path (leaves and centre) leaves a triangle on 3,4,5.
    Graph g = disjoint_union(path_graph(3), complete_graph(3));
    Subgraph k3 = delete_vertices(g, {0, 1, 2});
    CHECK(k3.graph.order() == 3);
    CHECK(k3.graph.size() == 3);
    CHECK(k3.original == std::vector<Vertex>{3, 4, 5});
    CHECK(components(k3.graph).size() == 1);
    CHECK(k3.original_edges() == std::vector<Edge>{Edge(3, 4), Edge(3, 5), Edge(4, 5)});
  }

  TEST_CASE("components") {
    CHECK(components(cycle_graph(5)).size() == 1);
    std::vector<Edge> one{Edge(0, 1)};
    auto parts = components(path_graph(3), std::span<const Edge>(one));
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == VertexSet{0, 1});
    CHECK(parts[1] == VertexSet{2});
    CHECK(components(disjoint_union(path_graph(3), complete_graph(3))).size() == 2);
    std::vector<Edge> bogus{Edge(0, 2)};
    CHECK_THROWS_AS(components(path_graph(3), std::span<const Edge>(bogus)), GraphError);
  }

  TEST_CASE("conjunctive powers") {
    CHECK(power(complete_graph(3), 1).size() == 0);
    CHECK(power(complete_graph(3), 1).order() == 3);
    Graph k2sq = power(complete_graph(2), 2);
    CHECK(k2sq.order() == 4);
    CHECK(k2sq.size() == 6);
    CHECK(power(complete_graph(2), 1).edges() == complete_graph(2).edges());
    CHECK_THROWS_AS(power(complete_graph(3), 0), PreconditionError);
    CHECK_THROWS_AS(power(cycle_graph(5), 9), GuardError);
    CHECK_THROWS_AS(power(cycle_graph(5), 3, 100), GuardError);

    // Pairwise brute force of the defining predicate, n^t <= 10^4.
    for (auto [g, t] : {std::pair{cycle_graph(5), 2u}, std::pair{path_graph(3), 3u}, std::pair{complete_graph(3), 3u},
                        std::pair{star_graph(3), 2u}}) {
      Graph pw = power(g, t);
      const std::size_t count = pw.order();
      for (std::size_t a = 0; a < count; ++a)
        for (std::size_t b = a + 1; b < count; ++b)
          CHECK(pw.adjacent(Vertex(a), Vertex(b)) ==
                realizes_every_edge(g, tuple_of(a, g.order(), t), tuple_of(b, g.order(), t)));
    }
  }

  TEST_CASE("edge list round trip") {
    Graph pet = petersen_graph();
    CHECK(parse_graph(to_edge_list(pet, "petersen")).edges() == pet.edges());
  }
}
