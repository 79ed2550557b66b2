#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace graphcap {

using Vertex = std::uint32_t;

/// Unordered vertex pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids);
  explicit VertexSet(std::vector<Vertex> ids);

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  bool contains(Vertex v) const;
  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }
  Vertex operator[](std::size_t i) const { return ids_[i]; }
  const std::vector<Vertex>& ids() const noexcept { return ids_; }

  VertexSet united(const VertexSet& other) const;
  VertexSet minus(const VertexSet& other) const;
  VertexSet intersected(const VertexSet& other) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> ids_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  /// Throws GraphError on self-loops, duplicate edges or ids >= n.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool adjacent(Vertex a, Vertex b) const;

  std::optional<Vertex> first_isolated() const;
  /// Throws IsolatedVertexError naming the first isolated vertex.
  void require_no_isolated() const;

  /// Throws GraphError unless every id of `s` is a vertex.
  void check_range(const VertexSet& s) const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Induced subgraph with the new-to-original id map.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> original;  // original[new_id] = id in the host graph

  VertexSet to_original(const VertexSet& local) const;
  std::vector<Edge> original_edges() const;
};

/// Vertices outside `x` adjacent to some vertex of `x` (the open set ΓX).
VertexSet neighborhood(const Graph& g, const VertexSet& x);
VertexSet complement(const Graph& g, const VertexSet& x);
bool is_stable(const Graph& g, const VertexSet& x);
/// True when `x` is stable and no outside vertex can be added.
bool is_maximal_stable(const Graph& g, const VertexSet& x);
/// Greedy extension of a stable set to a maximal one, scanning ids in order.
VertexSet extend_to_maximal_stable(const Graph& g, const VertexSet& x);

Subgraph induced(const Graph& g, const VertexSet& keep);
/// G - S: the subgraph induced on V(G) \ S. May be empty or have isolated vertices.
Subgraph delete_vertices(const Graph& g, const VertexSet& s);

/// Connected components of (V(G), edges), ordered by their minimum vertex.
/// Without `edge_subset` the full edge set is used.
std::vector<VertexSet> components(const Graph& g,
                                  std::optional<std::span<const Edge>> edge_subset = std::nullopt);

inline constexpr std::size_t kDefaultPowerCap = 1'000'000;

/// Conjunctive power: tuples x, y are adjacent iff every edge of G is
/// realized as {x_i, y_i} in some coordinate i. Tuples are indexed in
/// base n, first coordinate most significant.
Graph power(const Graph& g, unsigned t, std::size_t cap = kDefaultPowerCap);

// Named families used by tests, examples and the CLI.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph star_graph(std::size_t leaves);
Graph petersen_graph();
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace graphcap
