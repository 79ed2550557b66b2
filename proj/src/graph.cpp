#include "graphcap/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "graphcap/errors.hpp"

namespace graphcap {

VertexSet::VertexSet(std::initializer_list<Vertex> ids) : VertexSet(std::vector<Vertex>(ids)) {}

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

VertexSet VertexSet::united(const VertexSet& other) const {
  std::vector<Vertex> out;
  std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet VertexSet::minus(const VertexSet& other) const {
  std::vector<Vertex> out;
  std::set_difference(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet VertexSet::intersected(const VertexSet& other) const {
  std::vector<Vertex> out;
  std::set_intersection(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

Graph::Graph(std::size_t n, std::vector<Edge> edges) : edges_(std::move(edges)), adjacency_(n) {
  for (const Edge& e : edges_) {
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    if (e.v >= n)
      throw GraphError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       "} out of range for " + std::to_string(n) + " vertices");
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end())
    throw GraphError("duplicate edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  if (a >= order() || b >= order()) return false;
  const auto& nb = adjacency_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::optional<Vertex> Graph::first_isolated() const {
  for (Vertex v = 0; v < order(); ++v)
    if (adjacency_[v].empty()) return v;
  return std::nullopt;
}

void Graph::require_no_isolated() const {
  if (auto v = first_isolated()) throw IsolatedVertexError(*v);
}

void Graph::check_range(const VertexSet& s) const {
  if (!s.empty() && s.ids().back() >= order())
    throw GraphError("vertex " + std::to_string(s.ids().back()) + " out of range for " +
                     std::to_string(order()) + " vertices");
}

VertexSet Subgraph::to_original(const VertexSet& local) const {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(original.at(v));
  return VertexSet(std::move(out));
}

std::vector<Edge> Subgraph::original_edges() const {
  std::vector<Edge> out;
  out.reserve(graph.size());
  for (const Edge& e : graph.edges()) out.emplace_back(original[e.u], original[e.v]);
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet neighborhood(const Graph& g, const VertexSet& x) {
  g.check_range(x);
  std::vector<char> mark(g.order(), 0);
  for (Vertex v : x)
    for (Vertex w : g.neighbors(v)) mark[w] = 1;
  for (Vertex v : x) mark[v] = 0;
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (mark[v]) out.push_back(v);
  return VertexSet(std::move(out));
}

VertexSet complement(const Graph& g, const VertexSet& x) {
  g.check_range(x);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!x.contains(v)) out.push_back(v);
  return VertexSet(std::move(out));
}

bool is_stable(const Graph& g, const VertexSet& x) {
  g.check_range(x);
  for (Vertex v : x)
    for (Vertex w : g.neighbors(v))
      if (w > v && x.contains(w)) return false;
  return true;
}

bool is_maximal_stable(const Graph& g, const VertexSet& x) {
  if (!is_stable(g, x)) return false;
  const VertexSet gamma = neighborhood(g, x);
  return x.size() + gamma.size() == g.order();
}

VertexSet extend_to_maximal_stable(const Graph& g, const VertexSet& x) {
  if (!is_stable(g, x)) throw PreconditionError("cannot extend a non-stable set");
  std::vector<char> blocked(g.order(), 0);
  std::vector<Vertex> out(x.begin(), x.end());
  for (Vertex v : x) {
    blocked[v] = 1;
    for (Vertex w : g.neighbors(v)) blocked[w] = 1;
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (blocked[v]) continue;
    out.push_back(v);
    blocked[v] = 1;
    for (Vertex w : g.neighbors(v)) blocked[w] = 1;
  }
  return VertexSet(std::move(out));
}

Subgraph induced(const Graph& g, const VertexSet& keep) {
  g.check_range(keep);
  std::vector<Vertex> local(g.order(), static_cast<Vertex>(-1));
  Subgraph sub;
  sub.original.assign(keep.begin(), keep.end());
  for (std::size_t i = 0; i < sub.original.size(); ++i) local[sub.original[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (local[e.u] != static_cast<Vertex>(-1) && local[e.v] != static_cast<Vertex>(-1))
      edges.emplace_back(local[e.u], local[e.v]);
  sub.graph = Graph(sub.original.size(), std::move(edges));
  return sub;
}

Subgraph delete_vertices(const Graph& g, const VertexSet& s) { return induced(g, complement(g, s)); }

std::vector<VertexSet> components(const Graph& g, std::optional<std::span<const Edge>> edge_subset) {
  const std::size_t n = g.order();
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto join = [&](const Edge& e) {
    Vertex a = find(e.u), b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  if (edge_subset) {
    for (const Edge& e : *edge_subset) {
      if (!g.adjacent(e.u, e.v)) throw GraphError("edge subset contains a non-edge");
      join(e);
    }
  } else {
    for (const Edge& e : g.edges()) join(e);
  }
  std::vector<std::vector<Vertex>> groups(n);
  for (Vertex v = 0; v < n; ++v) groups[find(v)].push_back(v);
  std::vector<VertexSet> out;
  for (auto& grp : groups)
    if (!grp.empty()) out.emplace_back(std::move(grp));
  return out;
}

Graph power(const Graph& g, unsigned t, std::size_t cap) {
  if (t == 0) throw PreconditionError("power exponent must be positive");
  const std::size_t n = g.order();
  std::size_t count = 1;
  for (unsigned i = 0; i < t; ++i) {
    if (n != 0 && count > cap / n) throw GuardError("power graph exceeds the vertex cap");
    count *= n;
  }
  if (count > cap) throw GuardError("power graph exceeds the vertex cap");
  const std::size_t m = g.size();
  if (m == 0) {
    // Every pair satisfies the vacuous condition.
    if (count > 4096) throw GuardError("edgeless base graph: complete power exceeds 4096 vertices");
    std::vector<Edge> all;
    for (std::size_t a = 0; a < count; ++a)
      for (std::size_t b = a + 1; b < count; ++b) all.emplace_back(Vertex(a), Vertex(b));
    return Graph(count, std::move(all));
  }
  if (m > 64) throw GuardError("power graph supports at most 64 base edges");
  std::vector<int> edge_index(n * n, -1);
  for (std::size_t i = 0; i < m; ++i) {
    const Edge& e = g.edges()[i];
    edge_index[e.u * n + e.v] = edge_index[e.v * n + e.u] = static_cast<int>(i);
  }
  const std::uint64_t full = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  std::vector<std::vector<Vertex>> digits(count, std::vector<Vertex>(t));
  for (std::size_t x = 0; x < count; ++x) {
    std::size_t rest = x;
    for (unsigned i = t; i-- > 0;) {
      digits[x][i] = static_cast<Vertex>(rest % n);
      rest /= n;
    }
  }
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = a + 1; b < count; ++b) {
      std::uint64_t realized = 0;
      for (unsigned i = 0; i < t; ++i) {
        int k = edge_index[digits[a][i] * n + digits[b][i]];
        if (k >= 0) realized |= std::uint64_t{1} << k;
      }
      if (realized == full) edges.emplace_back(Vertex(a), Vertex(b));
    }
  }
  return Graph(count, std::move(edges));
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(Vertex(i), Vertex(i + 1));
  return Graph(n, std::move(e));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(Vertex(i), Vertex((i + 1) % n));
  return Graph(n, std::move(e));
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(Vertex(i), Vertex(j));
  return Graph(n, std::move(e));
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) e.emplace_back(Vertex(i), Vertex(a + j));
  return Graph(a + b, std::move(e));
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(Vertex(0), Vertex(i));
  return Graph(leaves + 1, std::move(e));
}

Graph petersen_graph() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph(10, std::move(e));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> e = a.edges();
  const auto shift = static_cast<Vertex>(a.order());
  for (const Edge& x : b.edges()) e.emplace_back(x.u + shift, x.v + shift);
  return Graph(a.order() + b.order(), std::move(e));
}

}  // namespace graphcap
