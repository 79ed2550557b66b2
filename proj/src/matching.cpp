#include "graphcap/matching.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

#include "graphcap/errors.hpp"
#include "maxflow.hpp"

namespace graphcap {
namespace {

std::vector<std::vector<Vertex>> cover_adjacency(const Graph& g) {
  std::vector<std::vector<Vertex>> adj(g.order());
  for (Vertex v = 0; v < g.order(); ++v) adj[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
  return adj;
}

// Left copy v is matched to right copy mate[v].
std::vector<std::int64_t> double_cover_matching(const Graph& g) {
  return hopcroft_karp(g.order(), g.order(), cover_adjacency(g));
}

std::size_t matched_count(const std::vector<std::int64_t>& mate) {
  return static_cast<std::size_t>(std::count_if(mate.begin(), mate.end(), [](auto m) { return m >= 0; }));
}

HalfIntegralVector overlay_weights(const Graph& g, const std::vector<std::int64_t>& mate) {
  HalfIntegralVector w;
  w.carrier = HalfIntegralVector::Carrier::Edges;
  w.halves.resize(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Edge& e = g.edges()[i];
    w.halves[i] = static_cast<std::uint8_t>((mate[e.u] == e.v) + (mate[e.v] == e.u));
  }
  return w;
}

// With a perfect double-cover matching, `mate` is a fixed-point-free permutation.
// Its 2-cycles are weight-1 edges, odd cycles stay, even cycles split into edges.
TwoMatchingCertificate certificate_from_permutation(const Graph& g, const std::vector<std::int64_t>& mate) {
  TwoMatchingCertificate cert;
  std::vector<char> seen(g.order(), 0);
  for (Vertex start = 0; start < g.order(); ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> cyc;
    for (Vertex v = start; !seen[v]; v = static_cast<Vertex>(mate[v])) {
      seen[v] = 1;
      cyc.push_back(v);
    }
    if (cyc.size() % 2 == 1) {
      cert.cycles.push_back(std::move(cyc));
    } else {
      for (std::size_t i = 0; i < cyc.size(); i += 2) cert.matched_edges.emplace_back(cyc[i], cyc[i + 1]);
    }
  }
  std::sort(cert.matched_edges.begin(), cert.matched_edges.end());
  cert.covered = true;
  return cert;
}

std::optional<VertexSet> exhaustive_violator(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> nb(n, 0);
  for (const Edge& e : g.edges()) {
    nb[e.u] |= 1u << e.v;
    nb[e.v] |= 1u << e.u;
  }
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::uint32_t gamma = 0;
    bool stable = true;
    for (std::size_t v = 0; v < n && stable; ++v)
      if (mask >> v & 1u) {
        if (nb[v] & mask) stable = false;
        gamma |= nb[v];
      }
    if (stable && std::popcount(gamma) < std::popcount(mask)) {
      std::vector<Vertex> ids;
      for (std::size_t v = 0; v < n; ++v)
        if (mask >> v & 1u) ids.push_back(static_cast<Vertex>(v));
      return VertexSet(std::move(ids));
    }
  }
  return std::nullopt;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex w : g.neighbors(v)) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          q.push(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

std::int64_t HalfIntegralVector::twice_total() const {
  return std::accumulate(halves.begin(), halves.end(), std::int64_t{0});
}

bool TwoMatchingCertificate::validate(const Graph& g) const {
  std::vector<char> used(g.order(), 0);
  auto take = [&](Vertex v) {
    if (v >= g.order() || used[v]) return false;
    used[v] = 1;
    return true;
  };
  for (const auto& cyc : cycles) {
    if (cyc.size() < 3 || cyc.size() % 2 == 0) return false;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (!take(cyc[i])) return false;
      if (!g.adjacent(cyc[i], cyc[(i + 1) % cyc.size()])) return false;
    }
  }
  for (const Edge& e : matched_edges) {
    if (!g.adjacent(e.u, e.v) || !take(e.u) || !take(e.v)) return false;
  }
  const bool all = std::all_of(used.begin(), used.end(), [](char c) { return c != 0; });
  return all == covered;
}

HalfIntegralVector TwoMatchingCertificate::as_edge_weights(const Graph& g) const {
  HalfIntegralVector w;
  w.carrier = HalfIntegralVector::Carrier::Edges;
  w.halves.assign(g.size(), 0);
  auto index = [&](Vertex a, Vertex b) {
    auto it = std::lower_bound(g.edges().begin(), g.edges().end(), Edge(a, b));
    return static_cast<std::size_t>(it - g.edges().begin());
  };
  for (const auto& cyc : cycles)
    for (std::size_t i = 0; i < cyc.size(); ++i) w.halves[index(cyc[i], cyc[(i + 1) % cyc.size()])] = 1;
  for (const Edge& e : matched_edges) w.halves[index(e.u, e.v)] = 2;
  return w;
}

std::vector<std::int64_t> hopcroft_karp(std::size_t n_left, std::size_t n_right,
                                        const std::vector<std::vector<Vertex>>& adjacency) {
  constexpr std::int64_t kFree = -1;
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<std::int64_t> mate_l(n_left, kFree), mate_r(n_right, kFree);
  std::vector<int> dist(n_left);

  auto bfs = [&] {
    std::queue<std::size_t> q;
    bool found = false;
    for (std::size_t u = 0; u < n_left; ++u) {
      if (mate_l[u] == kFree) {
        dist[u] = 0;
        q.push(u);
      } else {
        dist[u] = kInf;
      }
    }
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop();
      for (Vertex v : adjacency[u]) {
        std::int64_t w = mate_r[v];
        if (w == kFree) {
          found = true;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          q.push(static_cast<std::size_t>(w));
        }
      }
    }
    return found;
  };

  auto dfs = [&](auto&& self, std::size_t u) -> bool {
    for (Vertex v : adjacency[u]) {
      std::int64_t w = mate_r[v];
      if (w == kFree || (dist[w] == dist[u] + 1 && self(self, static_cast<std::size_t>(w)))) {
        mate_l[u] = v;
        mate_r[v] = static_cast<std::int64_t>(u);
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  };

  while (bfs())
    for (std::size_t u = 0; u < n_left; ++u)
      if (mate_l[u] == kFree) dfs(dfs, u);
  return mate_l;
}

Graph bipartite_double_cover(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  std::vector<Edge> edges;
  edges.reserve(2 * g.size());
  for (const Edge& e : g.edges()) {
    edges.emplace_back(e.u, n + e.v);
    edges.emplace_back(e.v, n + e.u);
  }
  return Graph(2 * g.order(), std::move(edges));
}

Matching max_matching(const Graph& g) {
  const std::size_t n = g.order();
  constexpr std::int64_t kNone = -1;
  std::vector<std::int64_t> match(n, kNone), parent(n), base(n);
  std::vector<char> used(n), in_blossom(n);

  auto lca = [&](std::int64_t a, std::int64_t b) {
    std::vector<char> on_path(n, 0);
    while (true) {
      a = base[a];
      on_path[a] = 1;
      if (match[a] == kNone) break;
      a = parent[match[a]];
    }
    while (true) {
      b = base[b];
      if (on_path[b]) return b;
      b = parent[match[b]];
    }
  };
  auto mark_path = [&](std::int64_t v, std::int64_t b, std::int64_t child) {
    while (base[v] != b) {
      in_blossom[base[v]] = in_blossom[base[match[v]]] = 1;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  };
  auto find_path = [&](std::int64_t root) -> std::int64_t {
    std::fill(used.begin(), used.end(), 0);
    std::fill(parent.begin(), parent.end(), kNone);
    std::iota(base.begin(), base.end(), std::int64_t{0});
    used[root] = 1;
    std::queue<std::int64_t> q;
    q.push(root);
    while (!q.empty()) {
      std::int64_t v = q.front();
      q.pop();
      for (Vertex to_u : g.neighbors(static_cast<Vertex>(v))) {
        const auto to = static_cast<std::int64_t>(to_u);
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] != kNone && parent[match[to]] != kNone)) {
          std::int64_t cur = lca(v, to);
          std::fill(in_blossom.begin(), in_blossom.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (std::size_t i = 0; i < n; ++i) {
            if (in_blossom[base[i]]) {
              base[i] = cur;
              if (!used[i]) {
                used[i] = 1;
                q.push(static_cast<std::int64_t>(i));
              }
            }
          }
        } else if (parent[to] == kNone) {
          parent[to] = v;
          if (match[to] == kNone) return to;
          used[match[to]] = 1;
          q.push(match[to]);
        }
      }
    }
    return kNone;
  };

  for (const Edge& e : g.edges())
    if (match[e.u] == kNone && match[e.v] == kNone) {
      match[e.u] = e.v;
      match[e.v] = e.u;
    }
  for (std::size_t v = 0; v < n; ++v) {
    if (match[v] != kNone) continue;
    std::int64_t u = find_path(static_cast<std::int64_t>(v));
    while (u != kNone) {
      std::int64_t pv = parent[u], ppv = match[pv];
      match[u] = pv;
      match[pv] = u;
      u = ppv;
    }
  }

  Matching m;
  for (std::size_t v = 0; v < n; ++v)
    if (match[v] > static_cast<std::int64_t>(v)) m.edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(match[v]));
  m.size = m.edges.size();
  return m;
}

TwoMatching max_2matching(const Graph& g) {
  auto mate = double_cover_matching(g);
  TwoMatching out;
  out.twice_value = static_cast<std::int64_t>(matched_count(mate));
  out.value = 0.5 * static_cast<double>(out.twice_value);
  out.weights = overlay_weights(g, mate);
  return out;
}

Perfect2MatchingResult has_perfect_2matching(const Graph& g) {
  g.require_no_isolated();
  Perfect2MatchingResult out;
  auto mate = double_cover_matching(g);
  if (matched_count(mate) == g.order()) {
    out.exists = true;
    out.certificate = certificate_from_permutation(g, mate);
    return out;
  }
  DeficientSet d = max_ratio_set(g);
  if (d.low.size() > d.high.size() && is_stable(g, d.low) && neighborhood(g, d.low) == d.high) {
    out.violator = d.low;
  } else if (g.order() <= 20) {
    out.violator = exhaustive_violator(g);
  }
  if (!out.violator) throw std::logic_error("no Hall violator found for a deficient double cover");
  return out;
}

bool admits_perfect_2matching(const Graph& g) {
  if (g.first_isolated()) return false;
  return matched_count(double_cover_matching(g)) == g.order();
}

FractionalCover min_fractional_cover(const Graph& g) {
  const std::size_t n = g.order();
  auto adj = cover_adjacency(g);
  auto mate_l = hopcroft_karp(n, n, adj);
  std::vector<std::int64_t> mate_r(n, -1);
  for (std::size_t u = 0; u < n; ++u)
    if (mate_l[u] >= 0) mate_r[mate_l[u]] = static_cast<std::int64_t>(u);
  // König: Z = vertices reachable from free left vertices by alternating paths.
  std::vector<char> zl(n, 0), zr(n, 0);
  std::queue<std::size_t> q;
  for (std::size_t u = 0; u < n; ++u)
    if (mate_l[u] < 0) {
      zl[u] = 1;
      q.push(u);
    }
  while (!q.empty()) {
    std::size_t u = q.front();
    q.pop();
    for (Vertex v : adj[u]) {
      if (zr[v]) continue;
      zr[v] = 1;
      std::int64_t w = mate_r[v];
      if (w >= 0 && !zl[w]) {
        zl[w] = 1;
        q.push(static_cast<std::size_t>(w));
      }
    }
  }
  FractionalCover out;
  out.weights.carrier = HalfIntegralVector::Carrier::Vertices;
  out.weights.halves.resize(n);
  for (std::size_t v = 0; v < n; ++v) out.weights.halves[v] = static_cast<std::uint8_t>((!zl[v]) + zr[v]);
  out.twice_value = out.weights.twice_total();
  out.value = 0.5 * static_cast<double>(out.twice_value);
  return out;
}

BasicConvention parse_convention(std::string_view name) {
  if (name == "paper-literal") return BasicConvention::PaperLiteral;
  if (name == "half-set") return BasicConvention::HalfSet;
  throw PreconditionError("unknown basicness convention '" + std::string(name) + "'");
}

std::string_view to_string(BasicConvention c) {
  return c == BasicConvention::PaperLiteral ? "paper-literal" : "half-set";
}

bool is_basic_2cover(const Graph& g, const HalfIntegralVector& y, BasicConvention convention) {
  if (y.carrier != HalfIntegralVector::Carrier::Vertices || y.halves.size() != g.order())
    throw PreconditionError("2-cover must carry one weight per vertex");
  for (auto h : y.halves)
    if (h > 2) throw PreconditionError("2-cover weights must lie in {0, 1/2, 1}");
  for (const Edge& e : g.edges())
    if (y.halves[e.u] + y.halves[e.v] < 2) throw PreconditionError("vector does not cover every edge");

  const std::uint8_t target = convention == BasicConvention::PaperLiteral ? 2 : 1;
  std::vector<Vertex> ids;
  for (Vertex v = 0; v < g.order(); ++v)
    if (y.halves[v] == target) ids.push_back(v);
  Subgraph sub = induced(g, VertexSet(std::move(ids)));
  if (convention == BasicConvention::PaperLiteral) return !is_bipartite(sub.graph);
  for (const VertexSet& comp : components(sub.graph))
    if (is_bipartite(induced(sub.graph, comp).graph)) return false;
  return true;
}

UniformCoverStatus uniform_cover_status(const Graph& g) {
  g.require_no_isolated();
  UniformCoverStatus s;
  s.optimal = admits_perfect_2matching(g);
  if (!s.optimal) return s;
  s.unique = true;
  for (Vertex v = 0; v < g.order() && s.unique; ++v)
    s.unique = admits_perfect_2matching(delete_vertices(g, VertexSet{v}).graph);
  return s;
}

DeficientSet max_ratio_set(const Graph& g) {
  g.require_no_isolated();
  const std::size_t n = g.order();
  if (n == 0) return {};
  // Dinkelbach on r = a/b: maximise b|A| - a|N(A)| by a closure cut
  // on the double cover, keeping the maximal optimal closure.
  std::int64_t a = 1, b = 1;
  std::vector<char> chosen;
  while (true) {
    const std::size_t s = 2 * n, t = 2 * n + 1;
    detail::MaxFlow flow(2 * n + 2);
    for (std::size_t v = 0; v < n; ++v) {
      flow.add_arc(s, v, b);
      flow.add_arc(n + v, t, a);
      for (Vertex w : g.neighbors(static_cast<Vertex>(v))) flow.add_arc(v, n + w, detail::MaxFlow::kInfinite);
    }
    const std::int64_t cut = flow.run(s, t);
    const std::int64_t gain = b * static_cast<std::int64_t>(n) - cut;
    auto to_sink = flow.reaches_sink(t);
    chosen.assign(n, 0);
    for (std::size_t v = 0; v < n; ++v) chosen[v] = !to_sink[v];
    if (gain == 0) break;
    std::vector<char> in_n(n, 0);
    std::int64_t size_a = 0, size_n = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (chosen[v]) {
        ++size_a;
        for (Vertex w : g.neighbors(static_cast<Vertex>(v))) in_n[w] = 1;
      }
    size_n = std::count(in_n.begin(), in_n.end(), 1);
    std::int64_t d = std::gcd(size_a, size_n);
    a = size_a / d;
    b = size_n / d;
  }
  std::vector<Vertex> low;
  for (std::size_t v = 0; v < n; ++v)
    if (chosen[v]) low.push_back(static_cast<Vertex>(v));
  DeficientSet out;
  out.low = VertexSet(std::move(low));
  std::vector<char> in_n(n, 0);
  for (Vertex v : out.low)
    for (Vertex w : g.neighbors(v)) in_n[w] = 1;
  std::vector<Vertex> high;
  for (std::size_t v = 0; v < n; ++v)
    if (in_n[v]) high.push_back(static_cast<Vertex>(v));
  out.high = VertexSet(std::move(high));
  return out;
}

DeficiencyLevels deficiency_levels(const Graph& g) {
  g.require_no_isolated();
  DeficiencyLevels out;
  VertexSet remaining = complement(g, VertexSet{});
  while (!remaining.empty()) {
    Subgraph sub = induced(g, remaining);
    if (sub.graph.first_isolated()) throw std::logic_error("deficiency peeling left an isolated vertex");
    DeficientSet d = max_ratio_set(sub.graph);
    if (d.low.size() <= d.high.size()) break;
    if (!d.low.intersected(d.high).empty() || !is_stable(sub.graph, d.low))
      throw std::logic_error("maximal max-ratio set is not stable");
    DeficientSet level{sub.to_original(d.low), sub.to_original(d.high)};
    remaining = remaining.minus(level.low).minus(level.high);
    out.levels.push_back(std::move(level));
  }
  out.remainder = remaining;
  return out;
}

bool bipartite_transport_feasible(const VertexSet& low, const VertexSet& high, const std::vector<Edge>& edges,
                                  std::int64_t low_supply, std::int64_t high_demand) {
  const std::size_t nl = low.size(), nh = high.size();
  if (static_cast<std::int64_t>(nl) * low_supply != static_cast<std::int64_t>(nh) * high_demand) return false;
  auto index_of = [](const VertexSet& s, Vertex v) -> std::int64_t {
    auto it = std::lower_bound(s.begin(), s.end(), v);
    return it != s.end() && *it == v ? it - s.begin() : -1;
  };
  const std::size_t src = nl + nh, snk = src + 1;
  detail::MaxFlow flow(nl + nh + 2);
  for (std::size_t i = 0; i < nl; ++i) flow.add_arc(src, i, low_supply);
  for (std::size_t j = 0; j < nh; ++j) flow.add_arc(nl + j, snk, high_demand);
  for (const Edge& e : edges) {
    std::int64_t lu = index_of(low, e.u), hv = index_of(high, e.v);
    if (lu < 0 || hv < 0) {
      lu = index_of(low, e.v);
      hv = index_of(high, e.u);
    }
    if (lu < 0 || hv < 0) return false;
    flow.add_arc(static_cast<std::size_t>(lu), nl + static_cast<std::size_t>(hv), detail::MaxFlow::kInfinite);
  }
  return flow.run(src, snk) == static_cast<std::int64_t>(nl) * low_supply;
}

}  // namespace graphcap
