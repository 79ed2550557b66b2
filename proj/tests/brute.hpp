#pragma once
// Exhaustive reference computations used only by the tests. Deliberately
// naive: each one enumerates the definition directly.
#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "graphcap/graph.hpp"

namespace brute {

using graphcap::Graph;
using graphcap::Vertex;

// ν(G): every vertex is either left unmatched or matched to a later neighbour.
inline std::size_t matching_number(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<char> used(n, 0);
  std::function<std::size_t(Vertex)> rec = [&](Vertex v) -> std::size_t {
    while (v < n && used[v]) ++v;
    if (v >= n) return 0;
    used[v] = 1;
    std::size_t best = rec(v + 1);
    for (Vertex w : g.neighbors(v))
      if (!used[w]) {
        used[w] = 1;
        best = std::max(best, 1 + rec(v + 1));
        used[w] = 0;
      }
    used[v] = 0;
    return best;
  };
  return rec(0);
}

// Twice the minimum of Σy over y ∈ {0,1/2,1}^V covering every edge.
inline std::int64_t twice_fractional_cover(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> y(n, 0);
  std::int64_t best = static_cast<std::int64_t>(2 * n);
  std::function<void(Vertex, std::int64_t)> rec = [&](Vertex v, std::int64_t sum) {
    if (sum >= best) return;
    if (v == n) {
      best = sum;
      return;
    }
    for (int h = 0; h <= 2; ++h) {
      bool ok = true;
      for (Vertex w : g.neighbors(v))
        if (w < v && y[w] + h < 2) {
          ok = false;
          break;
        }
      if (!ok) continue;
      y[v] = h;
      rec(v + 1, sum + h);
    }
    y[v] = 0;
  };
  rec(0, 0);
  return best;
}

// Twice the maximum of Σx over x ∈ {0,1/2,1}^E with vertex loads at most 1.
inline std::int64_t twice_fractional_matching(const Graph& g) {
  const auto& edges = g.edges();
  std::vector<int> load(g.order(), 0);
  std::int64_t best = 0;
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t sum) {
    if (i == edges.size()) {
      best = std::max(best, sum);
      return;
    }
    for (int h = 0; h <= 2; ++h) {
      const auto& e = edges[i];
      if (load[e.u] + h > 2 || load[e.v] + h > 2) break;
      load[e.u] += h;
      load[e.v] += h;
      rec(i + 1, sum + h);
      load[e.u] -= h;
      load[e.v] -= h;
    }
  };
  rec(0, 0);
  return best;
}

// α by subset enumeration (n ≤ 20).
inline std::size_t stability_number(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool stable = true;
    for (const auto& e : g.edges())
      if ((mask >> e.u & 1u) && (mask >> e.v & 1u)) {
        stable = false;
        break;
      }
    if (stable) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
  }
  return best;
}

}  // namespace brute
