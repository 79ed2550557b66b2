#pragma once

// Dinic max-flow with integral capacities. Internal helper.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace graphcap::detail {

class MaxFlow {
 public:
  static constexpr std::int64_t kInfinite = std::numeric_limits<std::int64_t>::max() / 4;

  explicit MaxFlow(std::size_t nodes) : head_(nodes, -1), level_(nodes), cursor_(nodes) {}

  void add_arc(std::size_t from, std::size_t to, std::int64_t cap) {
    arcs_.push_back({to, cap, head_[from]});
    head_[from] = static_cast<int>(arcs_.size() - 1);
    arcs_.push_back({from, 0, head_[to]});
    head_[to] = static_cast<int>(arcs_.size() - 1);
  }

  std::int64_t run(std::size_t s, std::size_t t) {
    std::int64_t total = 0;
    while (bfs(s, t)) {
      for (std::size_t v = 0; v < head_.size(); ++v) cursor_[v] = head_[v];
      while (std::int64_t pushed = dfs(s, t, kInfinite)) total += pushed;
    }
    return total;
  }

  /// Nodes from which t is reachable in the residual graph.
  std::vector<char> reaches_sink(std::size_t t) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<std::size_t> stack{t};
    seen[t] = 1;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      // Arc u->v has residual capacity iff arc (v->u)'s partner carries it.
      for (int a = head_[v]; a != -1; a = arcs_[a].next) {
        const Arc& back = arcs_[a ^ 1];
        std::size_t u = arcs_[a].to;
        if (!seen[u] && back.cap > 0) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    std::size_t to;
    std::int64_t cap;
    int next;
  };

  bool bfs(std::size_t s, std::size_t t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      std::size_t v = q.front();
      q.pop();
      for (int a = head_[v]; a != -1; a = arcs_[a].next)
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[v] + 1;
          q.push(arcs_[a].to);
        }
    }
    return level_[t] >= 0;
  }

  std::int64_t dfs(std::size_t v, std::size_t t, std::int64_t limit) {
    if (v == t) return limit;
    for (int& a = cursor_[v]; a != -1; a = arcs_[a].next) {
      Arc& arc = arcs_[a];
      if (arc.cap <= 0 || level_[arc.to] != level_[v] + 1) continue;
      if (std::int64_t got = dfs(arc.to, t, std::min(limit, arc.cap))) {
        arc.cap -= got;
        arcs_[a ^ 1].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<int> head_;
  std::vector<int> level_;
  std::vector<int> cursor_;
};

}  // namespace graphcap::detail
