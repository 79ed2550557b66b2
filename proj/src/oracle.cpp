#include "graphcap/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "graphcap/distribution.hpp"
#include "graphcap/entropy.hpp"
#include "graphcap/errors.hpp"
#include "graphcap/io.hpp"

namespace graphcap {
namespace {

std::vector<std::uint32_t> neighbor_masks(const Graph& g) {
  std::vector<std::uint32_t> nb(g.order(), 0);
  for (const Edge& e : g.edges()) {
    nb[e.u] |= 1u << e.v;
    nb[e.v] |= 1u << e.u;
  }
  return nb;
}

void guard(const Graph& g, std::size_t limit, const char* what) {
  if (g.order() > limit)
    throw GuardError(std::string(what) + ": " + std::to_string(g.order()) + " vertices exceed the guard of " +
                     std::to_string(limit));
}

struct AlphaSearch {
  const std::vector<std::uint32_t>& nb;
  std::uint32_t best_set = 0;
  int best = 0;

  void run(std::uint32_t cand, std::uint32_t chosen, int size) {
    if (cand == 0) {
      if (size > best) {
        best = size;
        best_set = chosen;
      }
      return;
    }
    if (size + std::popcount(cand) <= best) return;
    // Branch on the candidate with most candidate neighbours; zero-degree ones are forced in.
    int pick = -1, pick_deg = -1;
    for (std::uint32_t rest = cand; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      int d = std::popcount(nb[v] & cand);
      if (d > pick_deg) {
        pick_deg = d;
        pick = v;
      }
    }
    if (pick_deg == 0) {
      run(0, chosen | cand, size + std::popcount(cand));
      return;
    }
    const std::uint32_t bit = 1u << pick;
    run(cand & ~bit & ~nb[pick], chosen | bit, size + 1);
    run(cand & ~bit, chosen, size);
  }
};

bool cover_within(const std::vector<Edge>& edges, std::vector<char>& in_cover, std::size_t budget) {
  auto it = std::find_if(edges.begin(), edges.end(), [&](const Edge& e) { return !in_cover[e.u] && !in_cover[e.v]; });
  if (it == edges.end()) return true;
  if (budget == 0) return false;
  for (Vertex v : {it->u, it->v}) {
    in_cover[v] = 1;
    bool ok = cover_within(edges, in_cover, budget - 1);
    in_cover[v] = 0;
    if (ok) return true;
  }
  return false;
}

class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, std::uint64_t budget) : n_(g.order()), words_((n_ + 63) / 64), budget_(budget) {
    adj_.assign(n_, std::vector<std::uint64_t>(words_, 0));
    for (const Edge& e : g.edges()) {
      adj_[e.u][e.v / 64] |= std::uint64_t{1} << (e.v % 64);
      adj_[e.v][e.u / 64] |= std::uint64_t{1} << (e.u % 64);
    }
  }

  std::size_t run() {
    if (n_ == 0) return 0;
    std::vector<std::uint64_t> p(words_, 0), x(words_, 0);
    for (std::size_t v = 0; v < n_; ++v) p[v / 64] |= std::uint64_t{1} << (v % 64);
    expand(p, x, 0);
    return best_;
  }

 private:
  static std::size_t count(const std::vector<std::uint64_t>& s) {
    std::size_t c = 0;
    for (auto w : s) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  void expand(std::vector<std::uint64_t> p, std::vector<std::uint64_t> x, std::size_t depth) {
    if (++nodes_ > budget_) throw GuardError("clique search exceeded its node budget");
    const std::size_t pc = count(p);
    if (pc == 0) {
      best_ = std::max(best_, depth);
      return;
    }
    if (depth + pc <= best_) return;
    // Pivot maximising |P ∩ N(u)| over u ∈ P ∪ X.
    std::size_t pivot = 0, pivot_hits = 0;
    bool have = false;
    for (std::size_t w = 0; w < words_; ++w) {
      for (std::uint64_t bits = p[w] | x[w]; bits; bits &= bits - 1) {
        std::size_t u = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        std::size_t hits = 0;
        for (std::size_t k = 0; k < words_; ++k) hits += static_cast<std::size_t>(std::popcount(p[k] & adj_[u][k]));
        if (!have || hits > pivot_hits) {
          pivot = u;
          pivot_hits = hits;
          have = true;
        }
      }
    }
    std::vector<std::uint64_t> cand(words_);
    for (std::size_t k = 0; k < words_; ++k) cand[k] = p[k] & ~adj_[pivot][k];
    for (std::size_t w = 0; w < words_; ++w) {
      for (std::uint64_t bits = cand[w]; bits; bits &= bits - 1) {
        std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        std::vector<std::uint64_t> np(words_), nx(words_);
        for (std::size_t k = 0; k < words_; ++k) {
          np[k] = p[k] & adj_[v][k];
          nx[k] = x[k] & adj_[v][k];
        }
        expand(std::move(np), std::move(nx), depth + 1);
        p[v / 64] &= ~(std::uint64_t{1} << (v % 64));
        x[v / 64] |= std::uint64_t{1} << (v % 64);
      }
    }
  }

  std::size_t n_, words_;
  std::uint64_t budget_, nodes_ = 0;
  std::size_t best_ = 0;
  std::vector<std::vector<std::uint64_t>> adj_;
};

std::vector<double> sorted_edge_values(const Graph& g, const std::vector<double>& p) {
  std::vector<double> vals;
  vals.reserve(g.size());
  for (const Edge& e : g.edges()) vals.push_back(hbar_positive(p[e.u], p[e.v]));
  std::sort(vals.begin(), vals.end());
  return vals;
}

// a strictly leximin-better than b, ignoring differences below 1e-15.
bool leximin_better(const std::vector<double>& a, const std::vector<double>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i] + 1e-15) return true;
    if (a[i] < b[i] - 1e-15) return false;
  }
  return false;
}

}  // namespace

StableSetResult alpha_bruteforce(const Graph& g, std::size_t limit) {
  guard(g, std::min<std::size_t>(limit, 31), "alpha_bruteforce");
  const auto nb = neighbor_masks(g);
  AlphaSearch s{nb};
  const std::uint32_t all = g.order() == 0 ? 0u : static_cast<std::uint32_t>((std::uint64_t{1} << g.order()) - 1);
  s.run(all, 0, 0);
  std::vector<Vertex> ids;
  for (std::size_t v = 0; v < g.order(); ++v)
    if (s.best_set >> v & 1u) ids.push_back(static_cast<Vertex>(v));
  return {static_cast<std::size_t>(s.best), VertexSet(std::move(ids))};
}

std::size_t tau_bruteforce(const Graph& g, std::size_t limit) {
  guard(g, limit, "tau_bruteforce");
  std::vector<char> in_cover(g.order(), 0);
  for (std::size_t k = 0;; ++k)
    if (cover_within(g.edges(), in_cover, k)) return k;
}

std::size_t omega_bruteforce(const Graph& g, std::size_t limit, std::uint64_t node_budget) {
  guard(g, limit, "omega_bruteforce");
  return CliqueSearch(g, node_budget).run();
}

double theta_search(const Graph& g, std::size_t samples, std::size_t refine_iters, std::uint64_t seed) {
  guard(g, kThetaSearchGuard, "theta_search");
  if (g.size() == 0) throw PreconditionError("theta_search needs at least one edge");
  const std::size_t n = g.order();
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);
  double best = 0.0;
  for (std::size_t s = 0; s < std::max<std::size_t>(samples, 1); ++s) {
    std::vector<double> p(n);
    double sum = 0.0;
    for (double& x : p) sum += (x = expo(rng) + 1e-9);
    for (double& x : p) x /= sum;
    auto current = sorted_edge_values(g, p);
    double step = 0.25 / static_cast<double>(n);
    for (std::size_t it = 0; it < refine_iters && step > 1e-13; ++it) {
      bool moved = false;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (i == j || p[j] <= step) continue;
          p[i] += step;
          p[j] -= step;
          auto trial = sorted_edge_values(g, p);
          if (leximin_better(trial, current)) {
            current = std::move(trial);
            moved = true;
          } else {
            p[i] -= step;
            p[j] += step;
          }
        }
      if (!moved) step *= 0.5;
    }
    best = std::max(best, current.front());
  }
  return best;
}

bool perfect_2matching_oracle(const Graph& g) {
  guard(g, kStableSetOracleGuard, "perfect_2matching_oracle");
  const auto nb = neighbor_masks(g);
  const std::size_t n = g.order();
  // Depth-first enumeration of stable sets in increasing vertex order.
  bool ok = true;
  auto walk = [&](auto&& self, std::size_t next, std::uint32_t chosen, std::uint32_t gamma) -> void {
    if (!ok) return;
    if (chosen && std::popcount(gamma) < std::popcount(chosen)) {
      ok = false;
      return;
    }
    for (std::size_t v = next; v < n && ok; ++v) {
      if ((chosen >> v & 1u) || (nb[v] & chosen)) continue;
      self(self, v + 1, chosen | (1u << v), gamma | nb[v]);
    }
  };
  walk(walk, 0, 0, 0);
  return ok;
}

std::vector<CorpusEntry> random_corpus(std::size_t count, std::size_t n_min, std::size_t n_max, std::uint64_t seed) {
  if (n_min < 2 || n_max < n_min) throw PreconditionError("corpus needs 2 <= n_min <= n_max");
  constexpr double kProbabilities[] = {0.2, 0.4, 0.6};
  std::vector<CorpusEntry> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    CorpusEntry entry;
    entry.index = i;
    entry.seed = seed * 1'000'003ULL + i;
    entry.edge_probability = kProbabilities[i % 3];
    std::mt19937_64 rng(entry.seed);
    std::uniform_int_distribution<std::size_t> pick_n(n_min, n_max);
    std::bernoulli_distribution coin(entry.edge_probability);
    while (true) {
      const std::size_t n = pick_n(rng);
      std::vector<Edge> edges;
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
          if (coin(rng)) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
      Graph g(n, std::move(edges));
      if (!g.first_isolated()) {
        entry.graph = std::move(g);
        break;
      }
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::string corpus_filename(const CorpusEntry& entry) {
  std::ostringstream name;
  name << 'g' << entry.index << "_seed" << entry.seed << "_n" << entry.graph.order() << "_p"
       << static_cast<int>(std::lround(entry.edge_probability * 10)) << ".txt";
  return name.str();
}

void write_corpus(const std::string& directory, const std::vector<CorpusEntry>& corpus) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(directory)) throw Error("corpus directory '" + directory + "' does not exist");
  for (const auto& entry : corpus) {
    std::ofstream out(fs::path(directory) / corpus_filename(entry));
    if (!out) throw Error("cannot write corpus file in '" + directory + "'");
    out << to_edge_list(entry.graph, "seed " + std::to_string(entry.seed) + " p " +
                                          std::to_string(entry.edge_probability));
  }
}

}  // namespace graphcap
