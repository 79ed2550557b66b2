#pragma once

// Brute-force ground truth for desk-scale instances. Every routine refuses
// (GuardError) rather than truncating when its size guard is exceeded.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "graphcap/graph.hpp"

namespace graphcap {

inline constexpr std::size_t kAlphaGuard = 24;
inline constexpr std::size_t kOmegaGuard = 1024;
inline constexpr std::size_t kThetaSearchGuard = 8;
inline constexpr std::size_t kStableSetOracleGuard = 20;
inline constexpr std::uint64_t kOmegaNodeBudget = 50'000'000;

struct StableSetResult {
  std::size_t alpha = 0;
  VertexSet witness;
};

/// Exact stability number with a maximum stable set (branch and bound).
StableSetResult alpha_bruteforce(const Graph& g, std::size_t guard = kAlphaGuard);

/// Minimum vertex cover size by bounded search over uncovered edges.
std::size_t tau_bruteforce(const Graph& g, std::size_t guard = kAlphaGuard);

/// Clique number (Bron–Kerbosch with pivoting). The node budget bounds the search.
std::size_t omega_bruteforce(const Graph& g, std::size_t guard = kOmegaGuard,
                             std::uint64_t node_budget = kOmegaNodeBudget);

/// Lower bound on Θ(G): best of `samples` random simplex points, each refined
/// by pairwise mass moves accepted under leximin order of the edge values.
double theta_search(const Graph& g, std::size_t samples, std::size_t refine_iters, std::uint64_t seed);

/// Exhaustive check that |ΓX| >= |X| for every nonempty stable X.
bool perfect_2matching_oracle(const Graph& g);

struct CorpusEntry {
  Graph graph;
  std::uint64_t seed = 0;
  double edge_probability = 0.0;
  std::size_t index = 0;
};

/// Erdős–Rényi G(n, p) graphs with p cycling through {0.2, 0.4, 0.6} and n
/// uniform in [n_min, n_max]; draws with isolated vertices are discarded.
std::vector<CorpusEntry> random_corpus(std::size_t count, std::size_t n_min, std::size_t n_max, std::uint64_t seed);

/// "g<index>_seed<seed>_n<n>_p<p>.txt"
std::string corpus_filename(const CorpusEntry& entry);

/// Writes one edge-list file per entry into an existing directory.
void write_corpus(const std::string& directory, const std::vector<CorpusEntry>& corpus);

}  // namespace graphcap
