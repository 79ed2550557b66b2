#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphcap/graph.hpp"
#include "graphcap/matching.hpp"
#include "graphcap/solver.hpp"
#include "graphcap/structure.hpp"

namespace graphcap {

struct SplitOptions {
  SolverOptions solver;
  /// Run the brute-force stability oracle when n is within its guard.
  bool exact_alpha = false;
  CriticalRule critical_rule = CriticalRule::Tight;
};

/// α(G) = |X| + α(F) with X the P-critical set of a balanced P and
/// F = G − (X ∪ ΓX). All vertex sets use the host graph's ids.
struct SplitDecomposition {
  BalancedSolution solution;
  double critical_tol = 0.0;
  VertexSet x;
  VertexSet gamma_x;
  Subgraph f;
  bool f_has_p2m = false;
  std::optional<TwoMatchingCertificate> f_certificate;  // local ids of f
  VertexSet f_isolated;
  std::size_t nu_f = 0;
  std::int64_t lower = 0;  // |X| + |V(F)| − 2ν(F)
  std::int64_t upper = 0;  // |X| + ν(F)
  bool exact_by_nu = false;  // 3ν(F) = |V(F)|
  std::optional<std::size_t> alpha_exact;
  bool reliable = false;
  std::vector<std::string> anomalies;
};

/// Requires no isolated vertices. Non-convergence and structural surprises are
/// reported through `reliable` and `anomalies`, not thrown.
SplitDecomposition split(const Graph& g, const SplitOptions& options = {});

struct StabilityBounds {
  std::int64_t lower = 0;
  std::int64_t upper = 0;
};
StabilityBounds stability_bounds(const Graph& g, const SolverOptions& options = {},
                                 CriticalRule rule = CriticalRule::Tight);

}  // namespace graphcap
