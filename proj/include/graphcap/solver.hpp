#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "graphcap/distribution.hpp"
#include "graphcap/graph.hpp"
#include "graphcap/matching.hpp"
#include "graphcap/structure.hpp"

namespace graphcap {

struct SolverOptions {
  double tol = 1e-7;
  std::uint64_t seed = 0;
  std::size_t max_iter = 50'000;  // per restart
  std::size_t restarts = 4;
  std::size_t check_every = 1'000;  // ascent iterations between polish attempts
};

enum class SolveMethod {
  PerfectTwoMatching,  // uniform distribution, Θ = 2/n
  AscentPolish,        // supergradient iterate snapped to its two-level structure
  LevelPeeling,        // structure from the deficiency levels of the double cover
  TwoValued,           // closed-form two-valued candidate on a maximal stable set
  AscentOnly           // no certified polish; best ascent iterate
};
std::string_view to_string(SolveMethod m);

struct BalancedSolution {
  Distribution dist;
  double theta = 0.0;
  std::vector<Edge> tight_edges;
  std::vector<ComponentLevel> component_levels;
  std::size_t iterations = 0;
  bool converged = false;
  SolveMethod method = SolveMethod::AscentOnly;
};

/// Θ(G) and a G-balanced distribution. Requires no isolated vertices and at
/// least one edge. Deterministic for fixed options. `converged` means the
/// returned distribution carries a stationarity certificate at 10·tol.
BalancedSolution solve_balanced(const Graph& g, const SolverOptions& options = {});

/// Exact levels for a deficiency peeling: level (A, N(A)) gets q, t·q with
/// t = t_star(|A|, |N(A)|) and ħ(t q, q) = 1; the remainder gets 1/2. Normalised.
Distribution distribution_from_levels(const Graph& g, const DeficiencyLevels& levels);

/// Candidate with q on S and t·q elsewhere, t = t_star(|S|, n - |S|). Returned
/// only if every structural certificate passes. S must be maximal stable.
std::optional<BalancedSolution> exact_two_valued(const Graph& g, const VertexSet& s, double tol = 1e-7);

/// Moves eps onto every vertex of T and takes eps·|T|/|Y| from every vertex of Y.
/// Total mass is unchanged; eps = 0 returns P. Throws DomainError if an entry
/// would become non-positive and PreconditionError if Y, T overlap or are empty.
Distribution improve_by_perturbation(const Graph& g, const Distribution& p, const VertexSet& y, const VertexSet& t,
                                     double eps);

}  // namespace graphcap
