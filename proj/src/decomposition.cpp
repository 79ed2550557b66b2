#include "graphcap/decomposition.hpp"

#include "graphcap/oracle.hpp"
#include "graphcap/structure.hpp"

namespace graphcap {

SplitDecomposition split(const Graph& g, const SplitOptions& options) {
  g.require_no_isolated();
  SplitDecomposition d;
  d.solution = solve_balanced(g, options.solver);
  // Classification is kept coarser than the optimisation residual.
  d.critical_tol = 10.0 * options.solver.tol;
  d.x = critical_set(g, d.solution.dist, d.critical_tol, options.critical_rule);
  d.gamma_x = neighborhood(g, d.x);
  d.f = delete_vertices(g, d.x.united(d.gamma_x));

  if (!d.solution.converged) d.anomalies.push_back("solver did not converge; decomposition is unreliable");
  if (!is_stable(g, d.x)) d.anomalies.push_back("critical set is not stable");

  const Graph& f = d.f.graph;
  std::vector<Vertex> isolated;
  for (Vertex v = 0; v < f.order(); ++v)
    if (f.degree(v) == 0) isolated.push_back(d.f.original[v]);
  d.f_isolated = VertexSet(std::move(isolated));
  if (f.order() == 0) {
    d.f_has_p2m = true;
  } else if (!d.f_isolated.empty()) {
    d.f_has_p2m = false;
    d.anomalies.push_back("core subgraph has isolated vertices");
  } else {
    auto res = has_perfect_2matching(f);
    d.f_has_p2m = res.exists;
    d.f_certificate = std::move(res.certificate);
    if (!res.exists) d.anomalies.push_back("core subgraph has no perfect 2-matching");
  }

  d.nu_f = max_matching(f).size;
  const auto xs = static_cast<std::int64_t>(d.x.size());
  const auto vf = static_cast<std::int64_t>(f.order());
  const auto nu = static_cast<std::int64_t>(d.nu_f);
  d.lower = xs + vf - 2 * nu;
  d.upper = xs + nu;
  d.exact_by_nu = 3 * nu == vf;
  if (d.lower > d.upper) d.anomalies.push_back("stability bounds are inverted");

  if (options.exact_alpha && g.order() <= kAlphaGuard) d.alpha_exact = alpha_bruteforce(g).alpha;
  d.reliable = d.anomalies.empty();
  return d;
}

StabilityBounds stability_bounds(const Graph& g, const SolverOptions& options, CriticalRule rule) {
  SplitOptions opts;
  opts.solver = options;
  opts.critical_rule = rule;
  const SplitDecomposition d = split(g, opts);
  return {d.lower, d.upper};
}

}  // namespace graphcap
