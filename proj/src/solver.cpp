#include "graphcap/solver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>

#include "graphcap/entropy.hpp"
#include "graphcap/errors.hpp"

namespace graphcap {
namespace {

constexpr double kFloor = 1e-12;
// Coarse tight-edge thresholds (relative to l) tried when snapping an ascent iterate.
constexpr double kSnapLadder[] = {1e-2, 3e-3, 1e-3, 3e-4, 1e-4, 3e-5, 1e-5};

void project_to_simplex(std::vector<double>& y) {
  std::vector<double> u = y;
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumsum = 0.0, shift = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    cumsum += u[j];
    const double candidate = (cumsum - 1.0) / static_cast<double>(j + 1);
    if (u[j] - candidate > 0.0) shift = candidate;
  }
  double total = 0.0;
  for (double& x : y) {
    x = std::max(x - shift, kFloor);
    total += x;
  }
  for (double& x : y) x /= total;
}

double min_edge_value(const Graph& g, const std::vector<double>& p) {
  double best = std::numeric_limits<double>::infinity();
  for (const Edge& e : g.edges()) best = std::min(best, hbar_positive(p[e.u], p[e.v]));
  return best;
}

// Unnormalised level pair with ħ(p, q) = 1 for a low:high block of sizes a:b.
std::pair<double, double> unit_levels(std::int64_t a, std::int64_t b) {
  const double t = t_star(a, b);
  const double q = 1.0 / hbar_positive(t, 1.0);
  return {q, t * q};
}

bool certified(const Graph& g, const Distribution& p, double tol) {
  return stationarity_certificate(g, p, 10.0 * tol).holds;
}

// Reads the two-level structure off an approximate optimum and rebuilds it exactly.
std::optional<Distribution> snap(const Graph& g, const std::vector<double>& approx, double tol) {
  const double theta = min_edge_value(g, approx);
  for (double rel : kSnapLadder) {
    std::vector<Edge> tight;
    for (const Edge& e : g.edges())
      if (hbar_positive(approx[e.u], approx[e.v]) <= theta * (1.0 + rel)) tight.push_back(e);
    std::vector<double> exact(g.order(), 0.0);
    bool ok = true;
    for (const VertexSet& comp : components(g, std::span<const Edge>(tight))) {
      if (comp.size() < 2) {
        ok = false;
        break;
      }
      std::vector<std::pair<double, Vertex>> vals;
      for (Vertex v : comp) vals.emplace_back(approx[v], v);
      std::sort(vals.begin(), vals.end());
      if (vals.back().first - vals.front().first <= rel * vals.back().first) {
        for (Vertex v : comp) exact[v] = 0.5;
        continue;
      }
      std::size_t cut = 1;
      double gap = 0.0;
      for (std::size_t i = 1; i < vals.size(); ++i)
        if (vals[i].first - vals[i - 1].first > gap) {
          gap = vals[i].first - vals[i - 1].first;
          cut = i;
        }
      std::vector<char> is_low(g.order(), 0);
      for (std::size_t i = 0; i < cut; ++i) is_low[vals[i].second] = 1;
      for (const Edge& e : tight)
        if (comp.contains(e.u) && is_low[e.u] == is_low[e.v]) ok = false;
      const auto a = static_cast<std::int64_t>(cut), b = static_cast<std::int64_t>(vals.size() - cut);
      if (!ok || a <= b) {
        ok = false;
        break;
      }
      auto [q, p] = unit_levels(a, b);
      for (auto [val, v] : vals) exact[v] = is_low[v] ? q : p;
    }
    if (!ok) continue;
    Distribution cand = Distribution::normalized(exact);
    if (certified(g, cand, tol)) return cand;
  }
  return std::nullopt;
}

BalancedSolution finish(const Graph& g, Distribution dist, double tol, std::size_t iterations, bool converged,
                        SolveMethod method) {
  BalancedSolution sol;
  sol.theta = l_value(g, dist);
  sol.tight_edges = tight_edges(g, dist, tol);
  const double classify = 10.0 * tol;
  const VertexSet m = critical_set(g, dist, classify);
  if (is_stable(g, m)) sol.component_levels = component_levels(g, dist, extend_to_maximal_stable(g, m), classify);
  sol.dist = std::move(dist);
  sol.iterations = iterations;
  sol.converged = converged;
  sol.method = method;
  return sol;
}

}  // namespace

std::string_view to_string(SolveMethod m) {
  switch (m) {
    case SolveMethod::PerfectTwoMatching: return "perfect-2-matching";
    case SolveMethod::AscentPolish: return "ascent-polish";
    case SolveMethod::LevelPeeling: return "level-peeling";
    case SolveMethod::TwoValued: return "two-valued";
    case SolveMethod::AscentOnly: return "ascent-only";
  }
  return "unknown";
}

Distribution distribution_from_levels(const Graph& g, const DeficiencyLevels& levels) {
  std::vector<double> w(g.order(), 0.0);
  for (const DeficientSet& lvl : levels.levels) {
    auto [q, p] = unit_levels(static_cast<std::int64_t>(lvl.low.size()), static_cast<std::int64_t>(lvl.high.size()));
    for (Vertex v : lvl.low) w[v] = q;
    for (Vertex v : lvl.high) w[v] = p;
  }
  for (Vertex v : levels.remainder) w[v] = 0.5;
  return Distribution::normalized(std::move(w));
}

BalancedSolution solve_balanced(const Graph& g, const SolverOptions& options) {
  g.require_no_isolated();
  if (g.size() == 0) throw PreconditionError("capacity needs at least one edge");
  const std::size_t n = g.order();
  const double tol = options.tol;

  if (admits_perfect_2matching(g)) return finish(g, Distribution::uniform(n), tol, 0, true, SolveMethod::PerfectTwoMatching);

  // Projected supergradient ascent on l(G, P) with suffix averaging between polish attempts.
  std::vector<double> best(n, 1.0 / static_cast<double>(n));
  double best_value = min_edge_value(g, best);
  std::size_t iterations = 0;
  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> noise(0.0, 0.5);
  const double step0 = 1.0 / static_cast<double>(n);

  auto consider = [&](const std::vector<double>& cand) {
    const double v = min_edge_value(g, cand);
    if (v > best_value) {
      best_value = v;
      best = cand;
    }
  };

  for (std::size_t restart = 0; restart < std::max<std::size_t>(options.restarts, 1); ++restart) {
    std::vector<double> p(n, 1.0 / static_cast<double>(n));
    if (restart > 0) {
      for (double& x : p) x *= std::exp(noise(rng));
      project_to_simplex(p);
    }
    std::vector<double> avg(n, 0.0), grad(n);
    std::size_t in_window = 0;
    for (std::size_t k = 1; k <= options.max_iter; ++k) {
      ++iterations;
      const double value = min_edge_value(g, p);
      std::fill(grad.begin(), grad.end(), 0.0);
      std::size_t ties = 0;
      for (const Edge& e : g.edges()) {
        if (hbar_positive(p[e.u], p[e.v]) > value * (1.0 + 1e-12)) continue;
        grad[e.u] += hbar_dp(p[e.u], p[e.v]);
        grad[e.v] += hbar_dp(p[e.v], p[e.u]);
        ++ties;
      }
      // Only the tangential part matters on the simplex.
      const double mean = std::accumulate(grad.begin(), grad.end(), 0.0) / static_cast<double>(n);
      double norm = 0.0;
      for (double& x : grad) {
        x = (x / static_cast<double>(ties)) - mean / static_cast<double>(ties);
        norm += x * x;
      }
      norm = std::sqrt(norm);
      if (norm > 0.0) {
        const double step = step0 / std::sqrt(static_cast<double>(k)) / norm;
        for (std::size_t v = 0; v < n; ++v) p[v] += step * grad[v];
        project_to_simplex(p);
      }
      for (std::size_t v = 0; v < n; ++v) avg[v] += p[v];
      ++in_window;
      if (k % options.check_every == 0 || k == options.max_iter) {
        std::vector<double> mean_iter(n);
        for (std::size_t v = 0; v < n; ++v) mean_iter[v] = avg[v] / static_cast<double>(in_window);
        consider(mean_iter);
        consider(p);
        std::fill(avg.begin(), avg.end(), 0.0);
        in_window = 0;
        if (auto polished = snap(g, best, tol); polished && l_value(g, *polished) >= best_value - 1e-12)
          return finish(g, std::move(*polished), tol, iterations, true, SolveMethod::AscentPolish);
      }
    }
  }

  Distribution peeled = distribution_from_levels(g, deficiency_levels(g));
  if (certified(g, peeled, tol) && l_value(g, peeled) >= best_value - 1e-12)
    return finish(g, std::move(peeled), tol, iterations, true, SolveMethod::LevelPeeling);
  return finish(g, Distribution::normalized(best), tol, iterations, false, SolveMethod::AscentOnly);
}

std::optional<BalancedSolution> exact_two_valued(const Graph& g, const VertexSet& s, double tol) {
  g.require_no_isolated();
  if (!is_maximal_stable(g, s)) throw PreconditionError("S must be a maximal stable set");
  if (g.size() == 0) throw PreconditionError("capacity needs at least one edge");
  const auto alpha = static_cast<std::int64_t>(s.size());
  const auto tau = static_cast<std::int64_t>(g.order()) - alpha;
  const double t = t_star(alpha, tau);
  const double q = 1.0 / (t * static_cast<double>(tau) + static_cast<double>(alpha));
  std::vector<double> w(g.order(), t * q);
  for (Vertex v : s) w[v] = q;
  Distribution cand = Distribution::normalized(std::move(w));
  const double classify = 10.0 * tol;
  if (!critical_set(g, cand, classify).minus(s).empty()) return std::nullopt;
  if (!verify_balance_certificates(g, cand, s, classify).all_passed()) return std::nullopt;
  return finish(g, std::move(cand), tol, 0, true, SolveMethod::TwoValued);
}

Distribution improve_by_perturbation(const Graph& g, const Distribution& p, const VertexSet& y, const VertexSet& t,
                                     double eps) {
  g.check_range(y);
  g.check_range(t);
  if (p.size() != g.order()) throw PreconditionError("distribution size does not match the graph");
  if (!(eps >= 0.0)) throw PreconditionError("eps must be non-negative");
  if (y.empty() || t.empty()) throw PreconditionError("Y and T must be nonempty");
  if (!y.intersected(t).empty()) throw PreconditionError("Y and T must be disjoint");
  if (eps == 0.0) return p;
  const double nu = eps * static_cast<double>(t.size()) / static_cast<double>(y.size());
  std::vector<double> w(p.values().begin(), p.values().end());
  for (Vertex v : t) w[v] += eps;
  for (Vertex v : y) {
    w[v] -= nu;
    if (!(w[v] > 0.0)) throw DomainError("perturbation drives vertex " + std::to_string(v) + " non-positive");
  }
  return Distribution::normalized(std::move(w));
}

}  // namespace graphcap
