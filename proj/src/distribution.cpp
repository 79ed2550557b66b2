#include "graphcap/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "graphcap/entropy.hpp"
#include "graphcap/errors.hpp"

namespace graphcap {

Distribution::Distribution(std::vector<double> probs) : probs_(std::move(probs)) {
  double sum = 0.0;
  for (double x : probs_) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("distribution entries must be positive");
    sum += x;
  }
  if (probs_.empty() || std::abs(sum - 1.0) > kSumTolerance) throw DomainError("distribution must sum to 1");
}

Distribution Distribution::uniform(std::size_t n) {
  if (n == 0) throw DomainError("uniform distribution needs at least one vertex");
  return Distribution(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

Distribution Distribution::normalized(std::vector<double> weights) {
  double sum = 0.0;
  for (double x : weights) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("weights must be positive");
    sum += x;
  }
  for (double& x : weights) x /= sum;
  return Distribution(std::move(weights));
}

double Distribution::mass(const VertexSet& s) const {
  double m = 0.0;
  for (Vertex v : s) m += probs_.at(v);
  return m;
}

double edge_value(const Distribution& p, const Edge& e) { return hbar_positive(p[e.u], p[e.v]); }

double l_value(const Graph& g, const Distribution& p) {
  if (g.size() == 0) throw PreconditionError("l(G, P) needs at least one edge");
  if (p.size() != g.order()) throw PreconditionError("distribution size does not match the graph");
  double best = std::numeric_limits<double>::infinity();
  for (const Edge& e : g.edges()) best = std::min(best, edge_value(p, e));
  return best;
}

}  // namespace graphcap
