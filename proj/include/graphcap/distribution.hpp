#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "graphcap/graph.hpp"

namespace graphcap {

/// Strictly positive probability vector on the vertices of a graph.
class Distribution {
 public:
  static constexpr double kSumTolerance = 1e-12;

  Distribution() = default;
  /// Throws DomainError unless all entries are > 0 and sum to 1 within kSumTolerance.
  explicit Distribution(std::vector<double> probs);

  static Distribution uniform(std::size_t n);
  /// Rescales positive weights to unit mass.
  static Distribution normalized(std::vector<double> weights);

  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t v) const { return probs_[v]; }
  std::span<const double> values() const noexcept { return probs_; }
  double mass(const VertexSet& s) const;

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  std::vector<double> probs_;
};

/// ħ(P(u), P(v)) for one edge.
double edge_value(const Distribution& p, const Edge& e);

/// l(G, P) = min over edges of ħ(P(x), P(y)). Throws on an empty edge set or
/// a size mismatch.
double l_value(const Graph& g, const Distribution& p);

}  // namespace graphcap
