#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "graphcap/graph.hpp"

namespace graphcap {

/// Weights in {0, 1/2, 1} on edges or vertices, stored as twice the weight.
struct HalfIntegralVector {
  enum class Carrier { Edges, Vertices };

  Carrier carrier = Carrier::Vertices;
  std::vector<std::uint8_t> halves;  // halves[i] ∈ {0, 1, 2}

  double weight(std::size_t i) const { return 0.5 * halves.at(i); }
  /// Twice the total weight, kept integral.
  std::int64_t twice_total() const;
  double total() const { return 0.5 * static_cast<double>(twice_total()); }
};

struct Matching {
  std::size_t size = 0;
  std::vector<Edge> edges;
};

/// Odd cycles at weight 1/2 plus edges at weight 1.
struct TwoMatchingCertificate {
  std::vector<std::vector<Vertex>> cycles;  // each listed in traversal order
  std::vector<Edge> matched_edges;
  bool covered = false;

  /// Cycles odd, simple, using edges of g, vertex disjoint from each other and
  /// from the matched edges; `covered` iff every vertex appears.
  bool validate(const Graph& g) const;
  HalfIntegralVector as_edge_weights(const Graph& g) const;
};

struct Perfect2MatchingResult {
  bool exists = false;
  std::optional<TwoMatchingCertificate> certificate;
  /// Stable set X with |ΓX| < |X| when no perfect 2-matching exists.
  std::optional<VertexSet> violator;
};

/// Maximum bipartite matching (Hopcroft–Karp). adjacency[l] lists right
/// vertices. Returns mate_left (right id or -1 per left vertex).
std::vector<std::int64_t> hopcroft_karp(std::size_t n_left, std::size_t n_right,
                                        const std::vector<std::vector<Vertex>>& adjacency);

/// Two copies v' = v and v'' = n + v; each edge {u,v} yields {u',v''} and {v',u''}.
Graph bipartite_double_cover(const Graph& g);

/// Maximum cardinality matching in a general graph (Edmonds' blossom algorithm).
Matching max_matching(const Graph& g);

/// Maximum 2-matching; value = half the size of a maximum matching of the double cover.
struct TwoMatching {
  double value = 0.0;
  std::int64_t twice_value = 0;
  HalfIntegralVector weights;  // edge carrier, indexed like g.edges()
};
TwoMatching max_2matching(const Graph& g);

/// Throws IsolatedVertexError when g has an isolated vertex.
Perfect2MatchingResult has_perfect_2matching(const Graph& g);
/// Same test, but graphs with isolated vertices simply have no perfect 2-matching.
/// The empty graph has one vacuously.
bool admits_perfect_2matching(const Graph& g);

/// Minimum fractional vertex cover. Half-integral optimum built from a König
/// cover of the double cover; its value equals the maximum 2-matching value.
struct FractionalCover {
  double value = 0.0;
  std::int64_t twice_value = 0;
  HalfIntegralVector weights;  // vertex carrier
};
FractionalCover min_fractional_cover(const Graph& g);

enum class BasicConvention {
  PaperLiteral,  // weight-1 vertices induce a non-bipartite graph
  HalfSet        // every component induced on the weight-1/2 vertices is non-bipartite
};
BasicConvention parse_convention(std::string_view name);
std::string_view to_string(BasicConvention c);

/// Throws PreconditionError when y is not a valid 2-cover of g.
bool is_basic_2cover(const Graph& g, const HalfIntegralVector& y,
                     BasicConvention convention = BasicConvention::HalfSet);

struct UniformCoverStatus {
  bool optimal = false;
  bool unique = false;
};
UniformCoverStatus uniform_cover_status(const Graph& g);

/// A stable set of maximum ratio |low| / |Γlow| among all nonempty vertex
/// sets of the host graph, together with its neighbourhood. The maximal such set is returned.
struct DeficientSet {
  VertexSet low;
  VertexSet high;
};
/// Requires no isolated vertices; returns the maximal maximiser of |A|/|N(A)|.
DeficientSet max_ratio_set(const Graph& g);

/// Peeling of g into levels of strictly decreasing ratio |low|/|high| > 1;
/// after the last level the remainder (possibly empty) has a perfect 2-matching.
struct DeficiencyLevels {
  std::vector<DeficientSet> levels;  // original ids
  VertexSet remainder;
};
DeficiencyLevels deficiency_levels(const Graph& g);

/// Hall-type feasibility inside a bipartite low/high block: every low vertex
/// ships `low_supply` units and every high vertex absorbs `high_demand` units
/// along the given edges (each edge joins a low and a high vertex).
bool bipartite_transport_feasible(const VertexSet& low, const VertexSet& high,
                                  const std::vector<Edge>& edges, std::int64_t low_supply,
                                  std::int64_t high_demand);

}  // namespace graphcap
