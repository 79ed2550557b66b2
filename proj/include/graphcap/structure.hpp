#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphcap/distribution.hpp"
#include "graphcap/graph.hpp"

namespace graphcap {

inline constexpr double kDefaultStructureTol = 1e-6;

/// L(P): edges whose value is within tol of l(G, P).
std::vector<Edge> tight_edges(const Graph& g, const Distribution& p, double tol = kDefaultStructureTol);

/// Which neighbours make a vertex P-critical. `Literal` compares x with every
/// neighbour. `Tight` compares only along edges of L(P); on an optimum the
/// literal rule also fires across slack edges between unrelated levels, where
/// the splitting identities fail. The same rule restricts e(P).
enum class CriticalRule { Tight, Literal };
CriticalRule parse_critical_rule(std::string_view name);
std::string_view to_string(CriticalRule r);

/// m(P): vertices x with a neighbour y (joined by a tight edge under the
/// Tight rule) such that P(y) - P(x) > tol.
VertexSet critical_set(const Graph& g, const Distribution& p, double tol = kDefaultStructureTol,
                       CriticalRule rule = CriticalRule::Tight);
struct ESet {
  VertexSet vertices;     // x with |P(x) - P(y)| <= tol for every (tight) neighbour y
  bool identity_holds = false;  // vertices == V \ (m(P) ∪ Γm(P))
};
ESet e_set(const Graph& g, const Distribution& p, double tol = kDefaultStructureTol,
           CriticalRule rule = CriticalRule::Tight);

/// Two fitted levels of one component of (V, L(P)): q on the S side, p off it.
struct ComponentLevel {
  VertexSet vertices;
  double q = 0.0;
  double p = 0.0;
  double max_deviation = 0.0;
  bool fits = false;
};

/// Requires S maximal stable (PreconditionError otherwise).
std::vector<ComponentLevel> component_levels(const Graph& g, const Distribution& p, const VertexSet& s,
                                             double tol = kDefaultStructureTol);

/// KKT certificate for the normalised program min ΣQ s.t. ħ(Q_x, Q_y) >= 1.
/// Every tight component must be uniform with a fractional perfect matching on
/// its tight edges, or two-level low/high with a stationary ratio and a
/// feasible transport. Holding means P is optimal up to tol.
struct Stationarity {
  bool holds = false;
  std::string detail;
};
Stationarity stationarity_certificate(const Graph& g, const Distribution& p, double tol = kDefaultStructureTol);

struct CertificateCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct StructureReport {
  double theta = 0.0;
  VertexSet stable_side;
  std::vector<Edge> tight_edges;
  VertexSet m_set;
  VertexSet e_set;
  std::vector<ComponentLevel> components;
  std::vector<std::pair<std::size_t, std::size_t>> precedence;  // direct F ≺ F' pairs (component indices)
  std::vector<CertificateCheck> checks;
  std::size_t deficiency_subsets_checked = 0;
  bool deficiency_sampled = false;

  bool all_passed() const;
  /// Throws std::out_of_range for an unknown name.
  bool passed(std::string_view name) const;
};

inline constexpr std::size_t kDeficiencyExhaustiveLimit = 15;
inline constexpr std::size_t kDeficiencySamples = 4096;

/// Evaluates the structural checks of a balanced distribution:
/// line_cover, critical_stable, two_levels, e_identity, precedence, deficiency, stationarity.
/// Requires S maximal stable with m(P) ⊆ S (PreconditionError otherwise).
StructureReport verify_balance_certificates(const Graph& g, const Distribution& p, const VertexSet& s,
                                            double tol = kDefaultStructureTol, std::uint64_t seed = 0,
                                            CriticalRule rule = CriticalRule::Tight);

}  // namespace graphcap
