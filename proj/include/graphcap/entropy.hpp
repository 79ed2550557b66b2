#pragma once

#include <cstdint>

// Scalar kernel of the capacity program. All logarithms are base 2.

namespace graphcap {

/// h(x) = -x log x - (1-x) log(1-x) for 0 < x < 1; DomainError otherwise.
double binary_entropy(double x);

/// ħ(p, q) = (p + q) h(p / (p + q)) for 0 < p, q < 1.
double hbar(double p, double q);

/// Degree-one homogeneous extension of ħ to all positive reals,
/// p log(1 + q/p) + q log(1 + p/q). No domain check beyond positivity.
double hbar_positive(double p, double q);

/// ∂ħ/∂p = log(1 + q/p). By symmetry ∂ħ/∂q = log(1 + p/q).
double hbar_dp(double p, double q);

/// Two-valued maximin instance: mass w split as alpha·q + tau·p with q <= p.
struct TwoValuedProblem {
  double w = 1.0;
  std::int64_t alpha = 1;
  std::int64_t tau = 1;

  /// Throws DomainError unless w ∈ (0,1], alpha >= 1, tau >= 1.
  void validate() const;
};

struct KernelResult {
  double t_star = 1.0;
  double q = 0.0;
  double p = 0.0;
  double value = 0.0;
};

/// z(t) = ħ(w t / (t τ + α), w / (t τ + α)), t >= 1.
double z(double t, const TwoValuedProblem& prob);

/// dz/dt = w / (t τ + α)^2 · [α log(1/t + 1) − τ log(t + 1)], t >= 1.
double dz_dt(double t, const TwoValuedProblem& prob);

/// Maximiser of z over t >= 1. Equals 1 when alpha <= tau, otherwise the
/// unique root above 1 of (α−τ) log(t+1) − α log t. No mass parameter: the
/// optimum ratio does not depend on w.
double t_star(std::int64_t alpha, std::int64_t tau);

/// Log-space stationarity residual (α−τ) ln(t+1) − α ln t.
double t_star_residual(double t, std::int64_t alpha, std::int64_t tau);

/// φ(w, α, τ) = max over t >= 1 of z(t, w, α, τ), with the optimal levels.
KernelResult phi(const TwoValuedProblem& prob);

}  // namespace graphcap
