#include "graphcap/entropy.hpp"

#include <cmath>
#include <string>

#include "graphcap/errors.hpp"

namespace graphcap {
namespace {

constexpr double kInvLn2 = 1.4426950408889634073599246810019;

double log2_1p(double x) { return std::log1p(x) * kInvLn2; }

void require_t(double t) {
  if (!(t >= 1.0) || !std::isfinite(t)) throw DomainError("t must be a finite real >= 1");
}

}  // namespace

double binary_entropy(double x) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("binary entropy needs 0 < x < 1");
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double hbar_positive(double p, double q) {
  if (!(p > 0.0 && q > 0.0)) throw DomainError("hbar needs positive arguments");
  return p * log2_1p(q / p) + q * log2_1p(p / q);
}

double hbar(double p, double q) {
  if (!(p > 0.0 && p < 1.0 && q > 0.0 && q < 1.0)) throw DomainError("hbar needs 0 < p, q < 1");
  return hbar_positive(p, q);
}

double hbar_dp(double p, double q) {
  if (!(p > 0.0 && q > 0.0)) throw DomainError("hbar needs positive arguments");
  return log2_1p(q / p);
}

void TwoValuedProblem::validate() const {
  if (!(w > 0.0 && w <= 1.0)) throw DomainError("w must lie in (0, 1]");
  if (alpha < 1 || tau < 1) throw DomainError("alpha and tau must be positive");
}

double z(double t, const TwoValuedProblem& prob) {
  require_t(t);
  prob.validate();
  const double denom = t * static_cast<double>(prob.tau) + static_cast<double>(prob.alpha);
  return hbar(prob.w * t / denom, prob.w / denom);
}

double dz_dt(double t, const TwoValuedProblem& prob) {
  require_t(t);
  prob.validate();
  const double a = static_cast<double>(prob.alpha), tau = static_cast<double>(prob.tau);
  const double denom = t * tau + a;
  return prob.w / (denom * denom) * (a * log2_1p(1.0 / t) - tau * log2_1p(t));
}

double t_star_residual(double t, std::int64_t alpha, std::int64_t tau) {
  const double a = static_cast<double>(alpha), b = static_cast<double>(tau);
  return (a - b) * std::log1p(t) - a * std::log(t);
}

double t_star(std::int64_t alpha, std::int64_t tau) {
  if (alpha < 1 || tau < 1) throw DomainError("alpha and tau must be positive");
  if (alpha <= tau) return 1.0;
  // Residual is positive at 1 and strictly decreasing; grow the bracket until it turns negative.
  double lo = 1.0, hi = 2.0;
  while (t_star_residual(hi, alpha, tau) > 0.0) {
    lo = hi;
    hi *= 2.0;
  }
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double r = t_star_residual(mid, alpha, tau);
    if (r == 0.0) return mid;
    (r > 0.0 ? lo : hi) = mid;
  }
  return std::abs(t_star_residual(lo, alpha, tau)) <= std::abs(t_star_residual(hi, alpha, tau)) ? lo : hi;
}

KernelResult phi(const TwoValuedProblem& prob) {
  prob.validate();
  KernelResult r;
  r.t_star = t_star(prob.alpha, prob.tau);
  r.q = prob.w / (r.t_star * static_cast<double>(prob.tau) + static_cast<double>(prob.alpha));
  r.p = r.t_star * r.q;
  r.value = hbar(r.p, r.q);
  return r;
}

}  // namespace graphcap
