#pragma once

#include <gmpxx.h>

#include <array>
#include <cmath>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "sw/errors.hpp"
#include "sw/half_int.hpp"

namespace sw::quad {

/// Gauss rule for the weight t^(alpha-1) (1-t)^(beta-1) on [0, 1].
struct QuadRule {
  double alpha = 1.0;
  double beta = 1.0;
  std::vector<double> nodes;    ///< strictly increasing, inside (0, 1)
  std::vector<double> weights;  ///< positive, summing to B(alpha, beta)
  int order() const { return static_cast<int>(nodes.size()); }
};

/// Generalized Gauss-Laguerre rule for the weight u^(a-1) e^(-u) on [0, inf).
struct LaguerreRule {
  double a = 1.0;
  std::vector<double> nodes;
  std::vector<double> weights;  ///< sum to Gamma(a)
  int order() const { return static_cast<int>(nodes.size()); }
};

/// Newton on the recurrence-evaluated Jacobi polynomial, Chebyshev-angle starts,
/// bisection fallback. Throws std::runtime_error if a root fails to converge.
QuadRule gauss_jacobi_rule(int n, double alpha, double beta);
LaguerreRule gauss_laguerre_rule(int n, double a);

/// Shared immutable rules keyed by (order, parameters). Thread-safe.
std::shared_ptr<const QuadRule> cached_jacobi(int n, double alpha, double beta);

/// Composite rule for the weight u^(a-1) e^(-u) on [0, inf) when the integrand varies on a
/// length scale `scale` near u = 0: a Jacobi panel on [0, scale], geometrically growing
/// Legendre panels up to kGradedCutoff, then a shifted Laguerre tail. n nodes per panel,
/// 2n in the tail. Weights absorb the weight function.
inline constexpr double kGradedCutoff = 8.0;
std::shared_ptr<const LaguerreRule> graded_laguerre_rule(int n, double a, double scale);
std::shared_ptr<const LaguerreRule> cached_laguerre(int n, double a);

/// Exact B(alpha, beta) for half-integer arguments: coeff, times pi when both are half-odd.
struct ExactBeta {
  mpq_class coeff;
  bool times_pi = false;
  double value() const { return coeff.get_d() * (times_pi ? M_PI : 1.0); }
  friend bool operator==(const ExactBeta&, const ExactBeta&) = default;
};

ExactBeta beta_value(HalfInt alpha, HalfInt beta);
/// Floating-point B(alpha, beta) for arbitrary positive reals (via lgamma).
double beta_numeric(double alpha, double beta);
/// B(alpha, beta) exactly when both arguments are half-integers, else via lgamma.
double beta_best(double alpha, double beta);

template <size_t N>
struct VecEstimate {
  std::array<double, N> value{};
  std::array<double, N> error{};
  int order = 0;
};

namespace detail {

/// Order doubling: stops when every component changes by at most tol times the
/// absolute integral sum_i w_i |f(x_i)| (equal to tol*|value| for one-signed integrands).
template <size_t N, class RuleFn, class F>
VecEstimate<N> doubling(RuleFn rule_for, F&& f, double tol, int n_min, int n_max, const char* what) {
  VecEstimate<N> prev;
  bool have_prev = false;
  for (int n = n_min; n <= n_max; n *= 2) {
    const auto rule = rule_for(n);
    VecEstimate<N> cur;
    cur.order = n;
    std::array<double, N> mag{};
    for (int i = 0; i < rule->order(); ++i) {
      const double w = rule->weights[static_cast<size_t>(i)];
      if (w == 0.0) continue;
      const std::array<double, N> v = f(rule->nodes[static_cast<size_t>(i)]);
      for (size_t c = 0; c < N; ++c) {
        cur.value[c] += w * v[c];
        mag[c] += w * std::abs(v[c]);
      }
    }
    if (have_prev) {
      bool converged = true;
      for (size_t c = 0; c < N; ++c) {
        cur.error[c] = std::abs(cur.value[c] - prev.value[c]);
        if (!(cur.error[c] <= tol * mag[c])) converged = false;
      }
      if (converged) return cur;
    }
    prev = cur;
    have_prev = true;
  }
  throw AccuracyError(std::string(what) + ": no convergence at order " + std::to_string(n_max), prev.value[0],
                      prev.error[0]);
}

}  // namespace detail

/// Vector-valued integral of f against t^(alpha-1)(1-t)^(beta-1), orders 16..512.
template <size_t N, class F>
VecEstimate<N> integrate_weighted_vec(F&& f, double alpha, double beta, double tol, int n_min = 16,
                                      int n_max = 512) {
  return detail::doubling<N>([&](int n) { return cached_jacobi(n, alpha, beta); }, std::forward<F>(f), tol,
                             n_min, n_max, "Gauss-Jacobi");
}

/// Vector-valued integral of f against u^(a-1) e^(-u), orders 32..256.
template <size_t N, class F>
VecEstimate<N> integrate_laguerre_vec(F&& f, double a, double tol, int n_min = 32, int n_max = 256) {
  return detail::doubling<N>([&](int n) { return cached_laguerre(n, a); }, std::forward<F>(f), tol, n_min,
                             n_max, "Gauss-Laguerre");
}

/// Same weight, but for integrands with structure at u ~ scale: plain Laguerre when
/// scale >= kGradedCutoff, otherwise the graded rule with 16..128 nodes per panel.
template <size_t N, class F>
VecEstimate<N> integrate_laguerre_scaled_vec(F&& f, double a, double scale, double tol) {
  if (scale >= kGradedCutoff) return integrate_laguerre_vec<N>(std::forward<F>(f), a, tol);
  return detail::doubling<N>([&](int n) { return graded_laguerre_rule(n, a, scale); }, std::forward<F>(f), tol, 16,
                             128, "graded Gauss-Laguerre");
}

/// Integral of f(t) t^(alpha-1) (1-t)^(beta-1) over [0, 1]; error is the last change.
Estimate integrate_weighted(const std::function<double(double)>& f, double alpha, double beta,
                            double tol = 1e-10);

}  // namespace sw::quad
