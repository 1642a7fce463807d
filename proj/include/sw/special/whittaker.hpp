#pragma once

#include <functional>

#include "sw/errors.hpp"
#include "sw/half_int.hpp"

namespace sw::special {

/// Indices of Whittaker's W_{kappa,mu}. Both are half-integers by construction.
struct WhittakerParams {
  HalfInt kappa;
  HalfInt mu;

  /// a = mu - kappa + 1/2, the Kummer-U first parameter.
  HalfInt a() const { return mu - kappa + kHalf; }
  /// b = 1 + 2 mu
  HalfInt b() const { return HalfInt::from_twice(2 + 2 * mu.twice()); }
  /// Exponent mu + kappa - 1/2 of (1 + u/z) in the integral representation.
  HalfInt exponent() const { return mu + kappa - kHalf; }
};

/// Parameters of the profile F(x) = e^x x^(-gamma) W_{kappa,mu}(2x).
struct ProfileParams {
  HalfInt gamma;             ///< (|m0| + lambda1 + 1)/2
  WhittakerParams whittaker;  ///< kappa = (lambda1 - |m0| - 1)/2, mu = lambda2/2
  int shift_const = 0;        ///< d + |m0| + 2, used by F*

  /// From lambda1, lambda2 and |m0|; d = lambda1 - lambda2.
  static ProfileParams from_representation(int lambda1, int lambda2, int abs_m0);

  /// gamma - kappa, equal to |m0| + 1: F(x) ~ 2^kappa x^-(|m0|+1) as x -> inf.
  int decay_exponent() const { return (gamma - whittaker.kappa).floor(); }
};

/// W_{kappa,mu}(z) = e^{-z/2} z^kappa Gamma(a)^{-1} int_0^inf e^{-u} u^{a-1} (1+u/z)^{mu+kappa-1/2} du,
/// by generalized Gauss-Laguerre with order doubling; for z below 8 a graded composite rule
/// resolves the (1+u/z) factor near u = 0.
/// Throws UnsupportedParameter if a <= 0, AccuracyError on non-convergence.
double whittaker_w(const WhittakerParams& p, double z, double tol = 1e-10);

/// Same integral with a single rule of the given order (nodes per panel when graded).
double whittaker_w_fixed_order(const WhittakerParams& p, double z, int order);

struct ProfileValue {
  Estimate f;   ///< F(x)
  Estimate df;  ///< F'(x)
};

/// F and F' from one quadrature pass over the cancelled form
///   F(x) = 2^kappa x^-(|m0|+1) Gamma(a)^{-1} int e^{-u} u^{a-1} (1 + u/(2x))^{mu+kappa-1/2} du.
ProfileValue eval_profile(const ProfileParams& pp, double x, double tol = 1e-10);

double eval_F(const ProfileParams& pp, double x, double tol = 1e-10);

/// F*(x) = 2x F'(x) + shift_const F(x).
double eval_F_star(const ProfileParams& pp, double x, double tol = 1e-10);

/// Residual of H'' + (-1 + 2 kappa/x + (1/4 - mu^2)/x^2) H for an arbitrary H,
/// second derivative by a 5-point central stencil of width h; normalized by max(|H|, 1).
double ode_residual(const WhittakerParams& p, double x, const std::function<double(double)>& h_fn, double h);

/// The residual above with H(x) = W_{kappa,mu}(2x). The stencil uses one fixed
/// Laguerre order chosen at the center so quadrature error stays smooth in x.
double whittaker_ode_residual(const ProfileParams& pp, double x);

}  // namespace sw::special
