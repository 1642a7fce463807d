#pragma once

#include <array>
#include <vector>

#include "sw/errors.hpp"
#include "sw/exact/coefficients.hpp"
#include "sw/radial/params.hpp"
#include "sw/special/whittaker.hpp"

namespace sw::radial {

/// Values of one function and its log-derivatives d_i = a_i d/da_i at a point.
struct FirstDerivs {
  double u = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

/// f_k, d1 f_k, d2 f_k for k = 0..d, with error estimates on f_k.
struct BasisValues {
  std::vector<FirstDerivs> f;
  std::vector<double> err;

  /// Linear combination sum_k c_k f_k (with derivatives).
  FirstDerivs combine(const std::vector<double>& c) const;
  double combine_error(const std::vector<double>& c) const;
};

/// Value of a component written as eps^eps_exponent times a real number.
struct EpsValue {
  Estimate real;
  int eps_exponent = 0;
};

/// Radial part of the Whittaker function attached to (rep, character).
///   f_k(a) = y1^(k+1/2) y2^(d-k+1/2) delta^n int_0^1 F(2 pi (y1 s + y2 (1-s))) s^(alpha_k-1) (1-s)^(beta_k-1) ds
/// with n = (|m0|-d)/2, alpha_k = n + 1/2 + k, beta_k = (|m0|+d+1)/2 - k.
class RadialModel {
 public:
  RadialModel(const RepParams& rep, const CharParams& ch, Mode mode = Mode::strict);

  const RepParams& rep() const { return rep_; }
  const CharParams& chr() const { return ch_; }
  Mode mode() const { return mode_; }
  int d() const { return rep_.d(); }
  int t() const { return ch_.t(); }
  int n() const { return (ch_.t() - rep_.d()) / 2; }
  const special::ProfileParams& profile() const { return profile_; }
  const exact::NumericMatrix& z_exact() const { return z_exact_; }
  double z(int j, int k) const;
  const std::vector<double>& z_row(int j) const { return z_rows_[static_cast<size_t>(j)]; }
  double alpha(int k) const { return n() + 0.5 + k; }
  double beta(int k) const { return 0.5 * (t() + d() + 1) - k; }

  RadialPoint point(double a1, double a2) const { return RadialPoint::at(a1, a2, ch_); }

  Estimate f_k(int k, const RadialPoint& p, double tol = 1e-10) const;
  /// d_dir f_k for dir = 1, 2 (analytic differentiation under the integral).
  Estimate radial_derivative_f_k(int dir, int k, const RadialPoint& p, double tol = 1e-10) const;
  FirstDerivs f_k_with_derivs(int k, const RadialPoint& p, double tol, double* err = nullptr) const;
  BasisValues basis(const RadialPoint& p, double tol = 1e-10) const;

  /// g_j = eps^j sum_k z_jk f_k; the real part is G_j.
  EpsValue g_j(int j, const RadialPoint& p, double tol = 1e-10) const;
  /// phi_j = (sqrt y1)^(lambda1-j) (sqrt y2)^(lambda2+j) e^{-2 pi (y1 + y2)} g_j.
  EpsValue phi_component(int j, const RadialPoint& p, double tol = 1e-10) const;
  double phi_prefactor(int j, const RadialPoint& p) const;

 private:
  RepParams rep_;
  CharParams ch_;
  Mode mode_;
  special::ProfileParams profile_;
  exact::NumericMatrix z_exact_;
  std::vector<std::vector<double>> z_rows_;
};

}  // namespace sw::radial
