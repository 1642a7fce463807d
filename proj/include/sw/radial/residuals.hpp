#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "sw/exact/eps_number.hpp"
#include "sw/quadrature/quadrature.hpp"
#include "sw/radial/model.hpp"

namespace sw::radial {

using EpsReal = exact::EpsNumber<double>;

/// Component c_j = eps^eps_exponent * (u, d1 u, d2 u).
struct EpsFunction {
  FirstDerivs value;
  int eps_exponent = 0;
};

/// Normalized residual |sum of terms| / sum |terms| (0 when every term is 0).
class ResidualSum {
 public:
  void add(const EpsReal& term);
  void add(double term) { add(EpsReal{term, 0.0}); }
  double normalized() const;
  double absolute() const;
  double scale() const { return scale_; }

 private:
  EpsReal sum_{};
  double scale_ = 0.0;
};

/// Normalized residuals of the first-order system for c_0..c_d at a point with delta != 0.
/// i m0 is taken literally as eps |m0|. Arrays are indexed by j:
/// M1 for 1 <= j <= d, M2 for 0 <= j <= d-1, M3 for 1 <= j <= d-1 (other slots unused, 0).
struct SystemResiduals {
  std::vector<double> m1;
  std::vector<double> m2;
  std::vector<double> m3;
};

SystemResiduals first_order_residuals(const std::vector<EpsFunction>& c, int lambda2, int abs_m0, double y1,
                                      double y2);

/// Second-order scalar operator. standard:
///   (d1+d2)^2 + 2(lambda2-2)(d1+d2) - 8 pi (y1 d1 + y2 d2) - 4(lambda2-1)
/// extra_d2 replaces the second term with 2(lambda2-2)(d1+d2) d2.
enum class OmegaVariant { standard, extra_d2 };

std::string to_string(OmegaVariant v);
OmegaVariant parse_omega_variant(const std::string& s);

/// Five samples of (u, d1 u, d2 u) at log-shifts s = -2h, -h, 0, h, 2h along (a1 e^s, a2 e^s).
using DiagonalStencil = std::array<FirstDerivs, 5>;

/// Normalized residual of the operator, second derivatives by a 5-point central stencil
/// applied to the analytic first derivatives.
double apply_omega(const DiagonalStencil& u, double y1, double y2, int lambda2, double h, OmegaVariant variant);

/// Samples a generic function given as (a1, a2) -> (u, d1 u, d2 u).
DiagonalStencil sample_stencil(const std::function<FirstDerivs(double, double)>& fn, double a1, double a2,
                               double h);

constexpr double kStencilStep = 1e-3;

/// f-basis at the five stencil points.
struct StencilBasis {
  RadialPoint center;
  std::array<BasisValues, 5> at;
  double h = kStencilStep;

  DiagonalStencil combine(const std::vector<double>& c) const;
};

StencilBasis stencil_basis(const RadialModel& m, const RadialPoint& p, double tol, double h = kStencilStep);

/// Which functions are substituted for c_j in the first-order system.
enum class Combination {
  solution,  ///< c_j = g_j
  identity,  ///< c_j = eps^j f_j, which is not a solution (detector check)
};

struct SystemReport {
  SystemResiduals system;
  std::vector<double> omega;  ///< Omega f_k, k = 0..d
  double max_m1 = 0.0;
  double max_m2 = 0.0;
  double max_m3 = 0.0;
  double max_omega = 0.0;
};

/// Throws std::domain_error when the point is within 1e-8 (relative) of the diagonal.
SystemReport residual_system(const RadialModel& m, const RadialPoint& p, double tol = 1e-10,
                             Combination comb = Combination::solution,
                             OmegaVariant variant = OmegaVariant::standard);

/// Same from a precomputed stencil (its center must be off the diagonal).
SystemReport residual_system(const RadialModel& m, const StencilBasis& sb, Combination comb = Combination::solution,
                             OmegaVariant variant = OmegaVariant::standard);

/// The second-order operator applied to g_j.
double residual_M6(const RadialModel& m, int j, const RadialPoint& p, double tol = 1e-10,
                   OmegaVariant variant = OmegaVariant::standard);
/// Same for all j at once from one stencil.
std::vector<double> residual_M6_all(const RadialModel& m, const RadialPoint& p, double tol = 1e-10,
                                    OmegaVariant variant = OmegaVariant::standard);

/// Omega f_k for every k under the given variant.
std::vector<double> omega_on_basis(const RadialModel& m, const RadialPoint& p, double tol, OmegaVariant variant);
std::vector<double> omega_on_basis(const RadialModel& m, const StencilBasis& sb, OmegaVariant variant);

/// Normalized residuals of
///   d1 f_k = -(2k+1)(y2/delta) f_k + (|m0|+d-1-2k)(y2/delta) f_{k+1},  0 <= k <= d-1
///   d2 f_k = (2d-2k+1)(y1/delta) f_k - (|m0|-d-1+2k)(y1/delta) f_{k-1}, 1 <= k <= d
struct DerivativeRelations {
  std::vector<double> first;   ///< indexed by k, slot d unused
  std::vector<double> second;  ///< indexed by k, slot 0 unused
  double max_first = 0.0;
  double max_second = 0.0;
};

DerivativeRelations derivative_relations(const RadialModel& m, const RadialPoint& p, double tol = 1e-10);

struct Comparison {
  double lhs = 0.0;
  double rhs = 0.0;
  double rel_err = 0.0;
};

/// On the diagonal y1 = y2 = y, for |m0| = d:
///   G_j = 2^-d pi y^(d+1) F(2 pi y) and (d1 + d2) G_j = 2^-d pi y^(d+1) F*(2 pi y),
/// both with the same eps^j factor. Throws std::domain_error if |m0| != d.
struct RestrictionReport {
  int j = 0;
  int eps_exponent = 0;
  double y = 0.0;
  Comparison value;
  Comparison derivative;
};

RestrictionReport restriction_identity(const RadialModel& m, int j, double y, double tol = 1e-10);

/// sum_k z_jk(t=d) B(k+1/2, d-k+1/2) in exact form; equals 2^-d pi for every j.
quad::ExactBeta restriction_beta_sum(int d, int j);

}  // namespace sw::radial
