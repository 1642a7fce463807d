#include "sw/special/whittaker.hpp"

#include <array>
#include <cmath>
#include <string>

#include "sw/quadrature/quadrature.hpp"

namespace sw::special {

namespace {

void require_integral_representation(const WhittakerParams& p) {
  if (p.a().twice() <= 0) {
    throw UnsupportedParameter("W_{kappa,mu} needs a = mu - kappa + 1/2 > 0 (kappa=" + p.kappa.str() +
                               ", mu=" + p.mu.str() + ")");
  }
}

double log_w_prefactor(const WhittakerParams& p, double z) {
  return -0.5 * z + p.kappa.value() * std::log(z) - std::lgamma(p.a().value());
}

}  // namespace

ProfileParams ProfileParams::from_representation(int lambda1, int lambda2, int abs_m0) {
  ProfileParams pp;
  pp.gamma = HalfInt::from_twice(abs_m0 + lambda1 + 1);
  pp.whittaker.kappa = HalfInt::from_twice(lambda1 - abs_m0 - 1);
  pp.whittaker.mu = HalfInt::from_twice(lambda2);
  pp.shift_const = (lambda1 - lambda2) + abs_m0 + 2;
  return pp;
}

double whittaker_w(const WhittakerParams& p, double z, double tol) {
  require_integral_representation(p);
  if (!(z > 0.0)) throw std::domain_error("whittaker_w needs z > 0");
  const double e = p.exponent().value();
  const auto r = quad::integrate_laguerre_scaled_vec<1>(
      [&](double u) { return std::array<double, 1>{std::exp(e * std::log1p(u / z))}; }, p.a().value(), z, tol);
  return std::exp(log_w_prefactor(p, z)) * r.value[0];
}

double whittaker_w_fixed_order(const WhittakerParams& p, double z, int order) {
  require_integral_representation(p);
  if (!(z > 0.0)) throw std::domain_error("whittaker_w needs z > 0");
  const double e = p.exponent().value();
  const auto rule = z >= quad::kGradedCutoff ? quad::cached_laguerre(order, p.a().value())
                                             : quad::graded_laguerre_rule(order, p.a().value(), z);
  double sum = 0.0;
  for (int i = 0; i < rule->order(); ++i) {
    sum += rule->weights[static_cast<size_t>(i)] * std::exp(e * std::log1p(rule->nodes[static_cast<size_t>(i)] / z));
  }
  return std::exp(log_w_prefactor(p, z)) * sum;
}

ProfileValue eval_profile(const ProfileParams& pp, double x, double tol) {
  const WhittakerParams& w = pp.whittaker;
  require_integral_representation(w);
  if (!(x > 0.0)) throw std::domain_error("profile F needs x > 0");
  const double e = w.exponent().value();
  const double two_x = 2.0 * x;
  const auto r = quad::integrate_laguerre_scaled_vec<2>(
      [&](double u) {
        const double base = std::log1p(u / two_x);
        const double g = std::exp(e * base);
        // d/dx (1 + u/(2x))^e = e (1 + u/(2x))^(e-1) * (-u / (2 x^2))
        const double dg = e * std::exp((e - 1.0) * base) * (-u / (two_x * x));
        return std::array<double, 2>{g, dg};
      },
      w.a().value(), two_x, tol);

  const double decay = pp.decay_exponent();
  const double c = std::exp(w.kappa.value() * M_LN2 - decay * std::log(x) - std::lgamma(w.a().value()));
  ProfileValue out;
  out.f = {c * r.value[0], c * r.error[0]};
  // F = c(x) J(x) with c'(x) = -decay c / x
  out.df = {c * (r.value[1] - decay * r.value[0] / x), c * (r.error[1] + decay * r.error[0] / x)};
  return out;
}

double eval_F(const ProfileParams& pp, double x, double tol) { return eval_profile(pp, x, tol).f.value; }

double eval_F_star(const ProfileParams& pp, double x, double tol) {
  const ProfileValue v = eval_profile(pp, x, tol);
  return 2.0 * x * v.df.value + pp.shift_const * v.f.value;
}

double ode_residual(const WhittakerParams& p, double x, const std::function<double(double)>& h_fn, double h) {
  if (!(x > 2.0 * h)) throw std::domain_error("ode_residual stencil leaves x > 0");
  const double f0 = h_fn(x);
  const double d2 = (-h_fn(x + 2 * h) + 16.0 * h_fn(x + h) - 30.0 * f0 + 16.0 * h_fn(x - h) - h_fn(x - 2 * h)) /
                    (12.0 * h * h);
  const double mu = p.mu.value();
  const double q = -1.0 + 2.0 * p.kappa.value() / x + (0.25 - mu * mu) / (x * x);
  return std::abs(d2 + q * f0) / std::max(std::abs(f0), 1.0);
}

double whittaker_ode_residual(const ProfileParams& pp, double x) {
  const WhittakerParams& w = pp.whittaker;
  // Converge at the center (tight), then hold that order across the stencil.
  int order = 32;
  double prev = whittaker_w_fixed_order(w, 2.0 * x, order);
  for (order = 64; order <= 256; order *= 2) {
    const double cur = whittaker_w_fixed_order(w, 2.0 * x, order);
    if (std::abs(cur - prev) <= 1e-14 * std::abs(cur)) break;
    prev = cur;
  }
  if (order > 256) order = 256;
  const double h = 1e-2 * x;
  return ode_residual(w, x, [&](double s) { return whittaker_w_fixed_order(w, 2.0 * s, order); }, h);
}

}  // namespace sw::special
