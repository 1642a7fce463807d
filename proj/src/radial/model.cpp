#include "sw/radial/model.hpp"

#include <cmath>

#include "sw/quadrature/quadrature.hpp"

namespace sw::radial {

FirstDerivs BasisValues::combine(const std::vector<double>& c) const {
  FirstDerivs r;
  for (size_t k = 0; k < c.size() && k < f.size(); ++k) {
    if (c[k] == 0.0) continue;
    r.u += c[k] * f[k].u;
    r.d1 += c[k] * f[k].d1;
    r.d2 += c[k] * f[k].d2;
  }
  return r;
}

double BasisValues::combine_error(const std::vector<double>& c) const {
  double e = 0.0;
  for (size_t k = 0; k < c.size() && k < err.size(); ++k) e += std::abs(c[k]) * err[k];
  return e;
}

RadialModel::RadialModel(const RepParams& rep, const CharParams& ch, Mode mode)
    : rep_(rep), ch_(ch), mode_(mode) {
  validate(rep_, ch_, mode_);
  profile_ = special::ProfileParams::from_representation(rep_.lambda1, rep_.lambda2, ch_.t());
  z_exact_ = exact::build_numeric_matrix(rep_.d(), ch_.t(), exact::Variant::Z);
  const int d = rep_.d();
  z_rows_.assign(static_cast<size_t>(d + 1), std::vector<double>(static_cast<size_t>(d + 1), 0.0));
  for (int j = 0; j <= d; ++j)
    for (int k = 0; k <= d; ++k) z_rows_[static_cast<size_t>(j)][static_cast<size_t>(k)] = z_exact_.at(j, k).get_d();
}

double RadialModel::z(int j, int k) const {
  if (j < 0 || k < 0 || j > d() || k > d()) return 0.0;
  return z_rows_[static_cast<size_t>(j)][static_cast<size_t>(k)];
}

FirstDerivs RadialModel::f_k_with_derivs(int k, const RadialPoint& p, double tol, double* err) const {
  if (k < 0 || k > d()) throw std::out_of_range("f_k: k out of range");
  const double y1 = p.y1;
  const double y2 = p.y2;
  const double two_pi = 2.0 * M_PI;
  // The inner F evaluation gets a slightly tighter tolerance than the outer rule.
  const double inner_tol = std::max(tol * 0.1, 1e-15);
  auto integrand = [&](double s) {
    const double x = two_pi * (y1 * s + y2 * (1.0 - s));
    const special::ProfileValue pv = special::eval_profile(profile_, x, inner_tol);
    return std::array<double, 3>{pv.f.value, pv.df.value * s, pv.df.value * (1.0 - s)};
  };
  const auto est = quad::integrate_weighted_vec<3>(integrand, alpha(k), beta(k), tol);
  const double I = est.value[0];

  const int nn = n();
  const double P = std::exp((k + 0.5) * std::log(y1) + (d() - k + 0.5) * std::log(y2));
  const double Q = nn == 0 ? 1.0 : std::pow(p.delta, nn);
  FirstDerivs r;
  r.u = P * Q * I;
  r.d1 = (2 * k + 1) * r.u + P * Q * 4.0 * M_PI * y1 * est.value[1];
  r.d2 = (2 * d() - 2 * k + 1) * r.u + P * Q * 4.0 * M_PI * y2 * est.value[2];
  if (nn > 0) {
    const double Qm = nn == 1 ? 1.0 : std::pow(p.delta, nn - 1);
    r.d1 += P * 2.0 * nn * y1 * Qm * I;
    r.d2 -= P * 2.0 * nn * y2 * Qm * I;
  }
  if (err) *err = std::abs(P * Q) * (est.error[0] + inner_tol * std::abs(I));
  return r;
}

Estimate RadialModel::f_k(int k, const RadialPoint& p, double tol) const {
  double e = 0.0;
  const FirstDerivs r = f_k_with_derivs(k, p, tol, &e);
  return {r.u, e};
}

Estimate RadialModel::radial_derivative_f_k(int dir, int k, const RadialPoint& p, double tol) const {
  if (dir != 1 && dir != 2) throw std::invalid_argument("derivative direction must be 1 or 2");
  double e = 0.0;
  const FirstDerivs r = f_k_with_derivs(k, p, tol, &e);
  const double v = dir == 1 ? r.d1 : r.d2;
  // Same relative accuracy as the value.
  const double rel = r.u != 0.0 ? e / std::abs(r.u) : tol;
  return {v, std::abs(v) * rel + tol * std::abs(r.u)};
}

BasisValues RadialModel::basis(const RadialPoint& p, double tol) const {
  BasisValues b;
  b.f.resize(static_cast<size_t>(d() + 1));
  b.err.resize(static_cast<size_t>(d() + 1));
  for (int k = 0; k <= d(); ++k) b.f[static_cast<size_t>(k)] = f_k_with_derivs(k, p, tol, &b.err[static_cast<size_t>(k)]);
  return b;
}

EpsValue RadialModel::g_j(int j, const RadialPoint& p, double tol) const {
  if (j < 0 || j > d()) throw std::out_of_range("g_j: j out of range");
  EpsValue r;
  r.eps_exponent = j;
  for (int k = 0; k <= d(); ++k) {
    const double c = z(j, k);
    if (c == 0.0) continue;
    const Estimate fk = f_k(k, p, tol);
    r.real.value += c * fk.value;
    r.real.error += std::abs(c) * fk.error;
  }
  return r;
}

double RadialModel::phi_prefactor(int j, const RadialPoint& p) const {
  const double l = 0.5 * (rep_.lambda1 - j) * std::log(p.y1) + 0.5 * (rep_.lambda2 + j) * std::log(p.y2) -
                   2.0 * M_PI * (p.y1 + p.y2);
  return std::exp(l);
}

EpsValue RadialModel::phi_component(int j, const RadialPoint& p, double tol) const {
  EpsValue g = g_j(j, p, tol);
  const double pre = phi_prefactor(j, p);
  g.real.value *= pre;
  g.real.error *= pre;
  return g;
}

}  // namespace sw::radial
