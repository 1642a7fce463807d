#include "sw/radial/residuals.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sw::radial {

namespace {

double magnitude(const EpsReal& x) { return std::hypot(x.re, x.im); }

EpsReal eps_scaled(int e, double v) { return v * EpsReal::power(e); }

// i m0 c = eps |m0| c
EpsReal times_im0(const EpsReal& x, int abs_m0) { return static_cast<double>(abs_m0) * x.times_eps(); }

void check_off_diagonal(const RadialPoint& p) {
  if (p.near_diagonal()) {
    throw std::domain_error(
        "point is within 1e-8 of the diagonal y1 = y2 where the system has 1/delta coefficients; use "
        "restriction_identity there");
  }
}

double max_of(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, x);
  return m;
}

// 5-point first derivative at the center of samples spaced h apart.
double stencil_derivative(const std::array<double, 5>& w, double h) {
  return (w[0] - 8.0 * w[1] + 8.0 * w[3] - w[4]) / (12.0 * h);
}

}  // namespace

void ResidualSum::add(const EpsReal& term) {
  sum_ += term;
  scale_ += magnitude(term);
}

double ResidualSum::normalized() const { return scale_ == 0.0 ? 0.0 : magnitude(sum_) / scale_; }

double ResidualSum::absolute() const { return magnitude(sum_); }

SystemResiduals first_order_residuals(const std::vector<EpsFunction>& c, int lambda2, int abs_m0, double y1,
                                      double y2) {
  const int d = static_cast<int>(c.size()) - 1;
  const double delta = y1 - y2;
  auto val = [&](int j) {
    if (j < 0 || j > d) return EpsReal{};
    return eps_scaled(c[static_cast<size_t>(j)].eps_exponent, c[static_cast<size_t>(j)].value.u);
  };
  auto der1 = [&](int j) {
    if (j < 0 || j > d) return EpsReal{};
    return eps_scaled(c[static_cast<size_t>(j)].eps_exponent, c[static_cast<size_t>(j)].value.d1);
  };
  auto der2 = [&](int j) {
    if (j < 0 || j > d) return EpsReal{};
    return eps_scaled(c[static_cast<size_t>(j)].eps_exponent, c[static_cast<size_t>(j)].value.d2);
  };
  const double r2 = y2 / delta;
  const double r1 = y1 / delta;
  const double shift = 2.0 * lambda2 - 2.0;

  SystemResiduals out;
  out.m1.assign(static_cast<size_t>(d + 1), 0.0);
  out.m2.assign(static_cast<size_t>(d + 1), 0.0);
  out.m3.assign(static_cast<size_t>(d + 1), 0.0);

  for (int j = 1; j <= d; ++j) {
    ResidualSum s;
    s.add(der1(j - 1));
    s.add((j * r2) * val(j - 1));
    s.add(r2 * times_im0(val(j), abs_m0));
    s.add((-(d - j) * r2) * val(j + 1));
    out.m1[static_cast<size_t>(j)] = s.normalized();
  }
  for (int j = 0; j <= d - 1; ++j) {
    ResidualSum s;
    s.add((j * r1) * val(j - 1));
    s.add(r1 * times_im0(val(j), abs_m0));
    s.add(der2(j + 1));
    s.add((-(d - j) * r1) * val(j + 1));
    out.m2[static_cast<size_t>(j)] = s.normalized();
  }
  for (int j = 1; j <= d - 1; ++j) {
    ResidualSum s;
    s.add(y1 * der2(j - 1));
    s.add((-8.0 * M_PI * y1 * y2) * val(j - 1));
    s.add((-2.0 * j * y1 * r2) * val(j - 1));
    s.add((shift * y1) * val(j - 1));
    s.add((-2.0 * y1 * r2) * times_im0(val(j), abs_m0));
    s.add(y2 * der1(j + 1));
    s.add((-8.0 * M_PI * y1 * y2) * val(j + 1));
    s.add((2.0 * (d - j) * y2 * r1) * val(j + 1));
    s.add((shift * y2) * val(j + 1));
    out.m3[static_cast<size_t>(j)] = s.normalized();
  }
  return out;
}

std::string to_string(OmegaVariant v) { return v == OmegaVariant::standard ? "standard" : "extra_d2"; }

OmegaVariant parse_omega_variant(const std::string& s) {
  if (s == "standard") return OmegaVariant::standard;
  if (s == "extra_d2") return OmegaVariant::extra_d2;
  throw std::invalid_argument("operator variant must be standard or extra_d2, got '" + s + "'");
}

double apply_omega(const DiagonalStencil& u, double y1, double y2, int lambda2, double h, OmegaVariant variant) {
  std::array<double, 5> sum_d{};
  std::array<double, 5> d2{};
  for (size_t i = 0; i < 5; ++i) {
    sum_d[i] = u[i].d1 + u[i].d2;
    d2[i] = u[i].d2;
  }
  const FirstDerivs& c = u[2];
  ResidualSum s;
  s.add(stencil_derivative(sum_d, h));
  if (variant == OmegaVariant::standard) {
    s.add(2.0 * (lambda2 - 2) * sum_d[2]);
  } else {
    s.add(2.0 * (lambda2 - 2) * stencil_derivative(d2, h));
  }
  s.add(-8.0 * M_PI * y1 * c.d1);
  s.add(-8.0 * M_PI * y2 * c.d2);
  s.add(-4.0 * (lambda2 - 1) * c.u);
  return s.normalized();
}

DiagonalStencil sample_stencil(const std::function<FirstDerivs(double, double)>& fn, double a1, double a2,
                               double h) {
  DiagonalStencil out;
  for (int i = 0; i < 5; ++i) {
    const double e = std::exp((i - 2) * h);
    out[static_cast<size_t>(i)] = fn(a1 * e, a2 * e);
  }
  return out;
}

DiagonalStencil StencilBasis::combine(const std::vector<double>& c) const {
  DiagonalStencil out;
  for (size_t i = 0; i < 5; ++i) out[i] = at[i].combine(c);
  return out;
}

StencilBasis stencil_basis(const RadialModel& m, const RadialPoint& p, double tol, double h) {
  StencilBasis sb;
  sb.center = p;
  sb.h = h;
  for (int i = 0; i < 5; ++i) sb.at[static_cast<size_t>(i)] = m.basis(p.scaled((i - 2) * h, m.chr()), tol);
  return sb;
}

namespace {

std::vector<double> unit(int d, int k) {
  std::vector<double> e(static_cast<size_t>(d + 1), 0.0);
  e[static_cast<size_t>(k)] = 1.0;
  return e;
}

std::vector<double> omega_from_stencil(const RadialModel& m, const StencilBasis& sb, OmegaVariant variant) {
  std::vector<double> out;
  for (int k = 0; k <= m.d(); ++k) {
    out.push_back(apply_omega(sb.combine(unit(m.d(), k)), sb.center.y1, sb.center.y2, m.rep().lambda2, sb.h,
                              variant));
  }
  return out;
}

std::vector<double> m6_from_stencil(const RadialModel& m, const StencilBasis& sb, OmegaVariant variant) {
  std::vector<double> out;
  for (int j = 0; j <= m.d(); ++j) {
    out.push_back(
        apply_omega(sb.combine(m.z_row(j)), sb.center.y1, sb.center.y2, m.rep().lambda2, sb.h, variant));
  }
  return out;
}

}  // namespace

SystemReport residual_system(const RadialModel& m, const RadialPoint& p, double tol, Combination comb,
                             OmegaVariant variant) {
  check_off_diagonal(p);
  return residual_system(m, stencil_basis(m, p, tol), comb, variant);
}

SystemReport residual_system(const RadialModel& m, const StencilBasis& sb, Combination comb, OmegaVariant variant) {
  const RadialPoint& p = sb.center;
  check_off_diagonal(p);
  const BasisValues& b = sb.at[2];
  std::vector<EpsFunction> c(static_cast<size_t>(m.d() + 1));
  for (int j = 0; j <= m.d(); ++j) {
    c[static_cast<size_t>(j)].eps_exponent = j;
    c[static_cast<size_t>(j)].value =
        comb == Combination::solution ? b.combine(m.z_row(j)) : b.f[static_cast<size_t>(j)];
  }
  SystemReport r;
  r.system = first_order_residuals(c, m.rep().lambda2, m.t(), p.y1, p.y2);
  r.omega = omega_from_stencil(m, sb, variant);
  r.max_m1 = max_of(r.system.m1);
  r.max_m2 = max_of(r.system.m2);
  r.max_m3 = max_of(r.system.m3);
  r.max_omega = max_of(r.omega);
  return r;
}

std::vector<double> residual_M6_all(const RadialModel& m, const RadialPoint& p, double tol, OmegaVariant variant) {
  check_off_diagonal(p);
  return m6_from_stencil(m, stencil_basis(m, p, tol), variant);
}

double residual_M6(const RadialModel& m, int j, const RadialPoint& p, double tol, OmegaVariant variant) {
  if (j < 0 || j > m.d()) throw std::out_of_range("residual_M6: j out of range");
  check_off_diagonal(p);
  const StencilBasis sb = stencil_basis(m, p, tol);
  return apply_omega(sb.combine(m.z_row(j)), p.y1, p.y2, m.rep().lambda2, sb.h, variant);
}

std::vector<double> omega_on_basis(const RadialModel& m, const RadialPoint& p, double tol, OmegaVariant variant) {
  return omega_from_stencil(m, stencil_basis(m, p, tol), variant);
}

std::vector<double> omega_on_basis(const RadialModel& m, const StencilBasis& sb, OmegaVariant variant) {
  return omega_from_stencil(m, sb, variant);
}

DerivativeRelations derivative_relations(const RadialModel& m, const RadialPoint& p, double tol) {
  check_off_diagonal(p);
  const int d = m.d();
  const int t = m.t();
  const BasisValues b = m.basis(p, tol);
  const double r2 = p.y2 / p.delta;
  const double r1 = p.y1 / p.delta;
  auto f = [&](int k) { return b.f[static_cast<size_t>(k)]; };
  DerivativeRelations out;
  out.first.assign(static_cast<size_t>(d + 1), 0.0);
  out.second.assign(static_cast<size_t>(d + 1), 0.0);
  for (int k = 0; k <= d - 1; ++k) {
    ResidualSum s;
    s.add(f(k).d1);
    s.add((2 * k + 1) * r2 * f(k).u);
    s.add(-(t + d - 1 - 2 * k) * r2 * f(k + 1).u);
    out.first[static_cast<size_t>(k)] = s.normalized();
  }
  for (int k = 1; k <= d; ++k) {
    ResidualSum s;
    s.add(f(k).d2);
    s.add(-(2 * d - 2 * k + 1) * r1 * f(k).u);
    s.add((t - d - 1 + 2 * k) * r1 * f(k - 1).u);
    out.second[static_cast<size_t>(k)] = s.normalized();
  }
  out.max_first = max_of(out.first);
  out.max_second = max_of(out.second);
  return out;
}

RestrictionReport restriction_identity(const RadialModel& m, int j, double y, double tol) {
  if (m.t() != m.d()) throw std::domain_error("restriction identity needs |m0| = d");
  if (j < 0 || j > m.d()) throw std::out_of_range("restriction_identity: j out of range");
  const RadialPoint p = RadialPoint::on_diagonal(y, m.chr());
  const BasisValues b = m.basis(p, tol);
  const FirstDerivs g = b.combine(m.z_row(j));
  const double x = 2.0 * M_PI * y;
  const special::ProfileValue pv = special::eval_profile(m.profile(), x, tol);
  const double pre = std::ldexp(M_PI, -m.d()) * std::pow(y, m.d() + 1);
  RestrictionReport r;
  r.j = j;
  r.eps_exponent = j;
  r.y = y;
  r.value = {g.u, pre * pv.f.value, 0.0};
  r.derivative = {g.d1 + g.d2, pre * (2.0 * x * pv.df.value + m.profile().shift_const * pv.f.value), 0.0};
  for (Comparison* c : {&r.value, &r.derivative}) c->rel_err = std::abs(c->lhs - c->rhs) / std::abs(c->rhs);
  return r;
}

quad::ExactBeta restriction_beta_sum(int d, int j) {
  const exact::NumericMatrix z = exact::build_numeric_matrix(d, d, exact::Variant::Z);
  quad::ExactBeta sum;
  sum.times_pi = true;
  for (int k = 0; k <= d; ++k) {
    const quad::ExactBeta b = quad::beta_value(HalfInt::from_twice(2 * k + 1), HalfInt::from_twice(2 * (d - k) + 1));
    if (!b.times_pi) throw std::logic_error("half-odd beta without pi");
    sum.coeff += z.at(j, k) * b.coeff;
  }
  sum.coeff.canonicalize();
  return sum;
}

}  // namespace sw::radial
