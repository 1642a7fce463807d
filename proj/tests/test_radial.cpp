#include <doctest.h>

#include <cmath>

#include "support/oracles.hpp"
#include "sw/quadrature/quadrature.hpp"
#include "sw/radial/residuals.hpp"

using namespace sw;
using namespace sw::radial;
using doctest::Approx;

namespace {

RadialModel model(int m0, double h1 = 1.0, double h2 = 1.0) { return RadialModel({5, -1}, {h1, h2, m0}); }

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

}  // namespace

TEST_CASE("parameter validation names the invariant") {
  auto msg = [](RepParams r, CharParams c, Mode m = Mode::strict) -> std::string {
    try {
      validate(r, c, m);
    } catch (const InvalidParameters& e) {
      return e.what();
    }
    return "";
  };
  CHECK(msg({5, -1}, {1, 1, 6}).empty());
  CHECK(msg({5, -1}, {1, 1, -8}).empty());
  CHECK(msg({5, -1}, {1, 1, 5}).find("(m0 + d)/2 integer") != std::string::npos);
  CHECK(msg({5, -1}, {1, 1, 4}).find("|m0| >= d") != std::string::npos);
  CHECK(msg({2, -1}, {1, 1, 3}).find("(lambda1 - 1) + lambda2 > 0") != std::string::npos);
  CHECK(msg({3, -1}, {1, 1, 4}).empty());
  CHECK(msg({5, 1}, {1, 1, 4}).find("lambda2 < 0") != std::string::npos);
  CHECK(msg({1, -3}, {1, 1, 4}).find("lambda1 - 1 > 0") != std::string::npos);
  CHECK(msg({5, -1}, {0.0, 1, 6}).find("h1 > 0") != std::string::npos);
  CHECK(msg({5, -1}, {1, -2, 6}).find("h2 > 0") != std::string::npos);
  CHECK(msg({2, 0}, {1, 1, 2}, Mode::formal).empty());
  CHECK(msg({2, 2}, {1, 1, 2}, Mode::formal).find("d = lambda1 - lambda2 >= 1") != std::string::npos);
  CHECK_THROWS_AS(parse_mode("loose"), InvalidParameters);
  CHECK(RepParams{5, -1}.in_chamber_II());
  CHECK_FALSE(RepParams{2, -1}.in_chamber_II());
}

TEST_CASE("radial point") {
  const CharParams c{2.0, 0.5, 6};
  const RadialPoint p = RadialPoint::at(1.0, 2.0, c);
  CHECK(p.y1 == 2.0);
  CHECK(p.y2 == 2.0);
  CHECK(p.delta == 0.0);
  CHECK(p.near_diagonal());
  const RadialPoint q = RadialPoint::on_diagonal(3.0, c);
  CHECK(q.y1 == Approx(3.0));
  CHECK(q.y2 == Approx(3.0));
  CHECK_THROWS_AS(RadialPoint::at(-1.0, 1.0, c), std::domain_error);
}

TEST_CASE("f_k vanishes on the diagonal when |m0| > d") {
  const RadialModel m = model(8);
  const RadialPoint p = m.point(1.0, 1.0);
  for (int k = 0; k <= m.d(); ++k) CHECK(m.f_k(k, p).value == 0.0);
}

TEST_CASE("f_k on the diagonal when |m0| = d") {
  const RadialModel m = model(6);
  const RadialPoint p = RadialPoint::on_diagonal(1.0, m.chr());
  const double F = special::eval_F(m.profile(), 2 * M_PI);
  for (int k = 0; k <= 6; ++k) {
    const double b = quad::beta_value(HalfInt::from_twice(2 * k + 1), HalfInt::from_twice(13 - 2 * k)).value();
    CHECK(m.f_k(k, p).value == Approx(F * b).epsilon(1e-8));
  }
}

TEST_CASE("f_k against the adaptive oracle and pinned values") {
  const RadialModel m = model(6);
  const RadialPoint p = m.point(1.0, 0.7);
  for (int k = 0; k <= 6; ++k) {
    const double o = oracle::f_k(5, -1, 6, 1, 1, k, 1.0, 0.7);
    CAPTURE(k);
    CHECK(rel(m.f_k(k, p).value, o) <= 1e-8);
  }
  CHECK(m.f_k(0, p).value == Approx(7.154718113667914e-07).epsilon(1e-10));
  CHECK(m.f_k(3, p).value == Approx(1.6250807695052321e-08).epsilon(1e-10));
  CHECK(model(8).f_k(2, p).value == Approx(4.0799631757546892e-11).epsilon(1e-10));
}

TEST_CASE("error estimate is small and non-negative") {
  const RadialModel m = model(8, 2.0, 0.5);
  const Estimate e = m.f_k(3, m.point(0.8, 1.7));
  CHECK(e.error >= 0.0);
  CHECK(e.error <= 1e-8 * std::abs(e.value));
}

TEST_CASE("g_j is the exact row times the f vector") {
  const RadialModel m = model(6);
  const RadialPoint p = m.point(1.0, 0.7);
  std::vector<double> f;
  for (int k = 0; k <= 6; ++k) f.push_back(oracle::f_k(5, -1, 6, 1, 1, k, 1.0, 0.7));
  for (int j = 0; j <= 6; ++j) {
    double ref = 0.0;
    for (int k = 0; k <= 6; ++k) ref += m.z_exact().at(j, k).get_d() * f[static_cast<size_t>(k)];
    const EpsValue g = m.g_j(j, p);
    CHECK(g.eps_exponent == j);
    CHECK(g.real.value == Approx(ref).epsilon(1e-8));
  }
  // Row 0 only involves k with 2k <= d.
  for (int k = 4; k <= 6; ++k) CHECK(m.z(0, k) == 0.0);
}

TEST_CASE("phi component is the product of its three factors") {
  const RadialModel m = model(6);
  const RadialPoint p = m.point(1.0, 0.7);
  const double y1 = 1.0, y2 = 0.49;
  const double pre = std::pow(std::sqrt(y1), 5) * std::pow(std::sqrt(y2), -1) * std::exp(-2 * M_PI * (y1 + y2));
  CHECK(m.phi_component(0, p).real.value == Approx(pre * m.g_j(0, p).real.value).epsilon(1e-13));
  for (int j = 0; j <= 6; ++j) CHECK(m.phi_component(j, p).real.value != 0.0);
}

TEST_CASE("phi decays rapidly along a1 = a2") {
  const RadialModel m = model(6);
  for (int j = 0; j <= 6; ++j) {
    const double v2 = std::abs(m.phi_component(j, m.point(2, 2)).real.value);
    const double v3 = std::abs(m.phi_component(j, m.point(3, 3)).real.value);
    CHECK(v3 / v2 < 1e-10);
  }
}

TEST_CASE("analytic radial derivatives match finite differences") {
  for (int m0 : {6, 8}) {
    const RadialModel m = model(m0);
    const double a1 = 1.0, a2 = 0.7, h = 1e-3;
    for (int k = 0; k <= 6; ++k) {
      auto along1 = [&](double s) { return m.f_k(k, m.point(a1 * std::exp(s), a2), 1e-13).value; };
      auto along2 = [&](double s) { return m.f_k(k, m.point(a1, a2 * std::exp(s)), 1e-13).value; };
      auto fd = [&](auto&& f) { return (f(-2 * h) - 8 * f(-h) + 8 * f(h) - f(2 * h)) / (12 * h); };
      const RadialPoint p = m.point(a1, a2);
      CAPTURE(m0);
      CAPTURE(k);
      CHECK(rel(m.radial_derivative_f_k(1, k, p).value, fd(along1)) <= 1e-6);
      CHECK(rel(m.radial_derivative_f_k(2, k, p).value, fd(along2)) <= 1e-6);
    }
  }
  CHECK_THROWS_AS(model(6).radial_derivative_f_k(3, 0, model(6).point(1, 0.7)), std::invalid_argument);
}

TEST_CASE("derivative relations between neighbouring f_k") {
  for (int m0 : {6, 8}) {
    const RadialModel m = model(m0);
    const DerivativeRelations r = derivative_relations(m, m.point(1.0, 0.7));
    CHECK(r.max_first <= 1e-7);
    CHECK(r.max_second <= 1e-7);
  }
}

TEST_CASE("first-order system vanishes for g_j") {
  for (int m0 : {6, 8, -6}) {
    const RadialModel m = model(m0);
    const SystemReport r = residual_system(m, m.point(1.0, 0.7));
    CAPTURE(m0);
    CHECK(r.max_m1 <= 1e-6);
    CHECK(r.max_m2 <= 1e-6);
    CHECK(r.max_m3 <= 1e-5);
    CHECK(r.max_omega <= 1e-4);
    CHECK(r.system.m1.size() == 7);
    CHECK(r.omega.size() == 7);
  }
}

TEST_CASE("the system detects a wrong combination") {
  const RadialModel m = model(6);
  const SystemReport r = residual_system(m, m.point(1.0, 0.7), 1e-10, Combination::identity);
  CHECK(r.max_m1 >= 1e-2);
}

TEST_CASE("the system refuses points on the diagonal") {
  const RadialModel m = model(6);
  CHECK_THROWS_AS(residual_system(m, m.point(1.0, 1.0)), std::domain_error);
  CHECK_THROWS_AS(residual_M6(m, 0, m.point(1.0, 1.0 + 1e-10)), std::domain_error);
}

TEST_CASE("second-order operator: both variants measured") {
  const RadialModel m = model(6);
  const RadialPoint p = m.point(1.0, 0.7);
  const auto prop = omega_on_basis(m, p, 1e-10, OmegaVariant::standard);
  const auto extra = omega_on_basis(m, p, 1e-10, OmegaVariant::extra_d2);
  double worst_prop = 0.0, best_extra = 1.0;
  for (size_t k = 0; k < prop.size(); ++k) {
    worst_prop = std::max(worst_prop, prop[k]);
    best_extra = std::min(best_extra, extra[k]);
  }
  CHECK(worst_prop <= 1e-4);
  CHECK(best_extra >= 1e-2);  // the variant with the extra d2 does not annihilate f_k
  for (int j = 0; j <= 6; ++j) CHECK(residual_M6(m, j, p) <= 1e-4);
  CHECK(parse_omega_variant("extra_d2") == OmegaVariant::extra_d2);
}

TEST_CASE("M6 on a single f_k equals the Omega residual") {
  const RadialModel m = model(8);
  const RadialPoint p = m.point(1.3, 0.6);
  const StencilBasis sb = stencil_basis(m, p, 1e-10);
  const auto om = omega_on_basis(m, sb, OmegaVariant::standard);
  for (int k = 0; k <= 6; ++k) {
    std::vector<double> e(7, 0.0);
    e[static_cast<size_t>(k)] = 1.0;
    CHECK(apply_omega(sb.combine(e), p.y1, p.y2, -1, sb.h, OmegaVariant::standard) == om[static_cast<size_t>(k)]);
  }
}

TEST_CASE("the operator detects a non-solution") {
  const CharParams c{1, 1, 6};
  auto exp_y1 = [&](double a1, double a2) {
    const RadialPoint p = RadialPoint::at(a1, a2, c);
    const double u = std::exp(p.y1);
    return FirstDerivs{u, 2 * p.y1 * u, 0.0};
  };
  const DiagonalStencil s = sample_stencil(exp_y1, 1.0, 0.7, kStencilStep);
  CHECK(apply_omega(s, 1.0, 0.49, -1, kStencilStep, OmegaVariant::standard) >= 1e-2);
}

TEST_CASE("restriction identities at |m0| = d") {
  const RadialModel m = model(6);
  for (int j : {0, 3, 6}) {
    const RestrictionReport r = restriction_identity(m, j, 1.0);
    CHECK(r.eps_exponent == j);
    CHECK(r.value.rel_err <= 1e-7);
    CHECK(r.derivative.rel_err <= 1e-7);
  }
  CHECK_THROWS_AS(restriction_identity(model(8), 0, 1.0), std::domain_error);
}

TEST_CASE("exact Beta sum behind the restriction identity") {
  const quad::ExactBeta s = restriction_beta_sum(2, 0);
  CHECK(s.times_pi);
  CHECK(s.coeff == mpq_class(1, 4));
  for (int d = 1; d <= 8; ++d)
    for (int j = 0; j <= d; ++j) CHECK(restriction_beta_sum(d, j).coeff == mpq_class(mpz_class(1), mpz_class(1) << d));
}

TEST_CASE("f_k is smooth across the diagonal") {
  const RadialModel m = model(8);
  const RadialModel m6 = model(6);
  const double eps = 1e-6;
  for (int k = 0; k <= 6; ++k) {
    // |m0| = d: no delta factor, the values are continuous.
    const double a = m6.f_k(k, m6.point(std::sqrt(1 + eps), 1.0)).value;
    const double b = m6.f_k(k, m6.point(std::sqrt(1 - eps), 1.0)).value;
    CHECK(std::abs(a - b) <= 1e-5 * std::abs(a));
    // |m0| > d: f_k = delta * (smooth); compare against the scale without the delta factor.
    const double c = m.f_k(k, m.point(std::sqrt(1 + eps), 1.0)).value;
    const double e = m.f_k(k, m.point(std::sqrt(1 - eps), 1.0)).value;
    const double scale = std::abs(c) / eps;
    CHECK(std::abs(c - e) <= 1e-5 * scale);
    CHECK(std::abs(c + e) <= 1e-5 * scale);  // odd in delta to first order
  }
}

TEST_CASE("only y1, y2 matter") {
  const double c = 1.7;
  const RadialModel a({5, -1}, {2.0, 0.5, 8});
  const RadialModel b({5, -1}, {2.0 / (c * c), 0.5 / (c * c), 8});
  const RadialPoint pa = a.point(0.8, 1.4);
  const RadialPoint pb = b.point(0.8 * c, 1.4 * c);
  for (int k = 0; k <= 6; ++k) CHECK(rel(a.f_k(k, pa).value, b.f_k(k, pb).value) <= 1e-12);
  for (int j = 0; j <= 6; ++j) CHECK(rel(a.g_j(j, pa).real.value, b.g_j(j, pb).real.value) <= 1e-12);
}
