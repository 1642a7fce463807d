#include <doctest.h>

#include <cmath>

#include "sw/quadrature/quadrature.hpp"
#include "sw/special/gamma.hpp"

using namespace sw;
using namespace sw::quad;
using doctest::Approx;

namespace {

HalfInt h(int twice) { return HalfInt::from_twice(twice); }

void check_rule(const QuadRule& r) {
  const double b = beta_numeric(r.alpha, r.beta);
  double sum = 0.0;
  for (int i = 0; i < r.order(); ++i) {
    CHECK(r.nodes[static_cast<size_t>(i)] > 0.0);
    CHECK(r.nodes[static_cast<size_t>(i)] < 1.0);
    if (i > 0) CHECK(r.nodes[static_cast<size_t>(i)] > r.nodes[static_cast<size_t>(i - 1)]);
    CHECK(r.weights[static_cast<size_t>(i)] > 0.0);
    sum += r.weights[static_cast<size_t>(i)];
  }
  CHECK(sum == Approx(b).epsilon(1e-12));
  // Moments t^m against the weight equal B(alpha + m, beta) for m <= 2n - 1.
  for (int m = 0; m <= 2 * r.order() - 1; ++m) {
    double q = 0.0;
    for (int i = 0; i < r.order(); ++i) q += r.weights[static_cast<size_t>(i)] * std::pow(r.nodes[static_cast<size_t>(i)], m);
    CAPTURE(m);
    CHECK(q == Approx(beta_numeric(r.alpha + m, r.beta)).epsilon(1e-12));
  }
}

}  // namespace

TEST_CASE("gamma at half-integers") {
  using special::gamma_half_integer;
  CHECK(gamma_half_integer(h(2)).coeff == 1);
  CHECK_FALSE(gamma_half_integer(h(2)).sqrt_pi);
  CHECK(gamma_half_integer(h(1)).coeff == 1);
  CHECK(gamma_half_integer(h(1)).sqrt_pi);
  CHECK(gamma_half_integer(h(7)).coeff == mpq_class(15, 8));
  CHECK(gamma_half_integer(h(7)).sqrt_pi);
  CHECK(gamma_half_integer(h(12)).coeff == 120);
  CHECK(gamma_half_integer(h(9)).value() == Approx(std::tgamma(4.5)).epsilon(1e-14));
  CHECK_THROWS_AS(gamma_half_integer(h(0)), std::domain_error);
  CHECK_THROWS_AS(gamma_half_integer(h(-3)), std::domain_error);
}

TEST_CASE("exact beta values") {
  CHECK(beta_value(h(1), h(1)) == ExactBeta{mpq_class(1), true});
  CHECK(beta_value(h(1), h(3)) == ExactBeta{mpq_class(1, 2), true});
  CHECK(beta_value(h(2), h(2)) == ExactBeta{mpq_class(1), false});
  CHECK(beta_value(h(3), h(3)).value() == Approx(M_PI / 8).epsilon(1e-15));
  CHECK(beta_value(h(5), h(4)).value() == Approx(beta_numeric(2.5, 2.0)).epsilon(1e-14));
  CHECK_THROWS_AS(beta_value(h(0), h(1)), std::domain_error);
}

TEST_CASE("small Gauss-Jacobi rules") {
  const QuadRule mid = gauss_jacobi_rule(1, 1.0, 1.0);
  REQUIRE(mid.order() == 1);
  CHECK(mid.nodes[0] == Approx(0.5).epsilon(1e-15));
  CHECK(mid.weights[0] == Approx(1.0).epsilon(1e-15));

  const QuadRule cheb = gauss_jacobi_rule(4, 0.5, 0.5);
  double sum = 0.0;
  for (double w : cheb.weights) sum += w;
  CHECK(sum == Approx(M_PI).epsilon(1e-12));
}

TEST_CASE("rule invariants across the parameter range used by f_k") {
  check_rule(gauss_jacobi_rule(3, 1.5, 2.5));
  for (int n : {2, 5, 16, 32})
    for (double a : {0.5, 1.0, 3.5, 7.5})
      for (double b : {0.5, 2.0, 6.5, 12.5}) {
        CAPTURE(n);
        CAPTURE(a);
        CAPTURE(b);
        const QuadRule r = gauss_jacobi_rule(n, a, b);
        REQUIRE(r.order() == n);
        if (n <= 16) check_rule(r);
      }
}

TEST_CASE("large-order rules keep interior, increasing nodes") {
  const QuadRule r = gauss_jacobi_rule(512, 0.5, 6.5);
  double sum = 0.0;
  for (int i = 0; i < r.order(); ++i) {
    CHECK(r.weights[static_cast<size_t>(i)] > 0.0);
    if (i > 0) CHECK(r.nodes[static_cast<size_t>(i)] > r.nodes[static_cast<size_t>(i - 1)]);
    sum += r.weights[static_cast<size_t>(i)];
  }
  CHECK(sum == Approx(beta_numeric(0.5, 6.5)).epsilon(1e-12));
}

TEST_CASE("integrate_weighted") {
  const Estimate one = integrate_weighted([](double) { return 1.0; }, 2.5, 1.5);
  CHECK(one.value == Approx(beta_numeric(2.5, 1.5)).epsilon(1e-13));
  const Estimate e = integrate_weighted([](double t) { return std::exp(t); }, 1.0, 1.0, 1e-13);
  CHECK(e.value == Approx(M_E - 1.0).epsilon(1e-12));
  CHECK(std::abs(e.value - (M_E - 1.0)) <= std::max(e.error, 1e-15) * 10);
  const Estimate b = integrate_weighted([](double t) { return t * (1.0 - t); }, 0.5, 0.5);
  CHECK(b.value == Approx(M_PI / 8).epsilon(1e-13));
}

TEST_CASE("integrate_weighted reports non-convergence") {
  auto rough = [](double t) { return t < 1.0 / 3.0 ? 1.0 : -1.0; };
  CHECK_THROWS_AS(integrate_weighted(rough, 1.0, 1.0, 1e-12), AccuracyError);
  try {
    integrate_weighted(rough, 1.0, 1.0, 1e-12);
  } catch (const AccuracyError& e) {
    CHECK(e.achieved_error() >= 0.0);
  }
}

TEST_CASE("Gauss-Laguerre rules") {
  for (double a : {0.5, 1.0, 2.0, 4.5}) {
    const LaguerreRule r = gauss_laguerre_rule(32, a);
    double sum = 0.0, m1 = 0.0;
    for (int i = 0; i < r.order(); ++i) {
      CHECK(r.weights[static_cast<size_t>(i)] >= 0.0);
      sum += r.weights[static_cast<size_t>(i)];
      m1 += r.weights[static_cast<size_t>(i)] * r.nodes[static_cast<size_t>(i)];
    }
    CHECK(sum == Approx(std::tgamma(a)).epsilon(1e-12));
    CHECK(m1 == Approx(std::tgamma(a + 1)).epsilon(1e-12));
  }
}

TEST_CASE("rule cache returns the same shared rule") {
  auto a = cached_jacobi(16, 1.5, 2.5);
  auto b = cached_jacobi(16, 1.5, 2.5);
  CHECK(a.get() == b.get());
  CHECK(cached_laguerre(64, 2.0).get() == cached_laguerre(64, 2.0).get());
}

TEST_CASE("graded Laguerre rule: moments and a near-origin feature") {
  for (double a : {0.5, 1.0, 2.5})
    for (double scale : {1e-3, 0.05, 1.0, 7.9}) {
      const auto r = graded_laguerre_rule(32, a, scale);
      for (int k = 0; k <= 6; ++k) {
        double s = 0.0;
        for (int i = 0; i < r->order(); ++i) s += r->weights[static_cast<size_t>(i)] * std::pow(r->nodes[static_cast<size_t>(i)], k);
        CHECK(s == Approx(std::tgamma(a + k)).epsilon(1e-12));
      }
    }
  // int e^-u / (1 + u/z) du = z e^z E1(z); E1(0.02) from its series.
  const double z = 0.02;
  double e1 = -0.57721566490153286 - std::log(z), term = 1.0;
  for (int n = 1; n < 30; ++n) {
    term *= -z / n;
    e1 -= term / n;
  }
  const auto v = integrate_laguerre_scaled_vec<1>([&](double u) { return std::array<double, 1>{1.0 / (1.0 + u / z)}; },
                                                  1.0, z, 1e-13);
  CHECK(v.value[0] == Approx(z * std::exp(z) * e1).epsilon(1e-12));
  CHECK_THROWS_AS(integrate_laguerre_vec<1>([&](double u) { return std::array<double, 1>{1.0 / (1.0 + u / z)}; }, 1.0,
                                            1e-13),
                  AccuracyError);
}
