#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "sw/quadrature/quadrature.hpp"

namespace sw::quad {

namespace {

struct JacobiValue {
  double p;   // P_n(x)
  double dp;  // P_n'(x)
};

// P_n^{(a,b)}(x) and its derivative by the three-term recurrence.
JacobiValue jacobi_eval(int n, double a, double b, double x) {
  double p0 = 1.0;
  double p1 = 0.5 * ((a + b + 2.0) * x + (a - b));
  if (n == 0) return {1.0, 0.0};
  for (int k = 2; k <= n; ++k) {
    const double s = 2.0 * k + a + b;
    const double c1 = 2.0 * k * (k + a + b) * (s - 2.0);
    const double c2 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b);
    const double c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
    const double p2 = (c2 * p1 - c3 * p0) / c1;
    p0 = p1;
    p1 = p2;
  }
  const double s = 2.0 * n + a + b;
  const double dp = (n * ((a - b) - s * x) * p1 + 2.0 * (n + a) * (n + b) * p0) / (s * (1.0 - x * x));
  return {p1, dp};
}

bool valid_roots(const std::vector<double>& x, int n) {
  if (static_cast<int>(x.size()) != n) return false;
  for (size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > -1.0 && x[i] < 1.0)) return false;
    if (i > 0 && !(x[i] - x[i - 1] > 1e-12)) return false;
  }
  return true;
}

std::vector<double> newton_roots(int n, double a, double b) {
  std::vector<double> roots;
  roots.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const double theta = M_PI * (4.0 * i - 1.0 + 2.0 * a) / (4.0 * n + 2.0 * a + 2.0 * b + 2.0);
    double x = std::cos(theta);
    bool converged = false;
    for (int it = 0; it < 200; ++it) {
      const JacobiValue v = jacobi_eval(n, a, b, x);
      const double step = v.p / v.dp;
      x -= step;
      if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(x))) {
        converged = true;
        break;
      }
    }
    if (!converged) return {};
    roots.push_back(x);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<double> bisection_roots(int n, double a, double b) {
  // Sign changes on a Chebyshev-clustered grid fine enough to separate all roots.
  const int m = 40 * n + 40;
  std::vector<double> roots;
  double x_prev = -1.0 + 1e-15;
  double p_prev = jacobi_eval(n, a, b, x_prev).p;
  for (int i = 1; i <= m; ++i) {
    const double x = (i == m) ? 1.0 - 1e-15 : -std::cos(M_PI * i / m);
    const double p = jacobi_eval(n, a, b, x).p;
    if (p == 0.0) {
      roots.push_back(x);
    } else if ((p_prev < 0) != (p < 0) && p_prev != 0.0) {
      double lo = x_prev, hi = x, plo = p_prev;
      for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double pm = jacobi_eval(n, a, b, mid).p;
        if ((pm < 0) == (plo < 0)) {
          lo = mid;
          plo = pm;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    x_prev = x;
    p_prev = p;
  }
  return roots;
}

}  // namespace

QuadRule gauss_jacobi_rule(int n, double alpha, double beta) {
  if (n < 1) throw std::domain_error("Gauss-Jacobi order must be >= 1");
  if (!(alpha > 0.0) || !(beta > 0.0)) throw std::domain_error("Gauss-Jacobi needs alpha, beta > 0");
  // t in [0,1] <-> x = 2t - 1; t^(alpha-1) pairs with (1+x)^b, (1-t)^(beta-1) with (1-x)^a.
  const double a = beta - 1.0;
  const double b = alpha - 1.0;

  std::vector<double> x = newton_roots(n, a, b);
  if (!valid_roots(x, n)) x = bisection_roots(n, a, b);
  if (!valid_roots(x, n)) {
    throw std::runtime_error("Gauss-Jacobi root finding failed (n=" + std::to_string(n) + ")");
  }

  QuadRule rule;
  rule.alpha = alpha;
  rule.beta = beta;
  rule.nodes.resize(static_cast<size_t>(n));
  rule.weights.resize(static_cast<size_t>(n));
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double xi = x[static_cast<size_t>(i)];
    const double dp = jacobi_eval(n, a, b, xi).dp;
    const double w = 1.0 / ((1.0 - xi * xi) * dp * dp);
    rule.nodes[static_cast<size_t>(i)] = 0.5 * (1.0 + xi);
    rule.weights[static_cast<size_t>(i)] = w;
    sum += w;
  }
  const double scale = beta_best(alpha, beta) / sum;
  for (auto& w : rule.weights) w *= scale;
  return rule;
}

std::shared_ptr<const QuadRule> cached_jacobi(int n, double alpha, double beta) {
  static std::mutex mu;
  static std::map<std::tuple<int, double, double>, std::shared_ptr<const QuadRule>> cache;
  const auto key = std::make_tuple(n, alpha, beta);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto rule = std::make_shared<const QuadRule>(gauss_jacobi_rule(n, alpha, beta));
  std::lock_guard<std::mutex> lock(mu);
  return cache.insert_or_assign(key, rule).first->second;
}

Estimate integrate_weighted(const std::function<double(double)>& f, double alpha, double beta, double tol) {
  const VecEstimate<1> r = integrate_weighted_vec<1>(
      [&](double t) { return std::array<double, 1>{f(t)}; }, alpha, beta, tol);
  return {r.value[0], r.error[0]};
}

}  // namespace sw::quad
