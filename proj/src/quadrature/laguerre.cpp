#include <Eigen/Eigenvalues>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "sw/quadrature/quadrature.hpp"

namespace sw::quad {

// Golub-Welsch: eigen-decomposition of the Jacobi matrix of the generalized
// Laguerre polynomials L_n^{(a-1)}.
LaguerreRule gauss_laguerre_rule(int n, double a) {
  if (n < 1) throw std::domain_error("Gauss-Laguerre order must be >= 1");
  if (!(a > 0.0)) throw std::domain_error("Gauss-Laguerre needs a > 0");
  const double alpha = a - 1.0;
  Eigen::VectorXd diag(n), sub(std::max(n - 1, 1));
  for (int i = 0; i < n; ++i) diag(i) = 2.0 * i + alpha + 1.0;
  for (int i = 1; i < n; ++i) sub(i - 1) = std::sqrt(i * (i + alpha));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw std::runtime_error("Gauss-Laguerre eigen-solve failed");

  const double mu0 = std::tgamma(a);
  LaguerreRule rule;
  rule.a = a;
  rule.nodes.resize(static_cast<size_t>(n));
  rule.weights.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double v0 = solver.eigenvectors()(0, i);
    rule.nodes[static_cast<size_t>(i)] = solver.eigenvalues()(i);
    rule.weights[static_cast<size_t>(i)] = mu0 * v0 * v0;
  }
  return rule;
}

std::shared_ptr<const LaguerreRule> cached_laguerre(int n, double a) {
  static std::mutex mu;
  static std::map<std::pair<int, double>, std::shared_ptr<const LaguerreRule>> cache;
  const auto key = std::make_pair(n, a);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto rule = std::make_shared<const LaguerreRule>(gauss_laguerre_rule(n, a));
  std::lock_guard<std::mutex> lock(mu);
  return cache.insert_or_assign(key, rule).first->second;
}

std::shared_ptr<const LaguerreRule> graded_laguerre_rule(int n, double a, double scale) {
  if (!(scale > 0.0)) throw std::domain_error("graded Gauss-Laguerre needs scale > 0");
  if (!(a > 0.0)) throw std::domain_error("Gauss-Laguerre needs a > 0");
  auto rule = std::make_shared<LaguerreRule>();
  rule->a = a;
  auto add = [&](double u, double w) {
    rule->nodes.push_back(u);
    rule->weights.push_back(w);
  };
  const double cut = std::max(scale, kGradedCutoff);

  // [0, scale]: u = scale s, weight s^(a-1) from the Jacobi rule.
  const auto head = cached_jacobi(n, a, 1.0);
  const double head_factor = std::pow(scale, a);
  for (int i = 0; i < n; ++i) {
    const double u = scale * head->nodes[static_cast<size_t>(i)];
    add(u, head_factor * head->weights[static_cast<size_t>(i)] * std::exp(-u));
  }

  const auto legendre = cached_jacobi(n, 1.0, 1.0);
  for (double lo = scale; lo < cut;) {
    const double hi = std::min(2.0 * lo, cut);
    for (int i = 0; i < n; ++i) {
      const double u = lo + (hi - lo) * legendre->nodes[static_cast<size_t>(i)];
      add(u, (hi - lo) * legendre->weights[static_cast<size_t>(i)] * std::exp(-u + (a - 1.0) * std::log(u)));
    }
    lo = hi;
  }

  // [cut, inf): u = cut + v against e^(-v).
  const auto tail = cached_laguerre(2 * n, 1.0);
  for (int i = 0; i < tail->order(); ++i) {
    const double u = cut + tail->nodes[static_cast<size_t>(i)];
    add(u, tail->weights[static_cast<size_t>(i)] * std::exp(-cut + (a - 1.0) * std::log(u)));
  }
  return rule;
}

}  // namespace sw::quad
