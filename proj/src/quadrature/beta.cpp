#include <cmath>
#include <stdexcept>

#include "sw/quadrature/quadrature.hpp"
#include "sw/special/gamma.hpp"

namespace sw::quad {

ExactBeta beta_value(HalfInt alpha, HalfInt beta) {
  if (alpha.twice() <= 0 || beta.twice() <= 0) throw std::domain_error("beta_value needs positive arguments");
  const special::ExactGamma ga = special::gamma_half_integer(alpha);
  const special::ExactGamma gb = special::gamma_half_integer(beta);
  const special::ExactGamma gs = special::gamma_half_integer(alpha + beta);
  // sqrt(pi) powers: numerator has ga.sqrt_pi + gb.sqrt_pi, denominator gs.sqrt_pi;
  // the sum's parity equals the denominator's, so the net power is 0 or 2.
  ExactBeta r;
  r.coeff = ga.coeff * gb.coeff / gs.coeff;
  r.times_pi = ga.sqrt_pi && gb.sqrt_pi;
  return r;
}

double beta_numeric(double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta > 0.0)) throw std::domain_error("beta_numeric needs positive arguments");
  return std::exp(std::lgamma(alpha) + std::lgamma(beta) - std::lgamma(alpha + beta));
}

double beta_best(double alpha, double beta) {
  const double ta = 2.0 * alpha, tb = 2.0 * beta;
  if (ta == std::round(ta) && tb == std::round(tb) && ta < 400 && tb < 400) {
    return beta_value(HalfInt::from_twice(static_cast<int>(ta)), HalfInt::from_twice(static_cast<int>(tb))).value();
  }
  return beta_numeric(alpha, beta);
}

}  // namespace sw::quad
