#pragma once

#include <gmpxx.h>

#include <cmath>

#include "sw/half_int.hpp"

namespace sw::special {

/// Gamma at a positive half-integer: coeff, or coeff * sqrt(pi) for half-odd arguments.
struct ExactGamma {
  mpq_class coeff;
  bool sqrt_pi = false;
  double value() const { return coeff.get_d() * (sqrt_pi ? std::sqrt(M_PI) : 1.0); }
  friend bool operator==(const ExactGamma&, const ExactGamma&) = default;
};

/// Gamma(k) = (k-1)!, Gamma(k + 1/2) = sqrt(pi) (2k)! / (4^k k!).
/// Throws std::domain_error for non-positive arguments.
ExactGamma gamma_half_integer(HalfInt n);

}  // namespace sw::special
