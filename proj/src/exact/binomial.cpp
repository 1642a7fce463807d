#include "sw/exact/binomial.hpp"

#include <stdexcept>

#include "sw/exact/coefficients.hpp"

namespace sw::exact {

mpz_class s_dj(int d, int j) {
  if (d < 0 || j < 0 || j > d) throw std::domain_error("s_dj requires 0 <= j <= d");
  mpz_class sum = 0;
  for (int k = 0; k <= d; ++k) {
    mpz_class term = binomial(2L * k, j) * binomial(2L * d - 2L * k, d - j) * binomial(d, k);
    if (k % 2) sum -= term; else sum += term;
  }
  return sum;
}

mpz_class s_dj_closed_form(int d, int j) {
  mpz_class p2;
  mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(d));
  mpz_class v = p2 * binomial(d, j);
  return j % 2 ? mpz_class(-v) : v;
}

}  // namespace sw::exact
