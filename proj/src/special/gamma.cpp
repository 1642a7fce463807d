#include "sw/special/gamma.hpp"

#include <stdexcept>

namespace sw::special {

ExactGamma gamma_half_integer(HalfInt n) {
  if (n.twice() <= 0) throw std::domain_error("gamma_half_integer needs a positive argument, got " + n.str());
  ExactGamma g;
  if (n.is_integer()) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n.floor() - 1));
    g.coeff = f;
    return g;
  }
  const unsigned long k = static_cast<unsigned long>(n.floor());  // n = k + 1/2
  mpz_class f2k, fk, four_k;
  mpz_fac_ui(f2k.get_mpz_t(), 2 * k);
  mpz_fac_ui(fk.get_mpz_t(), k);
  mpz_ui_pow_ui(four_k.get_mpz_t(), 4, k);
  g.coeff = mpq_class(f2k, four_k * fk);
  g.coeff.canonicalize();
  g.sqrt_pi = true;
  return g;
}

}  // namespace sw::special
