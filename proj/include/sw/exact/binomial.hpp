#pragma once

#include <gmpxx.h>

namespace sw::exact {

/// S_{d,j} = sum_{k=0}^{d} (-1)^k C(2k, j) C(2d-2k, d-j) C(d, k), summed directly.
mpz_class s_dj(int d, int j);

/// Closed form (-1)^j 2^d C(d, j).
mpz_class s_dj_closed_form(int d, int j);

}  // namespace sw::exact
