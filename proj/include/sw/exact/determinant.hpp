#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sw/exact/coefficients.hpp"

namespace sw::exact {

/// Fraction-free (Bareiss) determinant of an n x n row-major matrix over an
/// integral domain R. `div(a, b)` must return the exact quotient a / b; Sylvester's
/// identity guarantees divisibility. Zero pivots are handled by row exchange.
template <class R, class IsZero, class ExactDiv>
R bareiss_determinant(std::vector<R> a, int n, IsZero is_zero_fn, ExactDiv div) {
  if (n == 0) return R(1);
  auto at = [&](int i, int j) -> R& { return a[static_cast<size_t>(i * n + j)]; };
  R prev(1);
  bool negate = false;
  for (int k = 0; k < n - 1; ++k) {
    if (is_zero_fn(at(k, k))) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i) {
        if (!is_zero_fn(at(i, k))) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return R(0);
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        R num = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        at(i, j) = div(num, prev);
      }
    }
    prev = at(k, k);
  }
  R det = at(n - 1, n - 1);
  if (negate) det = -det;
  return det;
}

/// Determinant together with the formal factor eps^eps_exponent
/// (d(d+1)/2 for Variant::X, 0 for Variant::Z).
template <class S>
struct Determinant {
  S value;
  int eps_exponent = 0;
};

Determinant<mpq_class> det_exact(const NumericMatrix& m);
/// Columns are cleared to integer polynomials, the Bareiss step runs in Z[t],
/// and the result is divided by the product of the column denominators.
Determinant<RationalFunction> det_exact(const SymbolicMatrix& m);

/// Conjectured closed form of det Z_d (eps factor excluded).
RationalFunction conjectured_det(int d);

enum class ConjectureMode { symbolic, sampled };

struct ConjectureWitness {
  long t = 0;
  mpq_class computed;
  mpq_class conjectured;
};

struct ConjectureOutcome {
  int d = 0;
  ConjectureMode mode = ConjectureMode::symbolic;
  bool match = false;
  int samples = 0;  ///< points evaluated in sampled mode
  /// det Z_d != 0 at every valid t >= d (t = d mod 2) that was evaluated.
  bool nonzero_at_valid_t = true;
  std::optional<RationalFunction> computed;     ///< symbolic mode only
  std::optional<ConjectureWitness> witness;     ///< first disagreement
};

/// Sampled mode evaluates 2(d+1)^2 + 1 consecutive integers t >= d.
ConjectureOutcome check_det_conjecture(int d, ConjectureMode mode);
std::vector<ConjectureOutcome> check_det_conjecture(int d_min, int d_max, ConjectureMode mode);

}  // namespace sw::exact
