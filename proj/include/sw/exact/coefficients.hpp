#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "sw/exact/eps_number.hpp"
#include "sw/exact/rational_function.hpp"

namespace sw::exact {

enum class Variant {
  X,  ///< x_jk = eps^j z_jk; the eps^j factor is tracked as an exponent per row
  Z,  ///< z_jk with eps removed
};

/// (d+1)x(d+1) coefficient matrix over S (mpq_class for numeric t,
/// RationalFunction for symbolic t). Entries are always the real z_jk;
/// for Variant::X row j carries the formal factor eps^j.
template <class S>
struct CoeffMatrix {
  int d = 0;
  Variant variant = Variant::Z;
  std::vector<S> entries;

  int size() const { return d + 1; }
  S& at(int j, int k) { return entries[static_cast<size_t>(j * (d + 1) + k)]; }
  const S& at(int j, int k) const { return entries[static_cast<size_t>(j * (d + 1) + k)]; }
  int eps_exponent(int j) const { return variant == Variant::X ? j : 0; }
  /// Entry with indices outside [0, d] read as zero.
  S get(int j, int k) const {
    if (j < 0 || k < 0 || j > d || k > d) return S(0);
    return at(j, k);
  }
};

using NumericMatrix = CoeffMatrix<mpq_class>;
using SymbolicMatrix = CoeffMatrix<RationalFunction>;

mpz_class binomial(long n, long k);  // zero outside 0 <= k <= n
mpz_class factorial(long n);

inline mpq_class make_ratio(const mpz_class& num, const mpz_class& den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

/// Checks the numeric preconditions t >= d, t = d (mod 2), d >= 1.
void check_numeric_t(int d, long t);

/// Real part z_jk of the closed-form coefficient x_jk = eps^j z_jk, with x_00 = 1.
/// Generic over the scalar field: t is either a rational number or the symbol t.
template <class S>
S z_closed_form(int j, int k, int d, const S& t) {
  if (d < 1) throw std::domain_error("d must be >= 1");
  if (j < 0 || k < 0 || j > d || k > d) throw std::domain_error("coefficient index out of range");
  const long b = 2L * k - j;
  if (b < 0 || b > d) return S(0);
  const int delta = j % 2;
  const int half = j / 2;

  S a = S(1);
  for (int l = 1; l <= k; ++l) {
    S den = t - S(d - 2 * l + 1);
    if (is_zero(den)) throw std::domain_error("vanishing denominator t-d+2l-1");
    a *= S(2 * l - 1) / den;
  }

  S sum = S(0);
  const S t2 = t * t;
  for (int r = 0; r <= half; ++r) {
    S term = S(make_ratio(binomial(half, r) * factorial(d - 2 * r - delta), factorial(d)));
    for (int l = 1; l <= r; ++l) {
      const mpq_class ratio = make_ratio(2 * k - j - 2 * l + 2 - delta, 2 * k - 2 * l + 1);
      const long shift = d - 2 * l + 2;
      term *= S(ratio) * (t2 - S(shift * shift));
    }
    sum += term;
  }

  S value = S(mpq_class(binomial(d, b))) * a * sum;
  if (delta) value *= t;
  if ((j + k) % 2) value = -value;
  return value;
}

/// Assembles the full matrix from the closed form. `scale` multiplies every
/// entry (x_00 = scale); the default pins x_00 = 1.
template <class S>
CoeffMatrix<S> build_matrix(int d, const S& t, Variant variant, const S& scale = S(1));

/// Independent construction: row 0 from the four-term difference equation in k,
/// row 1 from its first-order recurrence, rows j >= 2 by solving (x-2) for x_{j+1,k}.
template <class S>
CoeffMatrix<S> build_matrix_by_recurrence(int d, const S& t);

NumericMatrix build_numeric_matrix(int d, long t, Variant variant = Variant::Z);
SymbolicMatrix build_symbolic_matrix(int d, Variant variant = Variant::Z);

struct RecurrenceFailure {
  std::string equation;  ///< "x-1", "x-2", "x-3", "x-4"
  int j = 0;
  int k = 0;
};

struct RecurrenceReport {
  int d = 0;
  int instances = 0;
  std::vector<RecurrenceFailure> failures;
  bool holds() const { return failures.empty(); }
};

/// Checks (x-1)..(x-4) for the eps-weighted entries x_jk = eps^j z_jk of a
/// Z-valued matrix at parameter t, with i*m0 represented as eps*t.
template <class S>
RecurrenceReport verify_recurrences(const CoeffMatrix<S>& z, const S& t);

RecurrenceReport verify_recurrences(int d, long t);
RecurrenceReport verify_recurrences_symbolic(int d);

/// True when the support and boundary zero pattern holds: (0,0) = scale != 0,
/// x_{j,0} = 0 for j >= 1, x_{j,d} = 0 for j <= d-1, zero when 2k-j outside [0,d].
template <class S>
bool has_coefficient_pattern(const CoeffMatrix<S>& m);

}  // namespace sw::exact
