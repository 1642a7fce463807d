#include "sw/exact/coefficients.hpp"

#include <string>

namespace sw::exact {

mpz_class binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

mpz_class factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative integer");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

void check_numeric_t(int d, long t) {
  if (d < 1) throw std::domain_error("d must be >= 1");
  if (t < d) throw std::domain_error("|m0| >= d violated (t=" + std::to_string(t) + ", d=" + std::to_string(d) + ")");
  if ((t - d) % 2 != 0) throw std::domain_error("|m0| = d (mod 2) violated");
}

template <class S>
CoeffMatrix<S> build_matrix(int d, const S& t, Variant variant, const S& scale) {
  CoeffMatrix<S> m{d, variant, std::vector<S>(static_cast<size_t>((d + 1) * (d + 1)))};
  for (int j = 0; j <= d; ++j) {
    for (int k = 0; k <= d; ++k) {
      m.at(j, k) = scale * z_closed_form(j, k, d, t);
    }
  }
  return m;
}

template <class S>
CoeffMatrix<S> build_matrix_by_recurrence(int d, const S& t) {
  if (d < 1) throw std::domain_error("d must be >= 1");
  CoeffMatrix<S> m{d, Variant::Z, std::vector<S>(static_cast<size_t>((d + 1) * (d + 1)))};
  auto x0 = [&](int k) { return k < 0 ? S(0) : m.at(0, k); };

  // Row 0: four-term difference equation, seeded x_{0,0} = 1.
  m.at(0, 0) = S(1);
  for (int k = 0; k < d; ++k) {
    const S a = t - S(d - 2 * k - 1);  // t-d+2k+1
    const S b = t - S(d - 2 * k + 1);  // t-d+2k-1
    const S lead = S(-2L * (k + 1)) * a * b;
    const S c0 = S(2L * k * (4L * d - 6L * k + 3) - 1L * d * (d - 1)) * b;
    const S c1 = S(2L * (d - 2 * k + 2) * (1L * d * (d - 1) - (2L * k - 2) * (2L * d - 2 * k + 3))) +
                 S(2L * k - 2) * (t + S(d - 2 * k + 1)) * b;
    const S c2 = S(1L * (d - 2 * k + 4) * (d - 2 * k + 3)) * (t + S(d - 2 * k + 3));
    m.at(0, k + 1) = -(c0 * x0(k) + c1 * x0(k - 1) + c2 * x0(k - 2)) / lead;
  }

  // Row 1: (t-d+2k+1) z_{1,k+1} = (d-2k+1) z_{1,k} + t z_{0,k}, z_{1,0} = 0.
  m.at(1, 0) = S(0);
  for (int k = 0; k < d; ++k) {
    m.at(1, k + 1) = (S(d - 2 * k + 1) * m.at(1, k) + t * m.at(0, k)) / (t - S(d - 2 * k - 1));
  }

  // Rows j+1 >= 2 from (x-2): (d-j) z_{j+1,k} = t z_{jk} - (j-2k-1) z_{j-1,k} - (t+d-2k+1) z_{j-1,k-1}.
  for (int j = 1; j < d; ++j) {
    for (int k = 0; k <= d; ++k) {
      S rhs = t * m.at(j, k) - S(j - 2 * k - 1) * m.at(j - 1, k) - (t + S(d - 2 * k + 1)) * m.get(j - 1, k - 1);
      m.at(j + 1, k) = rhs / S(d - j);
    }
  }
  return m;
}

template <class S>
RecurrenceReport verify_recurrences(const CoeffMatrix<S>& z, const S& t) {
  using E = EpsNumber<S>;
  const int d = z.d;
  auto x = [&](int j, int k) {
    if (j < 0 || k < 0 || j > d || k > d) return E{};
    const E p = E::power(j);
    return z.at(j, k) * p;
  };
  auto im0 = [&](const E& v) { return t * v.times_eps(); };  // sqrt(-1) m0 = eps |m0|

  RecurrenceReport rep;
  rep.d = d;
  auto record = [&](bool ok, const char* eq, int j, int k) {
    ++rep.instances;
    if (!ok) rep.failures.push_back({eq, j, k});
  };

  for (int j = 0; j <= d - 1; ++j) {
    for (int k = 0; k <= d; ++k) {
      E e = S(j) * x(j - 1, k) + im0(x(j, k)) + S(d - 2 * k + j + 1) * x(j + 1, k) -
            (t - S(d - 2 * k - 1)) * x(j + 1, k + 1);
      record(e.is_zero(), "x-1", j, k);
    }
  }
  for (int j = 1; j <= d; ++j) {
    for (int k = 0; k <= d; ++k) {
      E e = S(j - 2 * k - 1) * x(j - 1, k) + (t + S(d - 2 * k + 1)) * x(j - 1, k - 1) + im0(x(j, k)) -
            S(d - j) * x(j + 1, k);
      record(e.is_zero(), "x-2", j, k);
    }
  }
  for (int j = 1; j <= d; ++j) record(is_zero(z.at(j, 0)), "x-3", j, 0);
  for (int j = 0; j <= d - 1; ++j) record(is_zero(z.at(j, d)), "x-4", j, d);
  return rep;
}

template <class S>
bool has_coefficient_pattern(const CoeffMatrix<S>& m) {
  const int d = m.d;
  if (is_zero(m.at(0, 0))) return false;
  for (int j = 1; j <= d; ++j) {
    if (!is_zero(m.at(j, 0))) return false;
  }
  for (int j = 0; j < d; ++j) {
    if (!is_zero(m.at(j, d))) return false;
  }
  for (int j = 0; j <= d; ++j) {
    for (int k = 0; k <= d; ++k) {
      const int b = 2 * k - j;
      if ((b < 0 || b > d) && !is_zero(m.at(j, k))) return false;
    }
  }
  return true;
}

NumericMatrix build_numeric_matrix(int d, long t, Variant variant) {
  check_numeric_t(d, t);
  return build_matrix<mpq_class>(d, mpq_class(t), variant);
}

SymbolicMatrix build_symbolic_matrix(int d, Variant variant) {
  return build_matrix<RationalFunction>(d, RationalFunction::variable(), variant);
}

RecurrenceReport verify_recurrences(int d, long t) {
  const NumericMatrix m = build_numeric_matrix(d, t);
  return verify_recurrences(m, mpq_class(t));
}

RecurrenceReport verify_recurrences_symbolic(int d) {
  const SymbolicMatrix m = build_symbolic_matrix(d);
  return verify_recurrences(m, RationalFunction::variable());
}

#define SW_INSTANTIATE(S)                                                                     \
  template CoeffMatrix<S> build_matrix<S>(int, const S&, Variant, const S&);                  \
  template CoeffMatrix<S> build_matrix_by_recurrence<S>(int, const S&);                      \
  template RecurrenceReport verify_recurrences<S>(const CoeffMatrix<S>&, const S&);           \
  template bool has_coefficient_pattern<S>(const CoeffMatrix<S>&);
SW_INSTANTIATE(mpq_class)
SW_INSTANTIATE(RationalFunction)
#undef SW_INSTANTIATE

}  // namespace sw::exact
