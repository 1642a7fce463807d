#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace sw::exact {

/// Dense univariate polynomial with arbitrary-size integer coefficients,
/// stored lowest degree first with no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const mpz_class& constant);  // NOLINT: implicit on purpose, scalars embed
  Polynomial(long constant) : Polynomial(mpz_class(constant)) {}  // NOLINT
  explicit Polynomial(std::vector<mpz_class> coeffs);
  Polynomial(std::initializer_list<long> coeffs);

  /// The indeterminate t.
  static Polynomial variable();
  /// (t - root)
  static Polynomial linear(long root);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<mpz_class>& coefficients() const { return c_; }
  mpz_class coeff(int i) const;
  mpz_class leading() const;

  /// gcd of the coefficients, positive; zero for the zero polynomial.
  mpz_class content() const;
  Polynomial primitive_part() const;

  mpq_class evaluate(const mpq_class& t) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const mpz_class& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial pow(unsigned e) const;

  /// Division by an exact integer divisor of every coefficient.
  Polynomial divide_exact(const mpz_class& s) const;

  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

/// lc(b)^(deg a - deg b + 1) * a = q*b + r with deg r < deg b.
void pseudo_divide(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r);

/// Quotient a / b in Z[t]; throws std::domain_error if b does not divide a.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

/// Primitive gcd with positive leading coefficient (integer contents ignored).
/// gcd(0, 0) = 0.
Polynomial primitive_gcd(Polynomial a, Polynomial b);

}  // namespace sw::exact
