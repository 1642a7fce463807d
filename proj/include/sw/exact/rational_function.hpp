#pragma once

#include <gmpxx.h>

#include <string>

#include "sw/exact/polynomial.hpp"

namespace sw::exact {

/// Quotient of integer polynomials in t, kept in canonical form:
///   gcd(num, den) = 1 as polynomials, the combined integer content of
///   num and den is 1, and lc(den) > 0.
/// Canonical form makes operator== structural equality in Q(t).
class RationalFunction {
 public:
  RationalFunction() : den_(1L) {}
  RationalFunction(const Polynomial& num);             // NOLINT
  RationalFunction(const mpq_class& value);            // NOLINT
  RationalFunction(long value) : RationalFunction(mpq_class(value)) {}  // NOLINT
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction variable() { return RationalFunction(Polynomial::variable()); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Throws std::domain_error when t is a pole.
  mpq_class evaluate(const mpq_class& t) const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  RationalFunction pow(unsigned e) const;

  /// "num/den" with parenthesized factors where needed; just "num" when den = 1.
  std::string str(const std::string& var = "t") const;

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

inline bool is_zero(const RationalFunction& r) { return r.is_zero(); }
inline bool is_zero(const mpq_class& q) { return q == 0; }

}  // namespace sw::exact
