#pragma once

#include "sw/exact/rational_function.hpp"

namespace sw::exact {

/// Element re + im*eps of S[eps]/(eps^2 + 1), where eps = sgn(m0)*sqrt(-1).
/// Every coefficient x_jk is a real quantity times eps^j, so this representation
/// keeps the scalar domain exact and ordered while i*m0 = eps*|m0| stays literal.
template <class S>
struct EpsNumber {
  S re{};
  S im{};

  static EpsNumber power(int e) {
    EpsNumber r;
    switch (((e % 4) + 4) % 4) {
      case 0: r.re = S(1); break;
      case 1: r.im = S(1); break;
      case 2: r.re = S(-1); break;
      default: r.im = S(-1); break;
    }
    return r;
  }

  EpsNumber times_eps() const { return {-im, re}; }

  EpsNumber& operator+=(const EpsNumber& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  EpsNumber& operator-=(const EpsNumber& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend EpsNumber operator+(EpsNumber a, const EpsNumber& b) { return a += b; }
  friend EpsNumber operator-(EpsNumber a, const EpsNumber& b) { return a -= b; }
  friend EpsNumber operator*(const S& s, const EpsNumber& a) { return {s * a.re, s * a.im}; }
  friend EpsNumber operator*(const EpsNumber& a, const EpsNumber& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }

  bool is_zero() const { return exact::is_zero(re) && exact::is_zero(im); }
};

}  // namespace sw::exact
