#include "sw/exact/polynomial.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace sw::exact {

Polynomial::Polynomial(const mpz_class& constant) {
  if (constant != 0) c_.push_back(constant);
}

Polynomial::Polynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

Polynomial Polynomial::variable() { return Polynomial{0, 1}; }

Polynomial Polynomial::linear(long root) { return Polynomial{-root, 1}; }

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class Polynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<size_t>(i)];
}

mpz_class Polynomial::leading() const { return c_.empty() ? mpz_class(0) : c_.back(); }

mpz_class Polynomial::content() const {
  mpz_class g = 0;
  for (const auto& v : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Polynomial Polynomial::primitive_part() const {
  if (is_zero()) return {};
  return divide_exact(content());
}

mpq_class Polynomial::evaluate(const mpq_class& t) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + mpq_class(*it);
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  return Polynomial(std::move(r));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const mpz_class& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= s;
  return *this;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1L), base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

Polynomial Polynomial::divide_exact(const mpz_class& s) const {
  if (s == 0) throw std::domain_error("polynomial division by zero scalar");
  Polynomial r = *this;
  for (auto& v : r.c_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), s.get_mpz_t());
  return r;
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    mpz_class c = c_[static_cast<size_t>(i)];
    if (c == 0) continue;
    if (c < 0) {
      os << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    if (c != 1 || i == 0) os << c.get_str();
    if (i > 0) {
      if (c != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

void pseudo_divide(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r) {
  if (b.is_zero()) throw std::domain_error("pseudo-division by zero polynomial");
  q = Polynomial();
  r = a;
  if (a.degree() < b.degree()) {
    return;
  }
  const int db = b.degree();
  const mpz_class lb = b.leading();
  int steps = a.degree() - db + 1;
  while (!r.is_zero() && r.degree() >= db) {
    const int shift = r.degree() - db;
    std::vector<mpz_class> mono(static_cast<size_t>(shift) + 1);
    mono.back() = r.leading();
    Polynomial m(std::move(mono));
    q *= lb;
    q += m;
    r *= lb;
    r -= m * b;
    --steps;
  }
  if (steps > 0) {
    mpz_class f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(steps));
    q *= f;
    r *= f;
  }
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
  const auto& bc = b.coefficients();
  const mpz_class lb = b.leading();
  std::vector<mpz_class> rem = a.coefficients();
  std::vector<mpz_class> quo(static_cast<size_t>(a.degree() - b.degree()) + 1);
  for (int i = a.degree(); i >= b.degree(); --i) {
    mpz_class& top = rem[static_cast<size_t>(i)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) {
      throw std::domain_error("inexact polynomial division");
    }
    mpz_class qc;
    mpz_divexact(qc.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    const int shift = i - b.degree();
    for (size_t j = 0; j < bc.size(); ++j) {
      mpz_submul(rem[static_cast<size_t>(shift) + j].get_mpz_t(), qc.get_mpz_t(), bc[j].get_mpz_t());
    }
    quo[static_cast<size_t>(shift)] = qc;
  }
  for (const auto& v : rem) {
    if (v != 0) throw std::domain_error("inexact polynomial division");
  }
  return Polynomial(std::move(quo));
}

Polynomial primitive_gcd(Polynomial a, Polynomial b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) std::swap(a, b);
  a = a.primitive_part();
  if (!b.is_zero()) b = b.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    Polynomial q, r;
    pseudo_divide(a, b, q, r);
    a = std::move(b);
    b = r.is_zero() ? Polynomial() : r.primitive_part();
  }
  if (a.leading() < 0) a = -a;
  return a;
}

}  // namespace sw::exact
