#include "sw/exact/rational_function.hpp"

#include <stdexcept>
#include <utility>

namespace sw::exact {

RationalFunction::RationalFunction(const Polynomial& num) : num_(num), den_(1L) { normalize(); }

RationalFunction::RationalFunction(const mpq_class& value)
    : num_(mpz_class(value.get_num())), den_(mpz_class(value.get_den())) {
  normalize();
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1L);
    return;
  }
  if (den_.degree() > 0) {
    Polynomial g = primitive_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divide_exact(num_, g);
      den_ = divide_exact(den_, g);
    }
  }
  mpz_class c = gcd(num_.content(), den_.content());
  if (den_.leading() < 0) c = -c;
  if (c != 1) {
    num_ = num_.divide_exact(c);
    den_ = den_.divide_exact(c);
  }
}

mpq_class RationalFunction::evaluate(const mpq_class& t) const {
  mpq_class d = den_.evaluate(t);
  if (d == 0) throw std::domain_error("rational function evaluated at a pole");
  return num_.evaluate(t) / d;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw std::domain_error("rational function division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

RationalFunction RationalFunction::pow(unsigned e) const {
  RationalFunction r;
  r.num_ = num_.pow(e);
  r.den_ = den_.pow(e);
  return r;
}

std::string RationalFunction::str(const std::string& var) const {
  auto wrap = [&](const Polynomial& p) {
    std::string s = p.str(var);
    bool simple = p.degree() <= 0 || (p.coefficients().size() == static_cast<size_t>(p.degree()) + 1 &&
                                      [&] {
                                        int nonzero = 0;
                                        for (const auto& c : p.coefficients()) nonzero += (c != 0);
                                        return nonzero == 1;
                                      }());
    return simple ? s : "(" + s + ")";
  };
  if (den_ == Polynomial(1L)) return num_.str(var);
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace sw::exact
