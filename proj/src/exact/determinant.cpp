#include "sw/exact/determinant.hpp"

namespace sw::exact {

namespace {

int eps_exponent_for(Variant v, int d) { return v == Variant::X ? d * (d + 1) / 2 : 0; }

mpq_class det_mpq(const NumericMatrix& m) {
  return bareiss_determinant<mpq_class>(
      m.entries, m.size(), [](const mpq_class& v) { return v == 0; },
      [](const mpq_class& a, const mpq_class& b) { return mpq_class(a / b); });
}

}  // namespace

Determinant<mpq_class> det_exact(const NumericMatrix& m) {
  return {det_mpq(m), eps_exponent_for(m.variant, m.d)};
}

Determinant<RationalFunction> det_exact(const SymbolicMatrix& m) {
  const int n = m.size();
  std::vector<Polynomial> cleared(static_cast<size_t>(n * n));
  Polynomial denominator(1L);
  for (int k = 0; k < n; ++k) {
    Polynomial common(1L);
    for (int j = 0; j < n; ++j) {
      const Polynomial& den = m.at(j, k).den();
      Polynomial g = primitive_gcd(common, den);
      common *= divide_exact(den, g);
    }
    for (int j = 0; j < n; ++j) {
      const RationalFunction& e = m.at(j, k);
      cleared[static_cast<size_t>(j * n + k)] = e.num() * divide_exact(common, e.den());
    }
    denominator *= common;
  }
  Polynomial det = bareiss_determinant<Polynomial>(
      std::move(cleared), n, [](const Polynomial& p) { return p.is_zero(); },
      [](const Polynomial& a, const Polynomial& b) { return divide_exact(a, b); });
  return {RationalFunction(std::move(det), std::move(denominator)), eps_exponent_for(m.variant, m.d)};
}

RationalFunction conjectured_det(int d) {
  if (d < 1) throw std::domain_error("d must be >= 1");
  const Polynomial t = Polynomial::variable();
  Polynomial num(1L), den(1L);
  if (d % 2) {
    const int q = (d + 1) / 2;
    for (int l = 1; l <= q - 1; ++l) {
      const long s = 2L * l - 1;
      num *= (t * t - Polynomial(s * s)).pow(static_cast<unsigned>(q - l));
      den *= Polynomial::linear(2L * l).pow(static_cast<unsigned>(2 * l));
    }
  } else {
    const int q = d / 2;
    num *= t.pow(static_cast<unsigned>(q));
    for (int l = 1; l <= q - 1; ++l) {
      const long s = 2L * l;
      num *= (t * t - Polynomial(s * s)).pow(static_cast<unsigned>(q - l));
    }
    for (int l = 1; l <= q; ++l) den *= Polynomial::linear(2L * l - 1).pow(static_cast<unsigned>(2 * l - 1));
  }
  return RationalFunction(std::move(num), std::move(den));
}

ConjectureOutcome check_det_conjecture(int d, ConjectureMode mode) {
  ConjectureOutcome out;
  out.d = d;
  out.mode = mode;
  const RationalFunction expected = conjectured_det(d);

  if (mode == ConjectureMode::symbolic) {
    RationalFunction det = det_exact(build_symbolic_matrix(d)).value;
    out.match = det == expected;
    for (long t = d; t <= d + 4; t += 2) {
      if (det.evaluate(mpq_class(t)) == 0) out.nonzero_at_valid_t = false;
    }
    if (!out.match) {
      const long t = d;
      out.witness = ConjectureWitness{t, det.evaluate(mpq_class(t)), expected.evaluate(mpq_class(t))};
    }
    out.computed = std::move(det);
    return out;
  }

  const int needed = 2 * (d + 1) * (d + 1) + 1;
  out.match = true;
  for (long t = d; out.samples < needed; ++t) {
    mpq_class conj;
    NumericMatrix zm;
    try {
      conj = expected.evaluate(mpq_class(t));
      zm = build_matrix<mpq_class>(d, mpq_class(t), Variant::Z);
    } catch (const std::domain_error&) {
      continue;  // pole of an entry or of the conjectured form
    }
    const mpq_class det = det_mpq(zm);
    ++out.samples;
    if ((t - d) % 2 == 0 && det == 0) out.nonzero_at_valid_t = false;
    if (det != conj && out.match) {
      out.match = false;
      out.witness = ConjectureWitness{t, det, conj};
    }
  }
  return out;
}

std::vector<ConjectureOutcome> check_det_conjecture(int d_min, int d_max, ConjectureMode mode) {
  if (d_min < 1 || d_max < d_min) throw std::domain_error("need 1 <= d_min <= d_max");
  std::vector<ConjectureOutcome> out;
  for (int d = d_min; d <= d_max; ++d) out.push_back(check_det_conjecture(d, mode));
  return out;
}

}  // namespace sw::exact
