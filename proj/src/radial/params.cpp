#include "sw/radial/params.hpp"

#include <algorithm>
#include <cmath>

#include "sw/errors.hpp"

namespace sw::radial {

void validate(const RepParams& rep, const CharParams& ch, Mode mode) {
  const int d = rep.d();
  if (mode == Mode::strict) {
    if (!(rep.lambda1 - 1 > 0)) throw InvalidParameters("lambda1 - 1 > 0 violated");
    if (!(rep.lambda2 < 0)) throw InvalidParameters("lambda2 < 0 violated");
    if (!((rep.lambda1 - 1) + rep.lambda2 > 0)) {
      throw InvalidParameters("(lambda1 - 1) + lambda2 > 0 violated: Harish-Chandra parameter (" +
                              std::to_string(rep.lambda1 - 1) + ", " + std::to_string(rep.lambda2) +
                              ") is not in chamber II");
    }
  } else if (d < 1) {
    throw InvalidParameters("d = lambda1 - lambda2 >= 1 violated");
  }
  if (!(ch.h1 > 0.0)) throw InvalidParameters("h1 > 0 violated");
  if (!(ch.h2 > 0.0)) throw InvalidParameters("h2 > 0 violated");
  if ((ch.t() - d) % 2 != 0) {
    throw InvalidParameters("(m0 + d)/2 integer violated (m0 = " + std::to_string(ch.m0) +
                            ", d = " + std::to_string(d) + ")");
  }
  if (ch.t() < d) {
    throw InvalidParameters("|m0| >= d violated (|m0| = " + std::to_string(ch.t()) + ", d = " + std::to_string(d) +
                            ")");
  }
}

Mode parse_mode(const std::string& s) {
  if (s == "strict") return Mode::strict;
  if (s == "formal") return Mode::formal;
  throw InvalidParameters("mode must be strict or formal, got '" + s + "'");
}

RadialPoint RadialPoint::at(double a1, double a2, const CharParams& ch) {
  if (!(a1 > 0.0) || !(a2 > 0.0)) throw std::domain_error("radial point needs a1, a2 > 0");
  RadialPoint p;
  p.a1 = a1;
  p.a2 = a2;
  p.y1 = ch.h1 * a1 * a1;
  p.y2 = ch.h2 * a2 * a2;
  p.delta = p.y1 - p.y2;
  return p;
}

RadialPoint RadialPoint::on_diagonal(double y, const CharParams& ch) {
  if (!(y > 0.0)) throw std::domain_error("diagonal point needs y > 0");
  RadialPoint p;
  p.a1 = std::sqrt(y / ch.h1);
  p.a2 = std::sqrt(y / ch.h2);
  p.y1 = y;
  p.y2 = y;
  p.delta = 0.0;
  return p;
}

RadialPoint RadialPoint::scaled(double s, const CharParams& ch) const {
  if (s == 0.0) return *this;
  const double e = std::exp(s);
  return at(a1 * e, a2 * e, ch);
}

bool RadialPoint::near_diagonal(double rel) const { return std::abs(delta) < rel * std::max(y1, y2); }

}  // namespace sw::radial
