#pragma once

#include <string>

namespace sw::radial {

/// Minimal K-type highest weight (lambda1, lambda2); Harish-Chandra parameter
/// (lambda1 - 1, lambda2); d = lambda1 - lambda2.
struct RepParams {
  int lambda1 = 5;
  int lambda2 = -1;
  int d() const { return lambda1 - lambda2; }
  /// lambda1 - 1 > 0 > lambda2 and (lambda1 - 1) + lambda2 > 0.
  bool in_chamber_II() const { return lambda1 - 1 > 0 && lambda2 < 0 && (lambda1 - 1) + lambda2 > 0; }
};

/// Character data: H = diag(h1, h2) positive definite, chi_{m0} on SO(H).
struct CharParams {
  double h1 = 1.0;
  double h2 = 1.0;
  int m0 = 6;
  int t() const { return m0 < 0 ? -m0 : m0; }
  int sign() const { return m0 < 0 ? -1 : 1; }
};

/// strict: the parameters define a large discrete series (d >= 4 follows);
/// formal: any d >= 1, flagged as outside the representation-theoretic range when d < 4.
enum class Mode { strict, formal };

/// Throws InvalidParameters naming the first violated invariant.
void validate(const RepParams& rep, const CharParams& ch, Mode mode);

Mode parse_mode(const std::string& s);

/// Point of the split torus with the derived quantities y_i = h_i a_i^2, delta = y1 - y2.
struct RadialPoint {
  double a1 = 1.0;
  double a2 = 1.0;
  double y1 = 1.0;
  double y2 = 1.0;
  double delta = 0.0;

  static RadialPoint at(double a1, double a2, const CharParams& ch);
  /// Point of the diagonal h1 a1^2 = h2 a2^2 = y.
  static RadialPoint on_diagonal(double y, const CharParams& ch);
  /// Shifted by s in both log-coordinates: (a1 e^s, a2 e^s).
  RadialPoint scaled(double s, const CharParams& ch) const;
  bool near_diagonal(double rel = 1e-8) const;
};

}  // namespace sw::radial
