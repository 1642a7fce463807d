#pragma once

#include <stdexcept>
#include <string>

namespace sw {

/// Raised when a numerical procedure stops short of its requested accuracy.
/// Carries the best estimate reached so callers can decide whether to use it.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, double best_estimate, double achieved_error)
      : std::runtime_error(what), best_estimate_(best_estimate), achieved_error_(achieved_error) {}

  double best_estimate() const { return best_estimate_; }
  double achieved_error() const { return achieved_error_; }

 private:
  double best_estimate_;
  double achieved_error_;
};

/// Parameters outside the region where a formula or integral representation applies.
class UnsupportedParameter : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Representation/character data violating one of the standing hypotheses.
/// The message names the violated invariant.
class InvalidParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Value plus an estimate of its absolute error.
struct Estimate {
  double value = 0.0;
  double error = 0.0;
};

}  // namespace sw
