#pragma once

#include <gmpxx.h>

#include <string>

#include "json.hpp"
#include "sw/exact/binomial.hpp"
#include "sw/exact/coefficients.hpp"
#include "sw/exact/determinant.hpp"

namespace sw::exact {

/// Integer as a JSON number when it fits in int64, otherwise as a decimal string.
nlohmann::json to_json(const mpz_class& v);
/// {"num": [c0, c1, ...], "den": [...]}, lowest terms, den leading coefficient positive.
nlohmann::json to_json(const RationalFunction& r);
/// Same schema as a constant rational function.
nlohmann::json to_json(const mpq_class& q);

RationalFunction rational_function_from_json(const nlohmann::json& j);

/// {"d", "variant", "eps_exponents": [...], "entries": [[...], ...]}
nlohmann::json to_json(const NumericMatrix& m);
nlohmann::json to_json(const SymbolicMatrix& m);

template <class S>
nlohmann::json to_json(const Determinant<S>& det) {
  return {{"value", to_json(det.value)}, {"eps_exponent", det.eps_exponent}};
}

nlohmann::json to_json(const RecurrenceReport& r);
nlohmann::json to_json(const ConjectureOutcome& o);

/// Human-readable form with linear factors (t - c) pulled out by trial division,
/// e.g. "t^2*(t - 2)*(t + 2)/((t - 1)*(t - 3)^3)".
std::string factored_str(const RationalFunction& r);

}  // namespace sw::exact
