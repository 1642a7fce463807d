#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "sw/kernels/grid.hpp"
#include "sw/radial/params.hpp"

namespace sw::cli {

struct RunConfig {
  radial::RepParams rep;
  radial::CharParams chr;
  kernels::GridSpec grid;
  double tol = 1e-10;
  radial::Mode mode = radial::Mode::strict;
  std::string format;  ///< csv | json; empty means the subcommand default
  std::string out;     ///< empty means stdout
};

/// Applies the keys present in a JSON config document on top of cfg.
/// Keys: lambda1, lambda2, m0, h1, h2, tol, mode, format, out,
/// grid: {a1_range: [lo, hi], a2_range: [lo, hi], points: n | [n1, n2], log_spaced: bool}.
void apply_config(RunConfig& cfg, const nlohmann::json& j);

/// "lo:hi:n[:log]" for both axes, or "lo:hi:n[:log],lo:hi:n[:log]" for a1 then a2.
kernels::GridSpec parse_grid(const std::string& s);

/// Exit codes: 0 ok; 1 failed check or conjecture mismatch; 2 invalid parameters or usage;
/// 3 quadrature failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sw::cli
