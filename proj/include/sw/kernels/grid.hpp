#pragma once

#include <string>
#include <vector>

#include "sw/radial/model.hpp"

namespace sw::kernels {

struct GridSpec {
  double a1_min = 0.5;
  double a1_max = 2.0;
  double a2_min = 0.5;
  double a2_max = 2.0;
  int n1 = 3;
  int n2 = 3;
  bool log_spaced = false;

  void validate() const;  ///< throws InvalidParameters
  std::vector<double> axis1() const;
  std::vector<double> axis2() const;
  int points() const { return n1 * n2; }
};

enum class Kind { f, g, phi };

std::string to_string(Kind k);
Kind parse_kind(const std::string& s);

struct GridRow {
  double a1 = 0.0;
  double a2 = 0.0;
  int index = 0;
  Kind kind = Kind::phi;
  double value_re = 0.0;
  int eps_exponent = 0;
  double err_est = 0.0;
};

/// All rows for one point: index 0..d of the requested kind.
std::vector<GridRow> evaluate_point(const radial::RadialModel& m, double a1, double a2, Kind kind, double tol);

/// Rows ordered by a1 index, then a2 index, then component index.
std::vector<GridRow> evaluate_grid_serial(const radial::RadialModel& m, const GridSpec& g, Kind kind, double tol);

/// Same rows in the same order, points distributed over OpenMP threads.
/// threads <= 0 uses thread_limit(). An exception at any point is rethrown after the
/// loop (the one at the lowest point index).
std::vector<GridRow> evaluate_grid_parallel(const radial::RadialModel& m, const GridSpec& g, Kind kind, double tol,
                                            int threads = 0);

/// omp_get_max_threads(), capped by SW_ENGINE_THREADS when set to a positive integer.
int thread_limit();

}  // namespace sw::kernels
