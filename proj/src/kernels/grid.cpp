#include "sw/kernels/grid.hpp"

#include <omp.h>

#include <cmath>
#include <cstdlib>
#include <exception>

#include "sw/errors.hpp"

namespace sw::kernels {

namespace {

std::vector<double> make_axis(double lo, double hi, int n, bool log_spaced) {
  std::vector<double> out(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double f = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
    out[static_cast<size_t>(i)] =
        log_spaced ? std::exp(std::log(lo) + f * (std::log(hi) - std::log(lo))) : lo + f * (hi - lo);
  }
  return out;
}

}  // namespace

void GridSpec::validate() const {
  if (!(a1_min > 0.0) || !(a2_min > 0.0)) throw InvalidParameters("grid bounds > 0 violated");
  if (!(a1_max >= a1_min) || !(a2_max >= a2_min)) throw InvalidParameters("grid bounds min <= max violated");
  if (n1 < 1 || n2 < 1) throw InvalidParameters("grid points per axis >= 1 violated");
}

std::vector<double> GridSpec::axis1() const { return make_axis(a1_min, a1_max, n1, log_spaced); }
std::vector<double> GridSpec::axis2() const { return make_axis(a2_min, a2_max, n2, log_spaced); }

std::string to_string(Kind k) {
  switch (k) {
    case Kind::f: return "f";
    case Kind::g: return "g";
    default: return "phi";
  }
}

Kind parse_kind(const std::string& s) {
  if (s == "f") return Kind::f;
  if (s == "g") return Kind::g;
  if (s == "phi") return Kind::phi;
  throw InvalidParameters("kind must be f, g or phi, got '" + s + "'");
}

std::vector<GridRow> evaluate_point(const radial::RadialModel& m, double a1, double a2, Kind kind, double tol) {
  const radial::RadialPoint p = m.point(a1, a2);
  const radial::BasisValues b = m.basis(p, tol);
  std::vector<GridRow> rows;
  rows.reserve(static_cast<size_t>(m.d() + 1));
  for (int i = 0; i <= m.d(); ++i) {
    GridRow r;
    r.a1 = a1;
    r.a2 = a2;
    r.index = i;
    r.kind = kind;
    if (kind == Kind::f) {
      r.value_re = b.f[static_cast<size_t>(i)].u;
      r.err_est = b.err[static_cast<size_t>(i)];
    } else {
      r.value_re = b.combine(m.z_row(i)).u;
      r.err_est = b.combine_error(m.z_row(i));
      r.eps_exponent = i;
      if (kind == Kind::phi) {
        const double pre = m.phi_prefactor(i, p);
        r.value_re *= pre;
        r.err_est *= pre;
      }
    }
    rows.push_back(r);
  }
  return rows;
}

std::vector<GridRow> evaluate_grid_serial(const radial::RadialModel& m, const GridSpec& g, Kind kind, double tol) {
  g.validate();
  std::vector<GridRow> out;
  for (double a1 : g.axis1())
    for (double a2 : g.axis2()) {
      auto rows = evaluate_point(m, a1, a2, kind, tol);
      out.insert(out.end(), rows.begin(), rows.end());
    }
  return out;
}

int thread_limit() {
  int n = omp_get_max_threads();
  if (const char* env = std::getenv("SW_ENGINE_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0 && cap < n) n = static_cast<int>(cap);
  }
  return n < 1 ? 1 : n;
}

std::vector<GridRow> evaluate_grid_parallel(const radial::RadialModel& m, const GridSpec& g, Kind kind, double tol,
                                            int threads) {
  g.validate();
  const std::vector<double> ax1 = g.axis1();
  const std::vector<double> ax2 = g.axis2();
  const int npts = g.points();
  const size_t per = static_cast<size_t>(m.d() + 1);
  std::vector<GridRow> out(static_cast<size_t>(npts) * per);
  std::vector<std::exception_ptr> errors(static_cast<size_t>(npts));
  const int nt = threads > 0 ? threads : thread_limit();

#pragma omp parallel for schedule(dynamic, 1) num_threads(nt)
  for (int i = 0; i < npts; ++i) {
    try {
      const auto rows = evaluate_point(m, ax1[static_cast<size_t>(i / g.n2)], ax2[static_cast<size_t>(i % g.n2)],
                                       kind, tol);
      for (size_t r = 0; r < per; ++r) out[static_cast<size_t>(i) * per + r] = rows[r];
    } catch (...) {
      errors[static_cast<size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace sw::kernels
