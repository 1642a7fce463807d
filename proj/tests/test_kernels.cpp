#include <doctest.h>

#include <cstdlib>

#include "sw/kernels/grid.hpp"

using namespace sw;
using namespace sw::kernels;

namespace {

bool same_rows(const std::vector<GridRow>& a, const std::vector<GridRow>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].a1 != b[i].a1 || a[i].a2 != b[i].a2 || a[i].index != b[i].index || a[i].kind != b[i].kind ||
        a[i].value_re != b[i].value_re || a[i].eps_exponent != b[i].eps_exponent || a[i].err_est != b[i].err_est)
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("grid axes") {
  GridSpec g;
  g.a1_min = 0.5;
  g.a1_max = 2.0;
  g.n1 = 3;
  g.a2_min = 1.0;
  g.a2_max = 1.0;
  g.n2 = 1;
  CHECK(g.axis1() == std::vector<double>{0.5, 1.25, 2.0});
  CHECK(g.axis2() == std::vector<double>{1.0});
  g.log_spaced = true;
  CHECK(g.axis1()[1] == doctest::Approx(1.0));
  GridSpec bad = g;
  bad.a1_min = 0.0;
  CHECK_THROWS_AS(bad.validate(), InvalidParameters);
  bad = g;
  bad.n2 = 0;
  CHECK_THROWS_AS(bad.validate(), InvalidParameters);
}

TEST_CASE("row count and order") {
  const radial::RadialModel m({5, -1}, {1, 1, 6});
  GridSpec g;
  const auto rows = evaluate_grid_serial(m, g, Kind::phi, 1e-10);
  CHECK(rows.size() == 9 * 7);
  CHECK(rows[0].a1 == 0.5);
  CHECK(rows[0].a2 == 0.5);
  CHECK(rows[6].index == 6);
  CHECK(rows[7].a2 == 1.25);
  CHECK(rows[7].index == 0);
  CHECK(rows[8].eps_exponent == 1);
  const auto f = evaluate_grid_serial(m, g, Kind::f, 1e-10);
  CHECK(f[3].eps_exponent == 0);
}

TEST_CASE("parallel and serial kernels agree bit for bit") {
  const radial::RadialModel m({5, -1}, {2.0, 0.5, 8});
  GridSpec g;
  g.n1 = 4;
  g.n2 = 5;
  g.log_spaced = true;
  for (Kind k : {Kind::f, Kind::g, Kind::phi}) {
    const auto s = evaluate_grid_serial(m, g, k, 1e-10);
    CHECK(same_rows(s, evaluate_grid_parallel(m, g, k, 1e-10, 1)));
    CHECK(same_rows(s, evaluate_grid_parallel(m, g, k, 1e-10, 3)));
    CHECK(same_rows(s, evaluate_grid_parallel(m, g, k, 1e-10)));
  }
}

TEST_CASE("SW_ENGINE_THREADS caps the thread count") {
  setenv("SW_ENGINE_THREADS", "1", 1);
  CHECK(thread_limit() == 1);
  setenv("SW_ENGINE_THREADS", "junk", 1);
  CHECK(thread_limit() >= 1);
  unsetenv("SW_ENGINE_THREADS");
  CHECK(thread_limit() >= 1);
}

TEST_CASE("a failing point is rethrown after the parallel loop") {
  const radial::RadialModel m({5, -1}, {1, 1, 6});
  GridSpec g;
  // An unreachable tolerance exhausts the order doubling.
  CHECK_THROWS_AS(evaluate_grid_parallel(m, g, Kind::f, 1e-300, 2), AccuracyError);
}

TEST_CASE("kind names") {
  CHECK(parse_kind("g") == Kind::g);
  CHECK(to_string(Kind::phi) == "phi");
  CHECK_THROWS_AS(parse_kind("h"), InvalidParameters);
}
