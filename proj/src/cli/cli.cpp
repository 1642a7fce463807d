#include "sw/cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "sw/errors.hpp"
#include "sw/exact/binomial.hpp"
#include "sw/exact/serialize.hpp"
#include "sw/radial/residuals.hpp"

namespace sw::cli {

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitQuadrature = 3;

std::pair<double, double> range_of(const json& j, const char* key) {
  if (!j.is_array() || j.size() != 2) throw InvalidParameters(std::string("grid.") + key + " must be [lo, hi]");
  return {j[0].get<double>(), j[1].get<double>()};
}

kernels::GridSpec parse_axis(const std::string& s, kernels::GridSpec g, int axis) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() < 3 || parts.size() > 4 || (parts.size() == 4 && parts[3] != "log")) {
    throw InvalidParameters("grid axis must be lo:hi:n[:log], got '" + s + "'");
  }
  double lo = 0, hi = 0;
  int n = 0;
  try {
    lo = std::stod(parts[0]);
    hi = std::stod(parts[1]);
    n = std::stoi(parts[2]);
  } catch (const std::exception&) {
    throw InvalidParameters("grid axis must be lo:hi:n[:log], got '" + s + "'");
  }
  if (axis == 1) {
    g.a1_min = lo;
    g.a1_max = hi;
    g.n1 = n;
  } else {
    g.a2_min = lo;
    g.a2_max = hi;
    g.n2 = n;
  }
  g.log_spaced = parts.size() == 4;
  return g;
}

}  // namespace

kernels::GridSpec parse_grid(const std::string& s) {
  const auto comma = s.find(',');
  kernels::GridSpec g;
  if (comma == std::string::npos) {
    g = parse_axis(s, g, 1);
    g = parse_axis(s, g, 2);
  } else {
    g = parse_axis(s.substr(0, comma), g, 1);
    const bool log1 = g.log_spaced;
    g = parse_axis(s.substr(comma + 1), g, 2);
    if (log1 != g.log_spaced) throw InvalidParameters("grid axes must agree on log spacing");
  }
  g.validate();
  return g;
}

void apply_config(RunConfig& cfg, const json& j) {
  if (!j.is_object()) throw InvalidParameters("config must be a JSON object");
  if (j.contains("lambda1")) cfg.rep.lambda1 = j["lambda1"].get<int>();
  if (j.contains("lambda2")) cfg.rep.lambda2 = j["lambda2"].get<int>();
  if (j.contains("m0")) cfg.chr.m0 = j["m0"].get<int>();
  if (j.contains("h1")) cfg.chr.h1 = j["h1"].get<double>();
  if (j.contains("h2")) cfg.chr.h2 = j["h2"].get<double>();
  if (j.contains("tol")) cfg.tol = j["tol"].get<double>();
  if (j.contains("mode")) cfg.mode = radial::parse_mode(j["mode"].get<std::string>());
  if (j.contains("format")) cfg.format = j["format"].get<std::string>();
  if (j.contains("out")) cfg.out = j["out"].get<std::string>();
  if (j.contains("grid")) {
    const json& g = j["grid"];
    if (g.contains("a1_range")) std::tie(cfg.grid.a1_min, cfg.grid.a1_max) = range_of(g["a1_range"], "a1_range");
    if (g.contains("a2_range")) std::tie(cfg.grid.a2_min, cfg.grid.a2_max) = range_of(g["a2_range"], "a2_range");
    if (g.contains("points")) {
      const json& p = g["points"];
      if (p.is_array() && p.size() == 2) {
        cfg.grid.n1 = p[0].get<int>();
        cfg.grid.n2 = p[1].get<int>();
      } else {
        cfg.grid.n1 = cfg.grid.n2 = p.get<int>();
      }
    }
    if (g.contains("log_spaced")) cfg.grid.log_spaced = g["log_spaced"].get<bool>();
  }
}

namespace {

struct CommonFlags {
  std::string config;
  std::optional<int> lambda1, lambda2, m0;
  std::optional<double> h1, h2, tol;
  std::optional<std::string> grid, mode, format, out;
};

void add_output_flags(CLI::App* sub, CommonFlags& f) {
  sub->add_option("--format", f.format, "csv or json");
  sub->add_option("--out", f.out, "output file (default stdout)");
}

void add_param_flags(CLI::App* sub, CommonFlags& f) {
  sub->add_option("--config", f.config, "JSON config file; flags override it");
  sub->add_option("--lambda1", f.lambda1, "lambda1 of the minimal K-type (default 5)");
  sub->add_option("--lambda2", f.lambda2, "lambda2 of the minimal K-type (default -1)");
  sub->add_option("--m0", f.m0, "character index m0 (default 6)");
  sub->add_option("--h1", f.h1, "h1 > 0 (default 1)");
  sub->add_option("--h2", f.h2, "h2 > 0 (default 1)");
  sub->add_option("--grid", f.grid, "lo:hi:n[:log] or lo:hi:n[:log],lo:hi:n[:log]");
  sub->add_option("--tol", f.tol, "relative quadrature tolerance (default 1e-10)");
  sub->add_option("--mode", f.mode, "strict or formal (default strict)");
  add_output_flags(sub, f);
}

RunConfig resolve(const CommonFlags& f) {
  RunConfig cfg;
  if (!f.config.empty()) {
    std::ifstream in(f.config);
    if (!in) throw InvalidParameters("cannot read config file '" + f.config + "'");
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw InvalidParameters("config file '" + f.config + "' is not valid JSON: " + e.what());
    }
    apply_config(cfg, j);
  }
  if (f.lambda1) cfg.rep.lambda1 = *f.lambda1;
  if (f.lambda2) cfg.rep.lambda2 = *f.lambda2;
  if (f.m0) cfg.chr.m0 = *f.m0;
  if (f.h1) cfg.chr.h1 = *f.h1;
  if (f.h2) cfg.chr.h2 = *f.h2;
  if (f.tol) cfg.tol = *f.tol;
  if (f.mode) cfg.mode = radial::parse_mode(*f.mode);
  if (f.format) cfg.format = *f.format;
  if (f.out) cfg.out = *f.out;
  if (f.grid) cfg.grid = parse_grid(*f.grid);
  if (!(cfg.tol > 0.0 && cfg.tol < 1.0)) throw InvalidParameters("0 < tol < 1 violated");
  cfg.grid.validate();
  return cfg;
}

std::string format_or(const RunConfig& cfg, const std::string& def) {
  const std::string f = cfg.format.empty() ? def : cfg.format;
  if (f != "csv" && f != "json" && f != "text") throw InvalidParameters("format must be csv, json or text");
  return f;
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw InvalidParameters("cannot open output file '" + cfg.out + "'");
  f << text;
}

void warn_formal(const RunConfig& cfg, int d, std::ostream& err) {
  if (cfg.mode == radial::Mode::formal && d < 4) {
    err << "note: formal mode, d = " << d << " < 4 is outside the representation-theoretic range\n";
  }
}

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json params_json(const RunConfig& cfg) {
  return {{"lambda1", cfg.rep.lambda1}, {"lambda2", cfg.rep.lambda2}, {"m0", cfg.chr.m0},
          {"h1", cfg.chr.h1},           {"h2", cfg.chr.h2},           {"tol", cfg.tol},
          {"mode", cfg.mode == radial::Mode::strict ? "strict" : "formal"}};
}

// ---- eval ----

int cmd_eval(const RunConfig& cfg, const std::string& kind_name, std::ostream& out, std::ostream& err) {
  const kernels::Kind kind = kernels::parse_kind(kind_name);
  const radial::RadialModel model(cfg.rep, cfg.chr, cfg.mode);
  warn_formal(cfg, model.d(), err);
  const auto rows = kernels::evaluate_grid_parallel(model, cfg.grid, kind, cfg.tol);
  std::ostringstream s;
  if (format_or(cfg, "csv") == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"a1", r.a1},
                     {"a2", r.a2},
                     {"index", r.index},
                     {"kind", kernels::to_string(r.kind)},
                     {"value_re", r.value_re},
                     {"eps_exponent", r.eps_exponent},
                     {"err_est", r.err_est}});
    }
    s << json{{"params", params_json(cfg)}, {"rows", arr}}.dump(2) << "\n";
  } else {
    s << "a1,a2,index,kind,value_re,eps_exponent,err_est\n";
    for (const auto& r : rows) {
      s << fmt_double(r.a1) << ',' << fmt_double(r.a2) << ',' << r.index << ',' << kernels::to_string(r.kind) << ','
        << fmt_double(r.value_re) << ',' << r.eps_exponent << ',' << fmt_double(r.err_est) << '\n';
    }
  }
  emit(cfg, out, s.str());
  return kExitOk;
}

// ---- coeffs ----

int cmd_coeffs(const RunConfig& cfg, std::optional<int> d_flag, bool symbolic, const std::string& variant_name,
               const std::string& scale_str, std::ostream& out, std::ostream& err) {
  const exact::Variant variant = variant_name == "X" ? exact::Variant::X : exact::Variant::Z;
  if (variant_name != "X" && variant_name != "Z") throw InvalidParameters("variant must be X or Z");
  mpq_class scale;
  if (scale.set_str(scale_str, 10) != 0 || scale == 0) throw InvalidParameters("scale must be a nonzero rational p/q");
  scale.canonicalize();
  int d = cfg.rep.d();
  if (d_flag) {
    d = *d_flag;
    if (d < 1) throw InvalidParameters("d >= 1 violated");
  } else {
    radial::validate(cfg.rep, cfg.chr, cfg.mode);
  }
  if (cfg.mode == radial::Mode::strict && d < 4) {
    throw InvalidParameters("d >= 4 violated in strict mode (use --mode formal)");
  }
  warn_formal(cfg, d, err);
  json j;
  if (symbolic) {
    const auto m = exact::build_matrix<exact::RationalFunction>(d, exact::RationalFunction::variable(), variant,
                                                                exact::RationalFunction(scale));
    j = exact::to_json(m);
    j["t"] = "symbolic";
    const auto det = exact::det_exact(m);
    j["det"] = exact::to_json(det);
    j["det_factored"] = exact::factored_str(det.value);
  } else {
    const long t = cfg.chr.t();
    exact::check_numeric_t(d, t);
    const auto m = exact::build_matrix<mpq_class>(d, mpq_class(t), variant, scale);
    j = exact::to_json(m);
    j["t"] = t;
    j["det"] = exact::to_json(exact::det_exact(m));
  }
  j["scale"] = exact::to_json(scale);
  if (format_or(cfg, "json") != "json") throw InvalidParameters("coeffs writes json only");
  emit(cfg, out, j.dump(2) + "\n");
  return kExitOk;
}

// ---- verify ----

struct Check {
  explicit Check(std::string n, double tol = 0.0) : name(std::move(n)), tolerance(tol) {}

  std::string name;
  double tolerance = 0.0;
  bool lower_bound = false;  ///< passes when the value is at least the tolerance (detector checks)
  double worst = 0.0;
  int count = 0;
  json worst_at;
  json failures = json::array();
  bool exact = false;
  bool informational = false;

  void record(double v, const json& where) {
    ++count;
    const bool first = count == 1;
    if (lower_bound ? (first || v < worst) : (first || v > worst)) {
      worst = v;
      worst_at = where;
    }
    const bool ok = lower_bound ? v >= tolerance : v <= tolerance;
    if (!ok && !informational && failures.size() < 20) {
      json f = where;
      f["value"] = v;
      failures.push_back(f);
    }
  }
  void record_exact(bool ok, const json& where) {
    exact = true;
    ++count;
    if (!ok) {
      worst += 1;
      if (failures.size() < 20) failures.push_back(where);
    }
  }
  bool pass() const {
    if (informational) return true;
    if (exact) return worst == 0.0;
    return lower_bound ? (count > 0 && worst >= tolerance) : worst <= tolerance;
  }
  json to_json() const {
    json j{{"name", name}, {"count", count}, {"pass", pass()}};
    if (exact) {
      j["mismatches"] = static_cast<int>(worst);
    } else {
      j[lower_bound ? "min" : "max"] = worst;
      j["tolerance"] = tolerance;
      if (!worst_at.is_null()) j["worst_at"] = worst_at;
    }
    if (informational) j["informational"] = true;
    if (!failures.empty()) j["failures"] = failures;
    return j;
  }
};

json point_json(const radial::RadialPoint& p) { return {{"a1", p.a1}, {"a2", p.a2}}; }

std::vector<radial::RadialPoint> off_diagonal_points(const radial::RadialModel& m, const kernels::GridSpec& g,
                                                     int& skipped) {
  std::vector<radial::RadialPoint> pts;
  skipped = 0;
  for (double a1 : g.axis1())
    for (double a2 : g.axis2()) {
      const auto p = m.point(a1, a2);
      if (p.near_diagonal()) {
        ++skipped;
        continue;
      }
      pts.push_back(p);
    }
  return pts;
}

void verify_recurrences(std::vector<Check>& checks, int d_max, int sym_max) {
  Check num{"recurrences_numeric"};
  for (int d = 1; d <= d_max; ++d)
    for (long t : {long(d), long(d + 2), long(d + 4)}) {
      const auto r = exact::verify_recurrences(d, t);
      json where{{"d", d}, {"t", t}};
      if (!r.holds()) where["first_failure"] = {{"equation", r.failures[0].equation}, {"j", r.failures[0].j}, {"k", r.failures[0].k}};
      num.record_exact(r.holds(), where);
    }
  checks.push_back(num);
  Check sym{"recurrences_symbolic"};
  for (int d = 1; d <= sym_max; ++d) {
    const auto r = exact::verify_recurrences_symbolic(d);
    json where{{"d", d}, {"t", "symbolic"}};
    if (!r.holds()) where["first_failure"] = {{"equation", r.failures[0].equation}, {"j", r.failures[0].j}, {"k", r.failures[0].k}};
    sym.record_exact(r.holds(), where);
  }
  checks.push_back(sym);
}

void verify_binom(std::vector<Check>& checks, int d_max) {
  Check closed{"binomial_closed_form"};
  Check rec{"binomial_recurrence"};
  for (int d = 0; d <= d_max; ++d)
    for (int j = 0; j <= d; ++j) {
      const mpz_class s = exact::s_dj(d, j);
      closed.record_exact(s == exact::s_dj_closed_form(d, j), {{"d", d}, {"j", j}});
      if (j >= 1 && d >= 1) rec.record_exact(j * s == -2 * d * exact::s_dj(d - 1, j - 1), {{"d", d}, {"j", j}});
    }
  checks.push_back(closed);
  checks.push_back(rec);
}

void verify_ode(std::vector<Check>& checks, const RunConfig& cfg) {
  const auto pp = special::ProfileParams::from_representation(cfg.rep.lambda1, cfg.rep.lambda2, cfg.chr.t());
  Check c{"whittaker_ode", 1e-5};
  for (int i = 0; i < 10; ++i) {
    const double x = 0.1 * std::pow(100.0, i / 9.0);
    c.record(std::abs(special::whittaker_ode_residual(pp, x)), {{"x", x}});
  }
  checks.push_back(c);
}

void verify_derivatives(std::vector<Check>& checks, const RunConfig& cfg, json& notes) {
  const radial::RadialModel m(cfg.rep, cfg.chr, cfg.mode);
  int skipped = 0;
  const auto pts = off_diagonal_points(m, cfg.grid, skipped);
  Check first{"derivative_relation_d1", 1e-7};
  Check second{"derivative_relation_d2", 1e-7};
  for (const auto& p : pts) {
    const auto r = radial::derivative_relations(m, p, cfg.tol);
    for (int k = 0; k < m.d(); ++k) {
      json w = point_json(p);
      w["k"] = k;
      first.record(r.first[static_cast<size_t>(k)], w);
    }
    for (int k = 1; k <= m.d(); ++k) {
      json w = point_json(p);
      w["k"] = k;
      second.record(r.second[static_cast<size_t>(k)], w);
    }
  }
  notes["derivatives_skipped_near_diagonal"] = skipped;
  checks.push_back(first);
  checks.push_back(second);
}

void verify_system(std::vector<Check>& checks, const RunConfig& cfg, radial::OmegaVariant variant, json& notes) {
  const radial::RadialModel m(cfg.rep, cfg.chr, cfg.mode);
  int skipped = 0;
  const auto pts = off_diagonal_points(m, cfg.grid, skipped);
  Check m1{"M1", 1e-6}, m2{"M2", 1e-6}, m3{"M3", 1e-5}, om{"Omega_f_k", 1e-4}, m6{"M6_g_j", 1e-4};
  Check det{"detector_wrong_combination_M1", 1e-2};
  det.lower_bound = true;
  Check extra{"extra_d2_operator_on_f_k", 1e-4};
  extra.informational = true;
  for (const auto& p : pts) {
    const auto sb = radial::stencil_basis(m, p, cfg.tol);
    const auto r = radial::residual_system(m, sb, radial::Combination::solution, variant);
    for (int j = 0; j <= m.d(); ++j) {
      json w = point_json(p);
      w["j"] = j;
      if (j >= 1) m1.record(r.system.m1[static_cast<size_t>(j)], w);
      if (j <= m.d() - 1) m2.record(r.system.m2[static_cast<size_t>(j)], w);
      if (j >= 1 && j <= m.d() - 1) m3.record(r.system.m3[static_cast<size_t>(j)], w);
      m6.record(radial::apply_omega(sb.combine(m.z_row(j)), p.y1, p.y2, m.rep().lambda2, sb.h, variant), w);
    }
    for (int k = 0; k <= m.d(); ++k) {
      json w = point_json(p);
      w["k"] = k;
      om.record(r.omega[static_cast<size_t>(k)], w);
    }
    const auto wrong = radial::residual_system(m, sb, radial::Combination::identity);
    det.record(*std::max_element(wrong.system.m1.begin(), wrong.system.m1.end()), point_json(p));
    if (variant == radial::OmegaVariant::standard) {
      const auto pm6 = radial::omega_on_basis(m, sb, radial::OmegaVariant::extra_d2);
      for (int k = 0; k <= m.d(); ++k) {
        json w = point_json(p);
        w["k"] = k;
        extra.record(pm6[static_cast<size_t>(k)], w);
      }
    }
  }
  notes["system_skipped_near_diagonal"] = skipped;
  notes["operator"] = radial::to_string(variant);
  for (Check* c : {&m1, &m2, &m3, &om, &m6, &det}) checks.push_back(*c);
  if (variant == radial::OmegaVariant::standard) checks.push_back(extra);
}

void verify_restriction(std::vector<Check>& checks, const RunConfig& cfg, int d_max, json& notes) {
  Check beta{"restriction_beta_sum_exact"};
  for (int d = 1; d <= d_max; ++d) {
    const mpq_class expected(mpz_class(1), mpz_class(1) << d);
    for (int j = 0; j <= d; ++j) {
      const auto s = radial::restriction_beta_sum(d, j);
      beta.record_exact(s.times_pi && s.coeff == expected, {{"d", d}, {"j", j}});
    }
  }
  checks.push_back(beta);
  if (cfg.chr.t() != cfg.rep.d()) {
    notes["restriction_numeric"] = "skipped: needs |m0| = d";
    return;
  }
  const radial::RadialModel m(cfg.rep, cfg.chr, cfg.mode);
  Check val{"restriction_value", 1e-7}, der{"restriction_derivative", 1e-7};
  for (double y : {0.5, 1.0, 2.0})
    for (int j = 0; j <= m.d(); ++j) {
      const auto r = radial::restriction_identity(m, j, y, cfg.tol);
      val.record(r.value.rel_err, {{"y", y}, {"j", j}});
      der.record(r.derivative.rel_err, {{"y", y}, {"j", j}});
    }
  checks.push_back(val);
  checks.push_back(der);
}

int cmd_verify(const RunConfig& cfg, const std::string& which, int d_max_override, const std::string& op,
               std::ostream& out, std::ostream& err) {
  radial::OmegaVariant variant;
  try {
    variant = radial::parse_omega_variant(op);
  } catch (const std::invalid_argument& e) {
    throw InvalidParameters(e.what());
  }
  static const std::vector<std::string> kAll{"recurrences", "derivatives", "system", "restriction", "binom", "ode"};
  if (which != "all" && std::find(kAll.begin(), kAll.end(), which) == kAll.end()) {
    throw InvalidParameters("--which must be one of recurrences, derivatives, system, restriction, binom, ode, all");
  }
  const bool needs_model = which == "all" || which == "derivatives" || which == "system" || which == "restriction" ||
                           which == "ode";
  if (needs_model) {
    radial::validate(cfg.rep, cfg.chr, cfg.mode);
    warn_formal(cfg, cfg.rep.d(), err);
  }
  auto want = [&](const char* w) { return which == "all" || which == w; };
  std::vector<Check> checks;
  json notes = json::object();
  if (want("recurrences")) verify_recurrences(checks, d_max_override > 0 ? d_max_override : 12, 8);
  if (want("binom")) verify_binom(checks, d_max_override > 0 ? d_max_override : 20);
  if (want("ode")) verify_ode(checks, cfg);
  if (want("derivatives")) verify_derivatives(checks, cfg, notes);
  if (want("system")) verify_system(checks, cfg, variant, notes);
  if (want("restriction")) verify_restriction(checks, cfg, d_max_override > 0 ? d_max_override : 12, notes);

  bool all_pass = true;
  json arr = json::array();
  for (const auto& c : checks) {
    all_pass = all_pass && c.pass();
    arr.push_back(c.to_json());
    if (!c.pass()) err << "FAILED " << c.name << "\n";
  }
  json report{{"which", which}, {"params", params_json(cfg)}, {"checks", arr}, {"pass", all_pass}};
  if (!notes.empty()) report["notes"] = notes;
  emit(cfg, out, report.dump(2) + "\n");
  return all_pass ? kExitOk : kExitCheckFailed;
}

// ---- detconj ----

int cmd_detconj(const RunConfig& cfg, int d_min, int d_max, const std::string& mode, std::ostream& out,
                std::ostream& err) {
  if (d_max < 1) throw InvalidParameters("d_max >= 1 violated");
  if (d_min < 1 || d_min > d_max) throw InvalidParameters("1 <= d_min <= d_max violated");
  if (mode != "auto" && mode != "symbolic" && mode != "sampled") {
    throw InvalidParameters("detconj --mode must be auto, symbolic or sampled");
  }
  json arr = json::array();
  bool all = true;
  std::optional<exact::ConjectureOutcome> first_bad;
  for (int d = d_min; d <= d_max; ++d) {
    const exact::ConjectureMode cm =
        mode == "symbolic" || (mode == "auto" && d <= 8) ? exact::ConjectureMode::symbolic : exact::ConjectureMode::sampled;
    const auto o = exact::check_det_conjecture(d, cm);
    json j = exact::to_json(o);
    if (o.computed) j["computed_factored"] = exact::factored_str(*o.computed);
    j["conjectured_factored"] = exact::factored_str(exact::conjectured_det(d));
    arr.push_back(j);
    if (!o.match) {
      all = false;
      if (!first_bad) first_bad = o;
    }
  }
  emit(cfg, out, json{{"results", arr}, {"all_match", all}}.dump(2) + "\n");
  if (first_bad) {
    err << "mismatch at d = " << first_bad->d;
    if (first_bad->witness) {
      err << ", t = " << first_bad->witness->t << ": computed " << first_bad->witness->computed.get_str()
          << ", conjectured " << first_bad->witness->conjectured.get_str();
    }
    err << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

// ---- tables ----

int cmd_tables(const RunConfig& cfg, int d_min, int d_max, std::ostream& out) {
  if (d_min < 1 || d_max < d_min) throw InvalidParameters("1 <= d_min <= d_max violated");
  const std::string fmt = format_or(cfg, "text");
  std::ostringstream s;
  json arr = json::array();
  for (int d = d_min; d <= d_max; ++d) {
    const auto z = exact::build_symbolic_matrix(d, exact::Variant::Z);
    const auto det = exact::det_exact(z);
    if (fmt == "json") {
      json j = exact::to_json(z);
      j["det"] = exact::to_json(det);
      j["det_factored"] = exact::factored_str(det.value);
      arr.push_back(j);
      continue;
    }
    s << "Z_" << d << "\n";
    for (int j = 0; j <= d; ++j) {
      for (int k = 0; k <= d; ++k) s << (k ? " | " : "") << exact::factored_str(z.at(j, k));
      s << "\n";
    }
    s << "det Z_" << d << " = " << exact::factored_str(det.value) << "\n\n";
  }
  emit(cfg, out, fmt == "json" ? json{{"tables", arr}}.dump(2) + "\n" : s.str());
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Radial Whittaker function evaluation and identity checks"};
  app.require_subcommand(1);

  CommonFlags eval_f, coeffs_f, verify_f, detconj_f, tables_f;
  std::string kind = "phi";
  auto* eval = app.add_subcommand("eval", "evaluate f_k, g_j or phi components on a grid");
  add_param_flags(eval, eval_f);
  eval->add_option("--kind", kind, "f, g or phi (default phi)");

  auto* coeffs = app.add_subcommand("coeffs", "exact coefficient matrix and determinant");
  add_param_flags(coeffs, coeffs_f);
  std::optional<int> coeffs_d;
  bool symbolic = false;
  std::string variant = "Z";
  std::string scale = "1";
  coeffs->add_option("--d", coeffs_d, "matrix size d (overrides lambda1 - lambda2)");
  coeffs->add_flag("--symbolic", symbolic, "entries as rational functions of t");
  coeffs->add_option("--variant", variant, "X or Z (default Z)");
  coeffs->add_option("--scale", scale, "overall constant multiple p/q (default 1)");

  auto* verify = app.add_subcommand("verify", "run identity checks and report max residuals");
  add_param_flags(verify, verify_f);
  std::string which = "all";
  int verify_dmax = 0;
  verify->add_option("--which", which, "recurrences|derivatives|system|restriction|binom|ode|all");
  verify->add_option("--d-max", verify_dmax, "largest d for the exact checks");
  std::string verify_op = "standard";
  verify->add_option("--operator", verify_op, "second-order operator form: standard or extra_d2");

  auto* detconj = app.add_subcommand("detconj", "compare det Z_d with the conjectured closed form");
  add_output_flags(detconj, detconj_f);
  int dc_min = 1, dc_max = 7;
  std::string dc_mode = "auto";
  detconj->add_option("--d-min", dc_min, "smallest d (default 1)");
  detconj->add_option("--d-max", dc_max, "largest d (default 7)");
  detconj->add_option("--mode", dc_mode, "auto (symbolic up to 8, then sampled), symbolic or sampled");

  auto* tables = app.add_subcommand("tables", "print Z_d as rational functions of t with det Z_d");
  add_output_flags(tables, tables_f);
  int tb_min = 1, tb_max = 7;
  std::optional<int> tb_d;
  tables->add_option("--d-min", tb_min, "smallest d (default 1)");
  tables->add_option("--d-max", tb_max, "largest d (default 7)");
  tables->add_option("--d", tb_d, "single d");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*eval) return cmd_eval(resolve(eval_f), kind, out, err);
    if (*coeffs) return cmd_coeffs(resolve(coeffs_f), coeffs_d, symbolic, variant, scale, out, err);
    if (*verify) return cmd_verify(resolve(verify_f), which, verify_dmax, verify_op, out, err);
    if (*detconj) return cmd_detconj(resolve(detconj_f), dc_min, dc_max, dc_mode, out, err);
    if (*tables) {
      if (tb_d) tb_min = tb_max = *tb_d;
      return cmd_tables(resolve(tables_f), tb_min, tb_max, out);
    }
  } catch (const InvalidParameters& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const AccuracyError& e) {
    err << "error: quadrature failure: " << e.what() << " (best estimate " << e.best_estimate() << ", achieved error "
        << e.achieved_error() << ")\n";
    return kExitQuadrature;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sw::cli
