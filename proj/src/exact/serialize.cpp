#include "sw/exact/serialize.hpp"

#include <map>
#include <sstream>
#include <vector>

namespace sw::exact {

using nlohmann::json;

json to_json(const mpz_class& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) return json(v.get_si());
  return json(v.get_str());
}

namespace {

json coeff_array(const Polynomial& p) {
  json a = json::array();
  for (const auto& c : p.coefficients()) a.push_back(to_json(c));
  if (a.empty()) a.push_back(0);
  return a;
}

Polynomial poly_from_json(const json& a) {
  std::vector<mpz_class> c;
  for (const auto& v : a) {
    c.emplace_back(v.is_string() ? mpz_class(v.get<std::string>()) : mpz_class(v.get<long>()));
  }
  return Polynomial(std::move(c));
}

const char* variant_name(Variant v) { return v == Variant::X ? "X" : "Z"; }

template <class S>
json matrix_json(const CoeffMatrix<S>& m) {
  json rows = json::array();
  json eps = json::array();
  for (int j = 0; j <= m.d; ++j) {
    json row = json::array();
    for (int k = 0; k <= m.d; ++k) row.push_back(to_json(m.at(j, k)));
    rows.push_back(std::move(row));
    eps.push_back(m.eps_exponent(j));
  }
  return {{"d", m.d}, {"variant", variant_name(m.variant)}, {"eps_exponents", eps}, {"entries", rows}};
}

struct Factored {
  mpz_class content;                 // signed
  std::map<long, int> roots;         // root -> multiplicity
  std::map<long, int> even_pairs;    // c -> multiplicity of (t^2 - c^2)
  Polynomial rest;
};

Factored factor_linear(const Polynomial& p) {
  Factored f;
  f.content = p.content();
  if (p.leading() < 0) f.content = -f.content;
  Polynomial q = p.divide_exact(f.content);
  const long bound = 4L * (q.degree() + 8);
  for (long c = -bound; c <= bound && q.degree() > 0; ++c) {
    const Polynomial lin = Polynomial::linear(c);
    while (q.degree() > 0 && q.evaluate(mpq_class(c)) == 0) {
      q = divide_exact(q, lin);
      ++f.roots[c];
    }
  }
  // pair (t - c)(t + c) into t^2 - c^2 for readability
  for (auto& [c, mult] : f.roots) {
    if (c <= 0) continue;
    auto neg = f.roots.find(-c);
    if (neg == f.roots.end()) continue;
    const int paired = std::min(mult, neg->second);
    f.even_pairs[c] = paired;
    mult -= paired;
    neg->second -= paired;
  }
  f.rest = q;
  return f;
}

std::string factors_str(const Factored& f, int& count) {
  std::ostringstream os;
  count = 0;
  auto emit = [&](const std::string& base, int mult) {
    if (mult <= 0) return;
    if (count++) os << "*";
    os << base;
    if (mult > 1) os << "^" << mult;
  };
  for (const auto& [c, mult] : f.roots) {
    if (c == 0) emit("t", mult);
  }
  for (const auto& [c, mult] : f.even_pairs) emit("(t^2 - " + std::to_string(c * c) + ")", mult);
  for (const auto& [c, mult] : f.roots) {
    if (c == 0) continue;
    emit(c > 0 ? "(t - " + std::to_string(c) + ")" : "(t + " + std::to_string(-c) + ")", mult);
  }
  if (f.rest.degree() > 0) emit("(" + f.rest.str() + ")", 1);
  return os.str();
}

}  // namespace

json to_json(const RationalFunction& r) { return {{"num", coeff_array(r.num())}, {"den", coeff_array(r.den())}}; }

json to_json(const mpq_class& q) {
  return {{"num", json::array({to_json(mpz_class(q.get_num()))})},
          {"den", json::array({to_json(mpz_class(q.get_den()))})}};
}

RationalFunction rational_function_from_json(const json& j) {
  return RationalFunction(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

json to_json(const NumericMatrix& m) { return matrix_json(m); }
json to_json(const SymbolicMatrix& m) { return matrix_json(m); }

json to_json(const RecurrenceReport& r) {
  json fails = json::array();
  for (const auto& f : r.failures) fails.push_back({{"equation", f.equation}, {"j", f.j}, {"k", f.k}});
  return {{"d", r.d}, {"instances", r.instances}, {"holds", r.holds()}, {"counterexamples", fails}};
}

json to_json(const ConjectureOutcome& o) {
  json j = {{"d", o.d},
            {"mode", o.mode == ConjectureMode::symbolic ? "symbolic" : "sampled"},
            {"match", o.match},
            {"eps_exponent", o.d * (o.d + 1) / 2},
            {"nonzero_at_valid_t", o.nonzero_at_valid_t}};
  if (o.mode == ConjectureMode::sampled) j["samples"] = o.samples;
  if (o.computed) j["det"] = to_json(*o.computed);
  if (o.witness) {
    j["witness"] = {{"t", o.witness->t},
                    {"computed", to_json(o.witness->computed)},
                    {"conjectured", to_json(o.witness->conjectured)}};
  }
  return j;
}

std::string factored_str(const RationalFunction& r) {
  if (r.is_zero()) return "0";
  Factored num = factor_linear(r.num());
  Factored den = factor_linear(r.den());
  mpq_class scale(num.content, den.content);
  scale.canonicalize();

  int nf = 0, df = 0;
  std::string ns = factors_str(num, nf);
  std::string ds = factors_str(den, df);

  std::ostringstream os;
  const mpz_class sn = scale.get_num();
  const mpz_class sd = scale.get_den();
  if (sn < 0) os << "-";
  const mpz_class an = abs(sn);
  if (nf == 0) {
    os << an.get_str();
  } else {
    if (an != 1) os << an.get_str() << "*";
    os << ns;
  }
  if (df > 0 || sd != 1) {
    os << "/";
    if (df == 0) {
      os << sd.get_str();
    } else {
      const bool wrap = df > 1 || sd != 1;
      if (wrap) os << "(";
      if (sd != 1) os << sd.get_str() << "*";
      os << ds;
      if (wrap) os << ")";
    }
  }
  return os.str();
}

}  // namespace sw::exact
