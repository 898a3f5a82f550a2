#pragma once

// JSON encoding. Rationals are strings "p/q" (q > 0, lowest terms) or "p";
// complex values are {"re": "...", "im": "..."}. Decoding also accepts JSON
// integers and bare strings for real coefficients.

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "hypolab/asymptotics.hpp"
#include "hypolab/commutator.hpp"
#include "hypolab/criteria.hpp"
#include "hypolab/psd.hpp"
#include "hypolab/symbols.hpp"

namespace hypolab::io {

using nlohmann::json;

inline json encode(const Rational& x) { return x.get_str(); }

inline Rational decode_rational(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  throw Error(ErrorCode::Parse, "expected a rational string or integer, got " + j.dump());
}

inline json encode(const ExactComplex& z) { return {{"re", z.re().get_str()}, {"im", z.im().get_str()}}; }

inline ExactComplex decode_complex(const json& j) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      if (key != "re" && key != "im" && key != "deg")
        throw Error(ErrorCode::Parse, "unexpected key '" + key + "' in complex value");
    const Rational re = j.contains("re") ? decode_rational(j.at("re")) : Rational(0);
    const Rational im = j.contains("im") ? decode_rational(j.at("im")) : Rational(0);
    return {re, im};
  }
  return ExactComplex(decode_rational(j));
}

inline Degree decode_degree(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0 || j.get<long long>() > 1'000'000)
    throw Error(ErrorCode::Parse, std::string(what) + " must be an integer in [0, 1000000], got " + j.dump());
  return static_cast<Degree>(j.get<long long>());
}

// ---- symbols ---------------------------------------------------------------

inline json encode(const HarmonicPolySymbol& s) {
  auto part = [](const HarmonicPolySymbol::Coefficients& c) {
    json arr = json::array();
    for (const auto& [d, v] : c) arr.push_back({{"deg", d}, {"re", v.re().get_str()}, {"im", v.im().get_str()}});
    return arr;
  };
  return {{"analytic", part(s.analytic())}, {"coanalytic", part(s.coanalytic())}};
}

inline json encode(const FourTermSymbol& s) {
  return {{"alpha", encode(s.alpha)}, {"n", s.n},         {"beta", encode(s.beta)},   {"m", s.m},
          {"gamma", encode(s.gamma)}, {"p", s.p},         {"delta", encode(s.delta)}, {"q", s.q}};
}

inline HarmonicPolySymbol decode_harmonic(const json& j) {
  HarmonicPolySymbol s;
  for (const auto* key : {"analytic", "coanalytic"}) {
    if (!j.contains(key)) continue;
    if (!j.at(key).is_array()) throw Error(ErrorCode::Parse, std::string(key) + " must be an array");
    for (const auto& term : j.at(key)) {
      if (!term.is_object() || !term.contains("deg")) throw Error(ErrorCode::Parse, "term needs a 'deg' field");
      const Degree d = decode_degree(term.at("deg"), "deg");
      if (std::string(key) == "analytic")
        s.add_analytic(d, decode_complex(term));
      else if (d == 0)
        throw Error(ErrorCode::Parse, "co-analytic degree 0 is not allowed; put constants in 'analytic'");
      else
        s.add_coanalytic(d, decode_complex(term));
    }
  }
  return s;
}

inline FourTermSymbol decode_four_term(const json& j) {
  FourTermSymbol s;
  for (const auto* key : {"n", "m", "p", "q"})
    if (!j.contains(key)) throw Error(ErrorCode::Parse, std::string("four-term symbol is missing '") + key + "'");
  s.n = decode_degree(j.at("n"), "n");
  s.m = decode_degree(j.at("m"), "m");
  s.p = decode_degree(j.at("p"), "p");
  s.q = decode_degree(j.at("q"), "q");
  if (j.contains("alpha")) s.alpha = decode_complex(j.at("alpha"));
  if (j.contains("beta")) s.beta = decode_complex(j.at("beta"));
  if (j.contains("gamma")) s.gamma = decode_complex(j.at("gamma"));
  if (j.contains("delta")) s.delta = decode_complex(j.at("delta"));
  s.validate();
  return s;
}

using AnySymbol = std::variant<FourTermSymbol, HarmonicPolySymbol>;

inline bool is_four_term(const json& j) {
  return j.is_object() && (j.contains("n") || j.contains("alpha") || j.contains("q"));
}

inline AnySymbol decode_symbol(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::Parse, "symbol must be a JSON object");
  if (is_four_term(j)) return decode_four_term(j);
  if (j.contains("analytic") || j.contains("coanalytic")) return decode_harmonic(j);
  throw Error(ErrorCode::Parse, "symbol needs either four-term keys or 'analytic'/'coanalytic'");
}

inline HarmonicPolySymbol as_harmonic(const AnySymbol& s) {
  if (const auto* f = std::get_if<FourTermSymbol>(&s)) return to_harmonic(*f);
  return std::get<HarmonicPolySymbol>(s);
}

inline const FourTermSymbol& as_four_term(const AnySymbol& s) {
  if (const auto* f = std::get_if<FourTermSymbol>(&s)) return *f;
  throw Error(ErrorCode::ShapeMismatch, "this operation needs the four-term symbol form");
}

inline HardyTrigSymbol decode_hardy(const json& j) {
  if (j.is_object() && j.contains("coeffs")) {
    HardyTrigSymbol h;
    for (const auto& term : j.at("coeffs")) {
      if (!term.is_object() || !term.contains("deg") || !term.at("deg").is_number_integer())
        throw Error(ErrorCode::Parse, "Hardy term needs an integer 'deg'");
      h.add(term.at("deg").get<long>(), decode_complex(term));
    }
    return h;
  }
  return HardyTrigSymbol::from_harmonic(as_harmonic(decode_symbol(j)));
}

// ---- matrices and certificates ---------------------------------------------

inline json encode(const HermitianExactMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(encode(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"dim", m.dim()}, {"entries", std::move(rows)}};
}

inline HermitianExactMatrix decode_matrix(const json& j) {
  const json& rows = j.is_object() ? j.at("entries") : j;
  std::vector<std::vector<ExactComplex>> out;
  for (const auto& row : rows) {
    auto& r = out.emplace_back();
    for (const auto& e : row) r.push_back(decode_complex(e));
  }
  if (out.empty()) throw Error(ErrorCode::Parse, "matrix must be nonempty");
  return HermitianExactMatrix::from_rows(out);
}

inline json encode(const PsdCertificate& c) {
  json out = {{"verdict", verdict_name(c.verdict)}};
  if (c.witness) {
    json w = json::array();
    for (const auto& x : *c.witness) w.push_back(encode(x));
    out["witness"] = std::move(w);
    out["witness_value"] = encode(*c.witness_value);
  }
  out["pivot_order"] = c.pivot_order;
  json d = json::array();
  for (const auto& v : c.pivot_values) d.push_back(encode(v));
  out["pivot_values"] = std::move(d);
  return out;
}

inline json encode(const ScanResult& r) {
  json out = {{"verdict", r.refuted ? "REFUTED" : "PASSES_UP_TO"}, {"max_degree", r.max_degree}};
  if (r.refuted) {
    out["witness_degrees"] = r.support();
    json w = json::array();
    for (const auto& [d, c] : r.witness) w.push_back({{"deg", d}, {"re", c.re().get_str()}, {"im", c.im().get_str()}});
    out["witness"] = std::move(w);
    out["value"] = r.value->get_str();
    out["explanation"] = "compression of the self-commutator to degrees 0.." + std::to_string(r.max_degree) +
                         " is not positive semidefinite; T_phi is not hyponormal";
  } else {
    out["explanation"] = "compression to degrees 0.." + std::to_string(r.max_degree) +
                         " is positive semidefinite; inconclusive beyond that";
  }
  return out;
}

inline json encode(const QuadraticFormMatrix3& q) {
  return {{"k", q.k},           {"l", q.l},           {"r", q.r},
          {"A00", encode(q.a00)}, {"A10", encode(q.a10)}, {"A01", encode(q.a01)},
          {"A20", encode(q.a20)}, {"A11", encode(q.a11)}, {"A02", encode(q.a02)}};
}

// ---- asymptotics ----------------------------------------------------------

inline json encode(const TridiagonalModel& t) { return {{"a", t.a.get_str()}, {"rho", encode(t.rho)}}; }

inline json encode(const SpectrumInterval& s) {
  return {{"a", s.a.get_str()},
          {"abs_rho", s.abs_rho_text()},
          {"abs_rho_sq", s.abs_rho_sq.get_str()},
          {"interval", {s.lower_text(), s.upper_text()}},
          {"interval_approx", {s.lower, s.upper}},
          {"lower_nonnegative", s.lower_nonnegative}};
}

inline json encode(const ConvergenceRow& r) {
  return {{"k", r.k},
          {"k3A00", r.s00.get_str()},
          {"k3A10", encode(r.s10)},
          {"k3A01", encode(r.s01)},
          {"k3A11", encode(r.s11)},
          {"k3A20", r.s20.get_str()},
          {"k3A02", r.s02.get_str()},
          {"dev00", r.dev00},
          {"dev10", r.dev10},
          {"dev11", r.dev11},
          {"dev20", r.dev20},
          {"dev02", r.dev02}};
}

// ---- criteria ---------------------------------------------------------------

inline json encode(const InequalityReport& r) {
  return {{"lhs", r.lhs.get_str()},
          {"rhs_squared", r.rhs_squared.get_str()},
          {"holds", r.holds},
          {"margin", r.margin},
          {"explanation", r.explanation}};
}

inline json encode(const LuShiComparison& c) {
  return {{"factor2_bound", encode(c.sharpened)},
          {"lu_shi_bound", encode(c.lu_shi)},
          {"factor2_bound_holds", c.sharpened.holds},
          {"lu_shi_bound_holds", c.lu_shi.holds},
          {"strictly_sharper", c.strictly_sharper}};
}

inline json encode(const ThresholdReport& t) {
  json bounds = json::array();
  for (const auto& [k, b] : t.bounds) bounds.push_back({{"k", k}, {"bound", b.get_str()}});
  json out = {{"family", "conj(z)^2 + alpha z"},
              {"bounds", std::move(bounds)},
              {"supremum", t.supremum.get_str()},
              {"threshold_abs_alpha", t.threshold_abs.get_str()},
              {"explanation", "hyponormal iff |alpha|^2 >= sup_k bound(k) = 4"}};
  if (t.alpha_abs_sq) {
    out["alpha_abs_sq"] = t.alpha_abs_sq->get_str();
    out["hyponormal"] = *t.hyponormal;
  }
  return out;
}

inline json encode(const NormalityVerdict& v) {
  json out = {{"normal", v.normal}, {"explanation", v.explanation}};
  if (v.type) out["type"] = normal_type_name(*v.type);
  if (v.lambda) out["lambda"] = encode(*v.lambda);
  return out;
}

inline json encode(const HardyNecessaryVerdict& v) {
  return {{"verdict", v.fails ? "FAILS" : "PASS"}, {"explanation", v.explanation}};
}

inline json encode(const HardyEqualModulusVerdict& v) {
  return {{"verdict", hardy_equal_modulus_name(v.verdict)}, {"normal", v.normal}, {"explanation", v.explanation}};
}

}  // namespace hypolab::io
