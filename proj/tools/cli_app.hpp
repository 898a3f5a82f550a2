#pragma once

// hypolab command-line front end. `run` is separate from main() so tests can
// drive the exact same code path in-process.
//
// Exit codes: 0 success, 2 input error, 3 violation found with --fail-on-violation.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hypolab/hypolab.hpp"
#include "hypolab/json_io.hpp"
#include "hypolab/parallel.hpp"

namespace hypolab::cli {

using io::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitViolation = 3;
constexpr Degree kMaxDegreeCap = 2000;

struct RunConfig {
  std::string command;
  std::string symbol_json;
  std::string symbol_file;
  std::string output;
  std::string format = "json";
  bool fail_on_violation = false;
  bool pretty = false;
  unsigned threads = 0;

  // per-command parameters
  Degree u = 0, v = 0, w = 0, t = 0;
  Degree src = 0, dst = 0, k = 0;
  Degree max_degree = 0;
  unsigned sections = 1;
  std::string degrees, k_list, matrix_json;
  std::vector<std::string> axes;
  std::string a_text, rho_text, alpha_text;
  Degree k_max = 10;
  double tol = 1e-12;
};

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

inline std::vector<Degree> parse_degree_list(const std::string& s, const char* what) {
  std::vector<Degree> out;
  for (const auto& tok : split(s, ',')) {
    const Rational r = parse_rational(tok);
    if (r.get_den() != 1 || sgn(r) < 0 || r > 1'000'000)
      throw Error(ErrorCode::Parse, std::string(what) + " entries must be integers in [0, 1000000]");
    out.push_back(static_cast<Degree>(r.get_num().get_ui()));
  }
  if (out.empty()) throw Error(ErrorCode::Parse, std::string(what) + " must be a nonempty comma-separated list");
  return out;
}

/// "x", "x+yi", "x-yi", "yi" with x, y rationals.
inline ExactComplex parse_complex_text(std::string s) {
  std::erase_if(s, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
  if (s.empty()) throw Error(ErrorCode::Parse, "empty complex literal");
  if (s.back() != 'i') return ExactComplex(parse_rational(s));
  s.pop_back();
  std::size_t split_at = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;)
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/') {
      split_at = i;
      break;
    }
  auto imag = [](std::string part) {
    if (part.empty() || part == "+") return Rational(1);
    if (part == "-") return Rational(-1);
    return parse_rational(part);
  };
  if (split_at == std::string::npos) return {Rational(0), imag(s)};
  return {parse_rational(s.substr(0, split_at)), imag(s.substr(split_at))};
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("malformed JSON in ") + what + ": " + e.what());
  }
}

struct Outcome {
  json body;
  std::optional<std::string> csv;
  bool violation = false;
};

}  // namespace detail

class Runner {
 public:
  explicit Runner(RunConfig cfg) : cfg_(std::move(cfg)) {
    if (cfg_.threads == 0) cfg_.threads = default_thread_count();
  }

  detail::Outcome dispatch() {
    const std::string& c = cfg_.command;
    if (c == "project") return project();
    if (c == "inner") return inner();
    if (c == "commutator-element") return element();
    if (c == "qform") return qform();
    if (c == "compress") return compress();
    if (c == "psd") return psd();
    if (c == "scan") return scan();
    if (c == "limits") return limits();
    if (c == "spectrum") return spectrum();
    if (c == "sections") return sections();
    if (c == "converge") return converge();
    if (c == "check-main") return check_main();
    if (c == "check-specific") return check_specific();
    if (c == "compare-lushi") return compare_lushi();
    if (c == "threshold-example") return threshold();
    if (c == "classify-normal") return classify();
    if (c == "hardy-check") return hardy();
    if (c == "sweep") return sweep();
    throw Error(ErrorCode::Parse, "unknown command '" + c + "'");
  }

 private:
  json symbol_json() const {
    if (!cfg_.symbol_json.empty() && !cfg_.symbol_file.empty())
      throw Error(ErrorCode::Parse, "give exactly one of --symbol and --symbol-file");
    if (!cfg_.symbol_json.empty()) return detail::parse_json(cfg_.symbol_json, "--symbol");
    if (!cfg_.symbol_file.empty()) return detail::parse_json(detail::read_file(cfg_.symbol_file), "--symbol-file");
    throw Error(ErrorCode::Parse, "command '" + cfg_.command + "' needs --symbol or --symbol-file");
  }
  io::AnySymbol symbol() const { return io::decode_symbol(symbol_json()); }
  HarmonicPolySymbol harmonic() const { return io::as_harmonic(symbol()); }
  FourTermSymbol four_term() const { return io::as_four_term(symbol()); }

  TridiagonalModel model() const {
    if (!cfg_.a_text.empty()) {
      return {parse_rational(cfg_.a_text), cfg_.rho_text.empty() ? ExactComplex() : detail::parse_complex_text(cfg_.rho_text)};
    }
    return tridiagonal_model(four_term());
  }

  detail::Outcome project() const {
    const MonomialTerm t = hypolab::project(cfg_.u, cfg_.v);
    if (t.is_zero()) return {{{"result", "0"}}};
    return {{{"result", to_string(t.coeff) + "*z^" + std::to_string(t.degree)},
             {"coeff", t.coeff.re().get_str()},
             {"degree", t.degree}}};
  }

  detail::Outcome inner() const {
    return {{{"result", inner_product_projections(cfg_.u, cfg_.v, cfg_.w, cfg_.t).re().get_str()}}};
  }

  detail::Outcome element() const {
    const ExactComplex e = commutator_element(harmonic(), cfg_.src, cfg_.dst);
    return {{{"src", cfg_.src}, {"dst", cfg_.dst}, {"value", io::encode(e)}}};
  }

  detail::Outcome qform() const {
    const QuadraticFormMatrix3 q = quadratic_form_matrix(four_term(), cfg_.k);
    const PsdCertificate cert = psd_exact(q.to_matrix());
    json body = io::encode(q);
    body["psd"] = io::encode(cert);
    return {body, std::nullopt, !cert.is_psd()};
  }

  detail::Outcome compress() const {
    const auto degrees = detail::parse_degree_list(cfg_.degrees, "--degrees");
    const HermitianExactMatrix m = compression_matrix(harmonic(), degrees, cfg_.threads);
    const PsdCertificate cert = psd_exact(m);
    detail::Outcome out{{{"degrees", degrees}, {"matrix", io::encode(m)}, {"psd", io::encode(cert)}}};
    out.violation = !cert.is_psd();
    std::ostringstream csv;
    csv << "row,col,deg_row,deg_col,re,im\n";
    for (std::size_t i = 0; i < m.dim(); ++i)
      for (std::size_t j = 0; j < m.dim(); ++j)
        csv << i << ',' << j << ',' << degrees[i] << ',' << degrees[j] << ',' << m(i, j).re().get_str() << ','
            << m(i, j).im().get_str() << '\n';
    out.csv = csv.str();
    return out;
  }

  detail::Outcome psd() const {
    if (cfg_.matrix_json.empty()) throw Error(ErrorCode::Parse, "psd needs --matrix");
    const HermitianExactMatrix m = io::decode_matrix(detail::parse_json(cfg_.matrix_json, "--matrix"));
    const PsdCertificate cert = psd_exact(m);
    const FloatPsdResult f = psd_float(m, cfg_.tol);
    return {{{"exact", io::encode(cert)},
             {"float", {{"verdict", verdict_name(f.verdict)}, {"min_eigenvalue", f.min_eigenvalue}}}},
            std::nullopt,
            !cert.is_psd()};
  }

  detail::Outcome scan() const {
    if (cfg_.max_degree > kMaxDegreeCap)
      throw Error(ErrorCode::Precondition, "--max-degree is capped at " + std::to_string(kMaxDegreeCap));
    const ScanResult r = hypo_scan(harmonic(), cfg_.max_degree, cfg_.threads);
    detail::Outcome out{io::encode(r), std::nullopt, r.refuted};
    std::ostringstream csv;
    csv << "deg,re,im\n";
    for (const auto& [d, c] : r.witness) csv << d << ',' << c.re().get_str() << ',' << c.im().get_str() << '\n';
    out.csv = csv.str();
    return out;
  }

  detail::Outcome limits() const {
    const FourTermSymbol s = four_term();
    json body = {{"a", limit_a(s).get_str()}};
    body["rho"] = io::encode(limit_rho(s));
    return {body};
  }

  detail::Outcome spectrum() const {
    const SpectrumInterval iv = spectrum_interval(model());
    return {io::encode(iv), std::nullopt, !iv.lower_nonnegative};
  }

  detail::Outcome sections() const {
    const TridiagonalModel t = model();
    const auto eig = finite_section_eigenvalues(t, cfg_.sections);
    json body = {{"model", io::encode(t)}, {"N", cfg_.sections}, {"min_eig", eig.front()}, {"eigenvalues", eig}};
    if (const auto n = negative_section_size(t)) body["first_negative_section"] = *n;
    std::ostringstream csv;
    csv.precision(17);
    csv << "j,eigenvalue\n";
    for (std::size_t j = 0; j < eig.size(); ++j) csv << j + 1 << ',' << eig[j] << '\n';
    return {body, csv.str(), eig.front() < 0};
  }

  detail::Outcome converge() const {
    const auto ks = detail::parse_degree_list(cfg_.k_list, "--k-list");
    const FourTermSymbol s = four_term();
    const auto rows = convergence_report(s, ks);
    json arr = json::array();
    for (const auto& r : rows) arr.push_back(io::encode(r));
    return {{{"model", io::encode(tridiagonal_model(s))}, {"rows", arr}}, convergence_csv(rows)};
  }

  detail::Outcome check_main() const {
    const InequalityReport r = main_inequality(four_term());
    return {io::encode(r), std::nullopt, !r.holds};
  }

  detail::Outcome check_specific() const {
    const InequalityReport r = specific_case_inequality(four_term());
    return {io::encode(r), std::nullopt, !r.holds};
  }

  detail::Outcome compare_lushi() const {
    const LuShiComparison c = lu_shi_comparison(four_term());
    return {io::encode(c), std::nullopt, !c.sharpened.holds};
  }

  detail::Outcome threshold() const {
    std::optional<ExactComplex> alpha;
    if (!cfg_.alpha_text.empty()) alpha = detail::parse_complex_text(cfg_.alpha_text);
    const ThresholdReport t = revealing_threshold(cfg_.k_max, alpha);
    std::ostringstream csv;
    csv << "k,bound\n";
    for (const auto& [k, b] : t.bounds) csv << k << ',' << b.get_str() << '\n';
    return {io::encode(t), csv.str(), t.hyponormal.has_value() && !*t.hyponormal};
  }

  detail::Outcome classify() const { return {io::encode(classify_normal(four_term()))}; }

  detail::Outcome hardy() const {
    const HardyTrigSymbol h = io::decode_hardy(symbol_json());
    const HardyNecessaryVerdict nec = hardy_necessary(h);
    const HardyEqualModulusVerdict eq = hardy_equal_modulus(h);
    json body = {{"m", h.m()}, {"N", h.N()}, {"necessary", io::encode(nec)}, {"equal_modulus", io::encode(eq)}};
    return {body, std::nullopt, nec.fails || eq.verdict == HardyEqualModulus::NotHyponormal};
  }

  detail::Outcome sweep() const {
    const FourTermSymbol base = four_term();
    if (cfg_.axes.empty()) throw Error(ErrorCode::Parse, "sweep needs at least one --axis name=v1,v2,...");
    if (cfg_.max_degree > kMaxDegreeCap)
      throw Error(ErrorCode::Precondition, "--max-degree is capped at " + std::to_string(kMaxDegreeCap));
    validate_balanced(base);

    struct Axis {
      std::string name;
      std::vector<ExactComplex> values;
    };
    std::vector<Axis> axes;
    std::size_t total = 1;
    for (const auto& text : cfg_.axes) {
      const auto eq = text.find('=');
      if (eq == std::string::npos) throw Error(ErrorCode::Parse, "axis must look like name=v1,v2,...");
      Axis a{text.substr(0, eq), {}};
      if (a.name != "alpha" && a.name != "beta" && a.name != "gamma" && a.name != "delta")
        throw Error(ErrorCode::Parse, "axis name must be alpha, beta, gamma or delta");
      for (const auto& tok : detail::split(text.substr(eq + 1), ',')) a.values.push_back(detail::parse_complex_text(tok));
      if (a.values.empty()) throw Error(ErrorCode::Parse, "axis '" + a.name + "' has no values");
      total *= a.values.size();
      if (total > 1'000'000) throw Error(ErrorCode::Precondition, "sweep grid larger than 10^6 points");
      axes.push_back(std::move(a));
    }

    struct Row {
      FourTermSymbol symbol;
      InequalityReport main;
      std::optional<ScanResult> scan;
    };
    std::vector<Row> rows(total);
    parallel_for(total, cfg_.threads, [&](std::size_t idx) {
      FourTermSymbol s = base;
      std::size_t rest = idx;
      for (auto it = axes.rbegin(); it != axes.rend(); ++it) {
        const ExactComplex& v = it->values[rest % it->values.size()];
        rest /= it->values.size();
        if (it->name == "alpha") s.alpha = v;
        else if (it->name == "beta") s.beta = v;
        else if (it->name == "gamma") s.gamma = v;
        else s.delta = v;
      }
      Row r{s, main_inequality(s), std::nullopt};
      if (cfg_.max_degree > 0) r.scan = hypo_scan(to_harmonic(s), cfg_.max_degree);
      rows[idx] = std::move(r);
    });

    detail::Outcome out;
    json arr = json::array();
    std::ostringstream csv;
    csv << "index,alpha_re,alpha_im,beta_re,beta_im,gamma_re,gamma_im,delta_re,delta_im,lhs,rhs_squared,holds";
    if (cfg_.max_degree > 0) csv << ",scan_verdict,scan_value";
    csv << '\n';
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Row& r = rows[i];
      json row = {{"index", i},
                  {"alpha", io::encode(r.symbol.alpha)},
                  {"beta", io::encode(r.symbol.beta)},
                  {"gamma", io::encode(r.symbol.gamma)},
                  {"delta", io::encode(r.symbol.delta)},
                  {"main", io::encode(r.main)}};
      out.violation = out.violation || !r.main.holds;
      csv << i;
      for (const auto* c : {&r.symbol.alpha, &r.symbol.beta, &r.symbol.gamma, &r.symbol.delta})
        csv << ',' << c->re().get_str() << ',' << c->im().get_str();
      csv << ',' << r.main.lhs.get_str() << ',' << r.main.rhs_squared.get_str() << ','
          << (r.main.holds ? "true" : "false");
      if (r.scan) {
        row["scan"] = io::encode(*r.scan);
        out.violation = out.violation || r.scan->refuted;
        csv << ',' << (r.scan->refuted ? "REFUTED" : "PASSES_UP_TO") << ','
            << (r.scan->value ? r.scan->value->get_str() : "");
      }
      csv << '\n';
      arr.push_back(std::move(row));
    }
    out.body = {{"n", base.n}, {"m", base.m}, {"p", base.p}, {"q", base.q}, {"rows", std::move(arr)}};
    out.csv = csv.str();
    return out;
  }

  RunConfig cfg_;
};

/// Parses argv-style arguments (without the program name), runs the command
/// and writes the report. Returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"hypolab: exact hyponormality tests for Toeplitz operators on the Bergman space"};
  app.require_subcommand(1);
  RunConfig cfg;

  app.add_option("--symbol", cfg.symbol_json, "symbol as inline JSON");
  app.add_option("--symbol-file", cfg.symbol_file, "path to a symbol JSON file");
  app.add_option("-o,--output", cfg.output, "write the report here instead of stdout");
  app.add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--fail-on-violation", cfg.fail_on_violation, "exit 3 when a violation or refutation is found");
  app.add_flag("--pretty", cfg.pretty, "indent JSON output");
  app.add_option("--threads", cfg.threads, "worker threads (default: HYPOLAB_THREADS or hardware)");

  auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    s->callback([&cfg, name] { cfg.command = name; });
    return s;
  };

  auto* p = sub("project", "P(conj(z)^u z^v)");
  p->add_option("u", cfg.u)->required();
  p->add_option("v", cfg.v)->required();

  auto* in = sub("inner", "<P(conj(z)^u z^v), P(conj(z)^w z^t)>");
  in->add_option("u", cfg.u)->required();
  in->add_option("v", cfg.v)->required();
  in->add_option("w", cfg.w)->required();
  in->add_option("t", cfg.t)->required();

  auto* ce = sub("commutator-element", "<C z^src, z^dst>");
  ce->add_option("--src", cfg.src)->required();
  ce->add_option("--dst", cfg.dst)->required();

  sub("qform", "3x3 quadratic-form matrix along k, k+g, k+2g")->add_option("--k", cfg.k)->required();
  sub("compress", "compression of C to listed monomials")->add_option("--degrees", cfg.degrees)->required();

  auto* ps = sub("psd", "exact and floating PSD test of a Hermitian matrix");
  ps->add_option("--matrix", cfg.matrix_json)->required();
  ps->add_option("--tol", cfg.tol);

  sub("scan", "exact refutation search on degrees 0..D")->add_option("--max-degree", cfg.max_degree)->required();
  sub("limits", "limits a and rho");

  auto* sp = sub("spectrum", "spectrum [a - 2|rho|, a + 2|rho|] of the tridiagonal model");
  sp->add_option("--a", cfg.a_text, "override: diagonal a");
  sp->add_option("--rho", cfg.rho_text, "override: super-diagonal rho (x, x+yi)");

  auto* se = sub("sections", "eigenvalues of the N x N section");
  se->add_option("--n", cfg.sections)->required()->check(CLI::Range(1u, 1'000'000u));
  se->add_option("--a", cfg.a_text, "override: diagonal a");
  se->add_option("--rho", cfg.rho_text, "override: super-diagonal rho");

  sub("converge", "k^3-scaled entries versus the limits")->add_option("--k-list", cfg.k_list)->required();
  sub("check-main", "main necessary inequality");
  sub("check-specific", "p = m, q = n form of the main inequality");
  sub("compare-lushi", "factor-2 bound versus the Lu-Shi bound");

  auto* th = sub("threshold-example", "the conj(z)^2 + alpha z family");
  th->add_option("--k-max", cfg.k_max, "last k to list");
  th->add_option("--alpha", cfg.alpha_text, "decide a specific alpha");

  sub("classify-normal", "normality classification");
  sub("hardy-check", "Hardy-space tests for trigonometric symbols");

  auto* sw = sub("sweep", "grid over coefficients, one verdict row per point");
  sw->add_option("--axis", cfg.axes, "name=v1,v2,... (name in alpha, beta, gamma, delta)")->required();
  sw->add_option("--max-degree", cfg.max_degree, "also run an exact scan up to this degree");

  std::vector<std::string> argv{args.rbegin(), args.rend()};
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << json{{"error", "PARSE_ERROR"}, {"message", e.what()}}.dump() << '\n';
    return kExitInput;
  }

  try {
    Runner runner(cfg);
    const detail::Outcome result = runner.dispatch();
    std::string text;
    if (cfg.format == "csv") {
      if (!result.csv) throw Error(ErrorCode::Unsupported, "command '" + cfg.command + "' has no CSV form");
      text = *result.csv;
    } else {
      text = result.body.dump(cfg.pretty ? 2 : -1) + "\n";
    }
    if (cfg.output.empty()) {
      out << text;
    } else {
      std::ofstream f(cfg.output);
      if (!f) throw Error(ErrorCode::Parse, "cannot write " + cfg.output);
      f << text;
    }
    return cfg.fail_on_violation && result.violation ? kExitViolation : kExitOk;
  } catch (const Error& e) {
    err << json{{"error", error_name(e.code())}, {"message", e.what()}}.dump() << '\n';
    return kExitInput;
  } catch (const json::exception& e) {
    err << json{{"error", "PARSE_ERROR"}, {"message", e.what()}}.dump() << '\n';
    return kExitInput;
  }
}

}  // namespace hypolab::cli
