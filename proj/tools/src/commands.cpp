#include "ahscatter/cli/commands.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ahscatter/cli/checks.hpp"
#include "ahscatter/cli/output.hpp"
#include "ahscatter/dnmap.hpp"
#include "ahscatter/errors.hpp"
#include "ahscatter/fg.hpp"
#include "ahscatter/gauge.hpp"
#include "ahscatter/indicial.hpp"
#include "ahscatter/scattering.hpp"

namespace ahscatter::cli {

namespace {

/// Bad input that CLI11 cannot see (malformed list, unreadable file, ...).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& text, const char* what) {
  const std::string s = trim(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v))
    throw UsageError(std::string("invalid ") + what + ": '" + text + "'");
  return v;
}

// Accepts "a", "a+bi", "a-bi", "bi", "i".
cplx parse_complex(const std::string& text) {
  std::string s = trim(text);
  if (s.empty()) throw UsageError("invalid complex number: ''");
  if (s.back() != 'i') return {parse_double(s, "number"), 0.0};
  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;)
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  auto imag_part = [&](const std::string& t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_double(t, "imaginary part");
  };
  if (split == std::string::npos) return {0.0, imag_part(s)};
  return {parse_double(s.substr(0, split), "real part"), imag_part(s.substr(split))};
}

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(item, what));
  if (out.empty()) throw UsageError(std::string("empty ") + what + " list");
  return out;
}

Rational json_rational(const json& v, const char* what) {
  if (v.is_number()) {
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw UsageError(std::string(what) + ": non-finite number");
    return to_rational(d);
  }
  if (v.is_string()) {
    try {
      Rational q(trim(v.get<std::string>()));
      q.canonicalize();
      return q;
    } catch (const std::invalid_argument&) {
    }
  }
  throw UsageError(std::string(what) + ": expected a number or a \"p/q\" string");
}

std::string exact_str(const QComplex& z) {
  if (z.imag() == 0) return z.real().get_str();
  return z.str();
}

json exact_vec(const std::vector<QComplex>& v) {
  json a = json::array();
  for (const auto& z : v) a.push_back(to_json(z.to_complex()));
  return a;
}

json matrix_json(const Eigen::MatrixXcd& M) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    json r = json::array();
    for (Eigen::Index j = 0; j < M.cols(); ++j) r.push_back(to_json(M(i, j)));
    rows.push_back(std::move(r));
  }
  return rows;
}

json packed_labels(int n) {
  json a = json::array();
  for (int s = 0; s < packed_size(n); ++s) {
    const auto [i, j] = packed_pair(s, n);
    a.push_back(std::to_string(i + 1) + std::to_string(j + 1));
  }
  return a;
}

double tol_scale_from_env() {
  const char* env = std::getenv("AHSCATTER_TOL_SCALE");
  if (env == nullptr || *env == '\0') return 1.0;
  const double v = parse_double(env, "AHSCATTER_TOL_SCALE");
  if (!(v > 0.0)) throw UsageError("AHSCATTER_TOL_SCALE must be positive");
  return v;
}

Covector default_axis(int n) { return Covector::unit(n, 0); }

// ---------------------------------------------------------------- commands

Document cmd_indicial(const std::string& op, int n_in, const std::string& lambda_text) {
  Document d;
  const Dim n(n_in);
  d.inputs["op"] = op;
  d.inputs["n"] = n_in;
  auto block_json = [](const IndicialBlock& b) {
    json j;
    j["block"] = b.label;
    j["c"] = to_json(b.c);
    j["s_lower"] = to_json(b.lower);
    j["s_upper"] = to_json(b.upper);
    return j;
  };
  if (op == "J") {
    d.provenance = "indicial roots of the gauge operator J: blocks c = 2n and c = n + 1";
    const auto blocks = indicial_roots_J(n);
    json arr = json::array();
    for (const auto& b : blocks) {
      arr.push_back(block_json(b));
      d.outputs["s_lower_" + std::to_string(b.label)] = to_json(b.lower);
      d.outputs["s_upper_" + std::to_string(b.label)] = to_json(b.upper);
    }
    d.outputs["blocks"] = arr;
    return d;
  }
  const cplx lambda = parse_complex(lambda_text);
  d.inputs["lambda"] = to_json(lambda);
  const SpectralParam sp(lambda);
  d.inputs["epsilon"] = sp.eps();
  d.provenance = "indicial roots of L(lambda) on the four Sym^2 blocks, principal square-root branch";
  const auto blocks = indicial_roots_L(n, sp);
  json arr = json::array();
  for (const auto& b : blocks) {
    arr.push_back(block_json(b));
    d.outputs["s_lower_" + std::to_string(b.label)] = to_json(b.lower);
    d.outputs["s_upper_" + std::to_string(b.label)] = to_json(b.upper);
  }
  d.outputs["blocks"] = arr;
  d.outputs["ordering_check"] = ordering_check(n, sp);
  return d;
}

Document cmd_scattering(int n_in, const std::string& lambda_text, double xi_norm, const std::string& method) {
  Document d;
  const Dim n(n_in);
  const cplx lambda = parse_complex(lambda_text);
  d.inputs = {{"n", n_in}, {"lambda", to_json(lambda)}, {"xi_norm", xi_norm}, {"method", method}};
  d.provenance = "TT-mode scattering ratio G/F of the decaying solution x^{n/2} K_nu(x|xi|)";
  const cplx closed = scattering_ratio_closed(n, lambda, xi_norm);
  if (method == "closed" || method == "both") d.outputs["closed_form"] = to_json(closed);
  if (method == "ode" || method == "both") {
    if (lambda.imag() != 0.0) throw DomainError("the ODE path requires real lambda");
    const auto r = scattering_ratio_ode(n, lambda.real(), xi_norm);
    d.outputs["ratio"] = to_json(r.ratio);
    d.outputs["F"] = to_json(r.F);
    d.outputs["G"] = to_json(r.G);
    d.outputs["rel_err"] = r.rel_err;
    d.outputs["direct_ratio"] = to_json(r.direct_ratio);
    d.outputs["direct_rel_err"] = r.direct_rel_err;
    d.outputs["fit_rcond"] = r.rcond;
    d.outputs["series_order"] = r.series_order;
    d.outputs["ode_steps"] = r.ode_steps;
    if (method == "ode") d.outputs["closed_form"] = to_json(closed);
  }
  return d;
}

Document cmd_wronskian(int n_in, double lambda, double xi_norm, const std::string& samples_text) {
  Document d;
  const auto samples = parse_list(samples_text, "sample");
  d.inputs = {{"n", n_in}, {"lambda", lambda}, {"xi_norm", xi_norm}, {"samples", samples}};
  d.provenance = "Wronskian of the scalar pair x^{n/2} I_nu, x^{n/2} K_nu normalized to -x^{n-1}/2";
  const auto r = wronskian_check(Dim(n_in), lambda, xi_norm, samples);
  d.outputs["residual"] = r.residual;
  d.outputs["alpha_beta"] = r.alpha_beta;
  d.outputs["per_sample"] = r.per_sample;
  return d;
}

Document cmd_green(int n_in, double lambda, double x, double xp, double xi_norm) {
  Document d;
  d.inputs = {{"n", n_in}, {"lambda", lambda}, {"x", x}, {"x_prime", xp}, {"xi_norm", xi_norm}};
  d.provenance = "scalar mode Green function with P G = x^{n+1} delta(x - x')";
  d.outputs["G"] = green_mode_scalar(Dim(n_in), lambda, x, xp, xi_norm);
  return d;
}

Document cmd_gauge_jets(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read input file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("input is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() || !j.contains("xi") || !j["xi"].is_array() ||
      !j.contains("h_jets") || !j["h_jets"].is_array())
    throw UsageError("input must be {\"n\": int, \"xi\": [..], \"h_jets\": [[..], ..]}");

  Document d;
  const int nv = j["n"].get<int>();
  const Dim n(nv);
  const int m = nv + 1;
  std::vector<QComplex> xi;
  for (const auto& v : j["xi"]) xi.push_back(QComplex(json_rational(v, "xi")));
  if (static_cast<int>(xi.size()) != nv) throw UsageError("xi must have n entries");
  const auto& jets = j["h_jets"];
  if (jets.empty()) throw UsageError("h_jets must contain at least the order-0 coefficient");
  auto ht = JetSeries<QComplex>::zeros(packed_size(m), nv);
  for (std::size_t k = 0; k < jets.size(); ++k) {
    if (static_cast<int>(k) > nv) {
      d.warnings.push_back("h_jets orders above n are ignored");
      break;
    }
    std::vector<QComplex> packed;
    for (const auto& v : jets[k]) packed.push_back(QComplex(json_rational(v, "h_jets")));
    if (static_cast<int>(packed.size()) == packed_size(nv))
      packed = embed_tangential(nv, packed);
    else if (static_cast<int>(packed.size()) != packed_size(m))
      throw UsageError("h_jets[" + std::to_string(k) + "] must have n(n+1)/2 or (n+1)(n+2)/2 entries");
    ht.at(static_cast<int>(k)) = packed;
  }
  d.inputs = j;
  d.provenance = "Bianchi gauge jets: J omega + 2 beta h~ = O(x^{n+2}) with one x^{n+1} log x term, h = h~ + delta* omega";

  const auto g = gauge_jets<QComplex>(n, xi, ht);
  json omega = json::array();
  for (int k = 0; k <= g.omega.order; ++k)
    omega.push_back({{"order", k}, {"value", exact_vec(g.omega.at(k, 0))}, {"log", exact_vec(g.omega.at(k, 1))}});
  json h = json::array();
  for (int k = 0; k <= g.h.order; ++k) h.push_back({{"order", k}, {"value", exact_vec(g.h.at(k, 0))}});
  json labels = json::array();
  for (int s = 0; s < packed_size(m); ++s) {
    const auto [a, b] = packed_pair(s, m);
    labels.push_back(std::to_string(a) + std::to_string(b));
  }
  d.outputs["arithmetic"] = "exact";
  d.outputs["packed_order"] = labels;
  d.outputs["omega"] = omega;
  d.outputs["h"] = h;
  d.outputs["log_coefficient"] = exact_vec(g.log_coefficient);
  d.outputs["log_identity_constant"] = to_json(g.log_identity_constant.to_complex());
  d.outputs["normal_factor"] = to_json(g.normal_factor.to_complex());
  d.outputs["normal_factor_exact"] = exact_str(g.normal_factor);
  d.outputs["normal_factor_printed"] = to_json(g.normal_factor_printed.to_complex());
  d.outputs["normal_factor_mismatch"] = g.normal_factor_mismatch;
  d.outputs["bianchi_residual"] = g.bianchi_residual;
  if (g.normal_factor_mismatch)
    d.warnings.push_back("order n+1 normal factor -1/f1(n+1) = " + exact_str(g.normal_factor) +
                         " differs from the printed -1/(2n) = " + exact_str(g.normal_factor_printed));
  return d;
}

Document cmd_fg(int n_in, double xi_norm, int L) {
  Document d;
  const Dim n(n_in);
  if (L < 0) L = (n_in - 1) / 2;
  d.inputs = {{"n", n_in}, {"xi_norm", xi_norm}, {"L", L}};
  d.provenance = "TT-mode Fefferman-Graham coefficients a[2l] = -|xi|^2 a[2l-2] / (2l(n-2l)) vs printed d_2l";
  const auto f = fg_tt_coefficients(n, xi_norm, L);
  json exact = json::array();
  for (const auto& q : f.exact) exact.push_back(q.get_str());
  d.outputs["a"] = f.values;
  d.outputs["a_exact"] = exact;
  d.outputs["printed_d"] = f.printed_values;
  d.outputs["mismatch"] = f.mismatch;
  if (xi_norm > 0.0) {
    const auto c = fg_vs_frobenius(n, xi_norm);
    d.outputs["frobenius_deviation"] = c.max_deviation;
    d.outputs["frobenius_off_pattern"] = c.off_pattern;
  }
  for (std::size_t l = 0; l < f.mismatch.size(); ++l)
    if (f.mismatch[l]) d.warnings.push_back("a[" + std::to_string(2 * l) + "] differs from the printed d_" + std::to_string(2 * l));
  return d;
}

Document cmd_dn_symbol(const std::string& xi_text) {
  Document d;
  const Covector xi(parse_list(xi_text, "xi component"));
  const Dim n(xi.dim());
  d.inputs = {{"n", xi.dim()}, {"xi", std::vector<double>(xi.components().begin(), xi.components().end())}};
  d.provenance = "principal symbol c_n |xi|^n Theta(xi) on packed Sym^2, c_n = 2^-n Gamma(-n/2)/Gamma(n/2)";
  d.outputs["c_n"] = dn_coefficient(n);
  d.outputs["xi_norm"] = xi.norm();
  d.outputs["packed_order"] = packed_labels(n);
  d.outputs["theta"] = matrix_json(theta_symbol(n, xi));
  d.outputs["dn_symbol"] = matrix_json(dn_symbol(n, xi));
  return d;
}

Document cmd_dn_coefficient(int n_in) {
  Document d;
  d.inputs = {{"n", n_in}};
  d.provenance = "c_n = 2^-n Gamma(-n/2)/Gamma(n/2)";
  d.outputs["c_n"] = dn_coefficient(Dim(n_in));
  return d;
}

Document cmd_graham(int n_in) {
  Document d;
  const Dim n(n_in);
  d.inputs = {{"n", n_in}};
  d.provenance = "Graham constant a = (n-2) Gamma(-n/2) / (2^n (n-3) Gamma(n/2))";
  const double a = graham_constant(n);
  const double c = dn_coefficient(n);
  d.outputs["a"] = a;
  d.outputs["c_n"] = c;
  d.outputs["ratio_form"] = (n_in - 2.0) / (n_in - 3.0) * c;
  return d;
}

Document cmd_weyl(int n_in, const std::string& xi_text) {
  Document d;
  const Dim n(n_in);
  const Covector xi = xi_text.empty() ? default_axis(n_in) : Covector(parse_list(xi_text, "xi component"));
  if (xi.dim() != n_in) throw UsageError("--xi must have n components");
  d.inputs = {{"n", n_in}, {"xi", std::vector<double>(xi.components().begin(), xi.components().end())}};
  d.provenance = "W*W = kappa |xi|^4 Theta(xi) for the linearized Weyl symbol";
  const auto w = weyl_check(n, xi);
  d.outputs["kappa"] = w.constant;
  d.outputs["kappa_printed"] = w.printed;
  d.outputs["residual"] = w.residual;
  d.outputs["kappa_matches_printed"] = std::abs(w.constant - w.printed) <= 1e-8;
  return d;
}

Document cmd_cotton(const std::string& xi_text) {
  Document d;
  const Covector xi = xi_text.empty() ? default_axis(3) : Covector(parse_list(xi_text, "xi component"));
  if (xi.dim() != 3) throw UsageError("--xi must have 3 components");
  d.inputs = {{"n", 3}, {"xi", std::vector<double>(xi.components().begin(), xi.components().end())}};
  d.provenance = "|C| = mu |xi|^3 Theta(xi) for the linearized Cotton-York symbol";
  const auto c = cotton_check(xi);
  d.outputs["mu"] = c.fit.constant;
  d.outputs["mu_printed"] = c.fit.printed;
  d.outputs["residual"] = c.fit.residual;
  d.outputs["tt_eigenvalues"] = {c.tt_eig_lo, c.tt_eig_hi};
  const bool agree = std::abs(c.fit.constant - c.fit.printed) <= 1e-8;
  d.outputs["mu_matches_printed"] = agree;
  if (!agree) d.warnings.push_back("measured mu differs from the expected value 1");
  return d;
}

Document cmd_check(const CheckReport& r) {
  Document d;
  d.inputs = {{"suite", r.suite}, {"seed", r.seed}, {"tol_scale", r.tol_scale}};
  d.provenance = "acceptance criteria 1-13";
  json cases = json::array();
  for (const auto& c : r.cases) {
    json j;
    j["id"] = c.id;
    j["criterion"] = c.criterion;
    j["status"] = to_string(c.status);
    j["measured"] = c.measured;
    j["tolerance"] = c.tolerance;
    j["reference"] = c.reference ? json(*c.reference) : json(nullptr);
    j["basis"] = c.basis;
    j["informational"] = c.informational;
    if (!c.detail.empty()) j["detail"] = c.detail;
    cases.push_back(std::move(j));
    if (c.informational && c.status == CaseStatus::fail)
      d.warnings.push_back(c.id + ": " + (c.detail.empty() ? c.basis : c.detail) + " (reference " +
                           (c.reference ? std::to_string(*c.reference) : c.basis) + ")");
  }
  const auto s = r.summary();
  d.outputs["cases"] = cases;
  d.outputs["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"skip", s.skip},
                          {"informational_mismatch", s.informational_mismatch}};
  return d;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical checks for the linearized Dirichlet-to-Neumann map of Poincare-Einstein metrics", "ahscatter"};
  app.fallthrough();
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  // Shared state filled by whichever subcommand is selected.
  int n = 0, L = -1;
  std::string op, lambda_text, method = "both", samples = "0.5,1,2,5", input, xi_text, suite = "all";
  double lambda = 0.0, xi_norm = 1.0, x = 0.0, xp = 0.0, tol_scale = 0.0;
  std::uint64_t seed = 42;

  auto* ind = app.add_subcommand("indicial", "Indicial roots of J or L(lambda)");
  ind->add_option("--op", op, "Operator")->required()->check(CLI::IsMember({"J", "L"}));
  ind->add_option("--n", n, "Boundary dimension")->required();
  ind->add_option("--lambda", lambda_text, "Spectral parameter (a, a+bi); required for L");

  auto* sc = app.add_subcommand("scattering", "TT-mode scattering ratio");
  sc->add_option("--n", n)->required();
  sc->add_option("--lambda", lambda_text)->required();
  sc->add_option("--xi-norm", xi_norm, "|xi|");
  sc->add_option("--method", method)->check(CLI::IsMember({"ode", "closed", "both"}));

  auto* wr = app.add_subcommand("wronskian", "Wronskian normalization residual");
  wr->add_option("--n", n)->required();
  wr->add_option("--lambda", lambda)->required();
  wr->add_option("--xi-norm", xi_norm);
  wr->add_option("--samples", samples, "Comma-separated x samples; the first fixes the normalization");

  auto* gm = app.add_subcommand("green-mode", "Scalar mode Green function");
  gm->add_option("--n", n)->required();
  gm->add_option("--lambda", lambda)->required();
  gm->add_option("--x", x)->required();
  gm->add_option("--x-prime", xp)->required();
  gm->add_option("--xi-norm", xi_norm);

  auto* gj = app.add_subcommand("gauge-jets", "Bianchi gauge jets from a JSON file");
  gj->add_option("--input", input, "{\"n\": int, \"xi\": [..], \"h_jets\": [[..], ..]}")->required();

  auto* fgc = app.add_subcommand("fg-coeffs", "TT Fefferman-Graham coefficients");
  fgc->add_option("--n", n)->required();
  fgc->add_option("--xi-norm", xi_norm);
  fgc->add_option("--L", L, "Highest l (default (n-1)/2)");

  auto* dns = app.add_subcommand("dn-symbol", "Principal symbol c_n |xi|^n Theta(xi)");
  dns->add_option("--xi", xi_text, "Comma-separated covector")->required();

  auto* dnc = app.add_subcommand("dn-coefficient", "c_n = 2^-n Gamma(-n/2)/Gamma(n/2)");
  dnc->add_option("--n", n)->required();

  auto* gc = app.add_subcommand("graham-constant", "Graham's constant a(n)");
  gc->add_option("--n", n)->required();

  auto* wc = app.add_subcommand("weyl-check", "W*W proportionality to |xi|^4 Theta");
  wc->add_option("--n", n)->required();
  wc->add_option("--xi", xi_text, "Comma-separated covector (default e_1)");

  auto* cc = app.add_subcommand("cotton-check", "|C| proportionality to |xi|^3 Theta (n = 3)");
  cc->add_option("--xi", xi_text, "Comma-separated covector (default e_1)");

  auto* ck = app.add_subcommand("check", "Run acceptance check suites");
  ck->add_option("--suite", suite)->check(CLI::IsMember(suite_names()));
  ck->add_option("--seed", seed);
  auto* tol_opt = ck->add_option("--tol-scale", tol_scale, "Tolerance multiplier (default $AHSCATTER_TOL_SCALE or 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const Format fmt = format == "csv" ? Format::csv : Format::json;
  try {
    Document doc;
    int status = 0;
    if (*ind) {
      if (op == "L" && lambda_text.empty()) throw UsageError("--lambda is required for --op L");
      doc = cmd_indicial(op, n, lambda_text);
    } else if (*sc) {
      doc = cmd_scattering(n, lambda_text, xi_norm, method);
    } else if (*wr) {
      doc = cmd_wronskian(n, lambda, xi_norm, samples);
    } else if (*gm) {
      doc = cmd_green(n, lambda, x, xp, xi_norm);
    } else if (*gj) {
      doc = cmd_gauge_jets(input);
    } else if (*fgc) {
      doc = cmd_fg(n, xi_norm, L);
    } else if (*dns) {
      doc = cmd_dn_symbol(xi_text);
    } else if (*dnc) {
      doc = cmd_dn_coefficient(n);
    } else if (*gc) {
      doc = cmd_graham(n);
    } else if (*wc) {
      doc = cmd_weyl(n, xi_text);
    } else if (*cc) {
      doc = cmd_cotton(xi_text);
    } else if (*ck) {
      CheckContext ctx;
      ctx.seed = seed;
      ctx.tol_scale = tol_opt->count() > 0 ? tol_scale : tol_scale_from_env();
      if (!(ctx.tol_scale > 0.0)) throw UsageError("--tol-scale must be positive");
      const auto report = run_suite(suite, ctx);
      doc = cmd_check(report);
      status = report.ok() ? 0 : 1;
    }
    emit(doc, fmt, out);
    return status;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace ahscatter::cli
