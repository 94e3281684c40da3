#include "ahscatter/cli/checks.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

#include "ahscatter/dnmap.hpp"
#include "ahscatter/fg.hpp"
#include "ahscatter/gauge.hpp"
#include "ahscatter/indicial.hpp"
#include "ahscatter/scattering.hpp"
#include "ahscatter/specfun.hpp"

namespace ahscatter::cli {

const char* to_string(CaseStatus s) {
  switch (s) {
    case CaseStatus::pass:
      return "pass";
    case CaseStatus::fail:
      return "fail";
    case CaseStatus::skip:
      return "skip";
  }
  return "fail";
}

CheckSummary CheckReport::summary() const {
  CheckSummary s;
  for (const auto& c : cases) {
    if (c.informational) {
      if (c.status == CaseStatus::fail) ++s.informational_mismatch;
      continue;
    }
    switch (c.status) {
      case CaseStatus::pass:
        ++s.pass;
        break;
      case CaseStatus::fail:
        ++s.fail;
        break;
      case CaseStatus::skip:
        ++s.skip;
        break;
    }
  }
  return s;
}

namespace {

// Deterministic stream per (seed, criterion); doubles built from the top 53
// bits so results do not depend on the standard library's distributions.
class Rng {
 public:
  Rng(std::uint64_t seed, int stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream)};
    g_.seed(seq);
  }
  double uniform(double a, double b) { return a + (b - a) * ((g_() >> 11) * 0x1.0p-53); }
  long integer(long lo, long hi) { return lo + static_cast<long>(g_() % static_cast<std::uint64_t>(hi - lo + 1)); }

 private:
  std::mt19937_64 g_;
};

std::string num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

struct Sink {
  const CheckContext& ctx;
  std::vector<CheckCase>& out;
  int criterion;

  void le(const std::string& id, double measured, double tol, const std::string& basis,
          std::optional<double> ref = std::nullopt, bool informational = false, std::string detail = {}) {
    CheckCase c;
    c.id = id;
    c.criterion = criterion;
    c.measured = measured;
    c.tolerance = tol * ctx.tol_scale;
    c.reference = ref;
    c.basis = basis;
    c.detail = std::move(detail);
    c.informational = informational;
    c.status = (std::isfinite(measured) && measured <= c.tolerance) ? CaseStatus::pass : CaseStatus::fail;
    out.push_back(std::move(c));
  }

  // Exact predicates: tolerance 0, measured 0 on success and 1 on failure.
  void exact(const std::string& id, bool ok, const std::string& basis, std::string detail = {}) {
    CheckCase c;
    c.id = id;
    c.criterion = criterion;
    c.measured = ok ? 0.0 : 1.0;
    c.tolerance = 0.0;
    c.basis = basis;
    c.detail = std::move(detail);
    c.status = ok ? CaseStatus::pass : CaseStatus::fail;
    out.push_back(std::move(c));
  }
};

std::string cid(int crit, const std::string& rest) {
  std::ostringstream os;
  os << 'c' << (crit < 10 ? "0" : "") << crit << '.' << rest;
  return os.str();
}

Covector random_xi(Rng& rng, int n) {
  for (;;) {
    std::vector<double> v(n);
    for (auto& e : v) e = rng.uniform(-1.0, 1.0);
    Covector xi(v);
    if (xi.norm() > 0.1) return xi;
  }
}

Rational random_rational(Rng& rng) {
  Rational q(rng.integer(-9, 9), rng.integer(1, 9));
  q.canonicalize();
  return q;
}

double max_abs(const Eigen::MatrixXcd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

// ---------------------------------------------------------------- criteria

void crit_graham_n3(const CheckContext& ctx, std::vector<CheckCase>& out) {
  Sink s{ctx, out, 1};
  const double c = dn_coefficient(Dim(3));
  s.le(cid(1, "c_n.n3"), std::abs(c - 1.0 / 3.0), 1e-12, "1/3", 1.0 / 3.0);
}

void crit_graham_constant(const CheckContext& ctx, std::vector<CheckCase>& out) {
  Sink s{ctx, out, 2};
  s.le(cid(2, "a.n5"), std::abs(graham_constant(Dim(5)) + 1.0 / 30.0), 1e-12, "-1/30", -1.0 / 30.0);
  s.le(cid(2, "a.n7"), std::abs(graham_constant(Dim(7)) - 1.0 / 1260.0), 1e-12, "1/1260", 1.0 / 1260.0);
  for (int n : {5, 7, 9}) {
    const double a = graham_constant(Dim(n));
    const double rhs = (n - 2.0) / (n - 3.0) * dn_coefficient(Dim(n));
    s.le(cid(2, "consistency.n" + std::to_string(n)), std::abs(a - rhs), 1e-13, "(n-2)/(n-3) c_n", rhs);
  }
}

void crit_a_symbol(const CheckContext& ctx, std::vector<CheckCase>& out) {
  Sink s{ctx, out, 3};
  Rng rng(ctx.seed, 3);
  for (int n = 3; n <= 9; ++n) {
    double comp = 0.0, inv = 0.0;
    for (int t = 0; t < 50; ++t) {
      const Covector xi = random_xi(rng, n);
      const Eigen::MatrixXd A = a_symbol(Dim(n), xi);
      comp = std::max(comp, (A - a_symbol_composed(Dim(n), xi)).cwiseAbs().maxCoeff());
      const Eigen::MatrixXd P = A * a_symbol_inverse(Dim(n), xi);
      inv = std::max(inv, (P - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff());
    }
    s.le(cid(3, "composition.n" + std::to_string(n)), comp, 1e-13, "D o tf o S");
    s.le(cid(3, "inverse.n" + std::to_string(n)), inv, 1e-12, "A A^{-1} = Id");
  }
}

Eigen::MatrixXd random_orthogonal(Rng& rng, int n) {
  Eigen::MatrixXd M(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M(i, j) = rng.uniform(-1.0, 1.0);
  return Eigen::HouseholderQR<Eigen::MatrixXd>(M).householderQ();
}

void crit_theta(const CheckContext& ctx, std::vector<CheckCase>& out) {
  Sink s{ctx, out, 4};
  Rng rng(ctx.seed, 4);
  for (int n : {3, 5, 7}) {
    const int N = packed_size(n);
    const int rank = n * (n - 1) / 2 - 1;
    const auto w = packed_weights(n);
    Eigen::VectorXd sw(N);
    for (int i = 0; i < N; ++i) sw[i] = std::sqrt(w[i]);
    double idem = 0, adj = 0, eig_dev = 0, range = 0, fixes = 0, equiv = 0;
    int bad_rank = 0;
    for (int t = 0; t < 100; ++t) {
      const Covector xi = random_xi(rng, n);
      const Sym2Map T = theta_symbol(Dim(n), xi);
      idem = std::max(idem, max_abs(T * T - T));
      adj = std::max(adj, max_abs(T - sym2_adjoint(T)));

      Eigen::MatrixXcd H = sw.asDiagonal() * T * sw.cwiseInverse().asDiagonal();
      H = (0.5 * (H + H.adjoint())).eval();
      const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(H, Eigen::EigenvaluesOnly).eigenvalues();
      int ones = 0;
      for (double e : ev) {
        eig_dev = std::max(eig_dev, std::min(std::abs(e), std::abs(e - 1.0)));
        if (e > 0.5) ++ones;
      }
      if (ones != rank) ++bad_rank;

      // trace(Theta h) = 0 and D(xi) Theta h = 0 for random h.
      Eigen::VectorXcd h(N);
      for (int i = 0; i < N; ++i) h[i] = rng.uniform(-1.0, 1.0);
      const Eigen::VectorXcd th = T * h;
      Sym2Value tv(n, std::vector<cplx>(th.data(), th.data() + N));
      range = std::max(range, std::abs(trace(tv)));
      for (const auto& d : div_symbol(xi, tv)) range = std::max(range, std::abs(d));

      // Theta fixes TT tensors: kernel of (trace; D(xi)).
      Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n + 1, N);
      for (int i = 0; i < n; ++i) C(0, packed_index(i, i, n)) = 1.0;
      C.bottomRows(n) = d_map(xi).real();
      const Eigen::MatrixXd K = Eigen::FullPivLU<Eigen::MatrixXd>(C).kernel();
      Eigen::VectorXd coef(K.cols());
      for (int i = 0; i < K.cols(); ++i) coef[i] = rng.uniform(-1.0, 1.0);
      const Eigen::VectorXcd tt = (K * coef).cast<cplx>();
      fixes = std::max(fixes, max_abs(T * tt - tt) / std::max(1.0, max_abs(tt)));
      if (K.cols() != rank) ++bad_rank;

      const Eigen::MatrixXd Q = random_orthogonal(rng, n);
      const Eigen::VectorXd qx = Q * to_eigen(xi);
      const Covector qxi(std::vector<double>(qx.data(), qx.data() + n));
      const Sym2Map AQ = sym2_action(Q);
      const Sym2Map AQinv = sym2_action(Q.transpose());
      equiv = std::max(equiv, max_abs(theta_symbol(Dim(n), qxi) - AQ * T * AQinv));
    }
    const std::string tag = ".n" + std::to_string(n);
    s.le(cid(4, "idempotent" + tag), idem, 1e-11, "Theta^2 = Theta");
    s.le(cid(4, "self_adjoint" + tag), adj, 1e-11, "packed-inner-product adjoint");
    s.le(cid(4, "eigen_cluster" + tag), eig_dev, 1e-11, "eigenvalues in {0, 1}");
    s.exact(cid(4, "rank" + tag), bad_rank == 0, "rank n(n-1)/2 - 1",
            "samples with wrong rank: " + std::to_string(bad_rank));
    s.le(cid(4, "range_tt" + tag), range, 1e-11, "trace and xi-divergence of Theta h vanish");
    s.le(cid(4, "fixes_tt" + tag), fixes, 1e-11, "Theta h = h on TT(xi)");
    s.le(cid(4, "rotation" + tag), equiv, 1e-10, "Theta(Q xi) = Q Theta(xi) Q^{-1}");
  }
}

void crit_scattering(const CheckContext& ctx, std::vector<CheckCase>& out) {
  Sink s{ctx, out, 5};
  for (int n : {3, 5, 7})
    for (double dl : {0.25, 0.4, 0.75})
      for (double xi : {0.5, 1.0, 2.0}) {
        const double lambda = n + dl;
        const auto r = scattering_ratio_ode(Dim(n), lambda, xi);
        s.le(cid(5, "n" + std::to_string(n) + ".lambda" + num(lambda) + ".xi" + num(xi)), r.rel_err, 1e-6,
             "2^{n-2l} Gamma(n/2-l)/Gamma(l-n/2) |xi|^{2l-n}", r.closed_form.real());
      }
}

void crit_wronskian(const CheckContext& ctx, std::vector<CheckCase>& out) {
  Sink s{ctx, out, 6};
  for (int n : {3, 5})
    for (double dl : {0.3, 0.8}) {
      const double lambda = n + dl;
      const auto r = wronskian_check(Dim(n), lambda, 1.0, {0.5, 1.0, 2.0, 5.0});
      s.le(cid(6, "n" + std::to_string(n) + ".lambda" + num(lambda)), r.residual, 1e-9, "u'v - v'u = -x^{n-1}/2");
    }
}

void crit_indicial(const CheckContext& ctx, std::vector<CheckCase>& out) {
  Sink s{ctx, out, 7};
  Rng rng(ctx.seed, 7);
  for (int n : {3, 5, 7}) {
    int failures = 0;
    for (int t = 0; t < 200; ++t) {
      double re, im;
      do {
        re = rng.uniform(n - 0.1, n + 2.0);
        im = rng.uniform(-0.1, 0.1);
      } while (!(re > n - 0.1) || !(std::abs(im) < 0.1));
      if (!ordering_check(Dim(n), SpectralParam(cplx(re, im)))) ++failures;
    }
    s.exact(cid(7, "ordering.n" + std::to_string(n)), failures == 0, "Re l < Re s3 < Re s0 < Re l + 2",
            "violations: " + std::to_string(failures) + " / 200");
  }
  const auto b3 = indicial_roots_L(Dim(3), SpectralParam(3.0));
  s.le(cid(7, "s_upper_3.n3"), std::abs(b3[3].upper - 4.0), 1e-12, "4", 4.0);
  const auto b5 = indicial_roots_L(Dim(5), SpectralParam(5.0));
  s.le(cid(7, "s_upper_3.n5"), std::abs(b5[3].upper - 6.0), 1e-12, "6", 6.0);
}

void crit_gauge_identity(const CheckContext& ctx, std::vector<CheckCase>& out) {
  Sink s{ctx, out, 8};
  Rng rng(ctx.seed, 8);
  for (int n : {3, 5, 7}) {
    int bad = 0;
    for (int t = 0; t < 10; ++t) {
      std::vector<QComplex> xi(n, QComplex(0));
      for (auto& e : xi) e = QComplex(random_rational(rng));
      const auto lhs = model_bianchi<QComplex>(Dim(n), xi).compose(model_delta_star<QComplex>(Dim(n), xi)) * QComplex(2);
      if (!lhs.equals(model_J<QComplex>(Dim(n), xi))) ++bad;
    }
    s.exact(cid(8, "two_beta_delta_star.n" + std::to_string(n)), bad == 0, "2 beta delta* = J (rational)",
            "mismatching covectors: " + std::to_string(bad) + " / 10");
  }
}

void crit_gauge_jets(const CheckContext& ctx, std::vector<CheckCase>& out) {
  Sink s{ctx, out, 9};
  Rng rng(ctx.seed, 9);
  const int n = 3, m = n + 1, N = packed_size(m);
  const std::vector<QComplex> e1 = {QComplex(1), QComplex(0), QComplex(0)};

  for (int t = 0; t < 3; ++t) {
    auto ht = JetSeries<QComplex>::zeros(N, n);
    // Boundary data is tangential: normal and mixed slots stay zero.
    for (int k = 0; k <= n; ++k) {
      std::vector<QComplex> tan(packed_size(n));
      for (auto& v : tan) v = QComplex(random_rational(rng));
      ht.at(k) = embed_tangential(n, tan);
    }
    const auto g = gauge_jets<QComplex>(Dim(n), e1, ht);
    bool tf0 = true;
    {
      QComplex tr(0);
      for (int i = 1; i < m; ++i) tr += g.h.at(0)[packed_index(i, i, m)];
      tf0 = tr == QComplex(0);
    }
    bool log_set = std::any_of(g.log_coefficient.begin(), g.log_coefficient.end(),
                               [](const QComplex& v) { return !v.is_zero(); });
    const std::string tag = "random" + std::to_string(t);
    s.exact(cid(9, tag + ".bianchi_through_n"), g.bianchi_residual == 0.0, "beta(h) = O(x^{n+1}) exactly");
    s.exact(cid(9, tag + ".h0_tangential_trace_free"), tf0, "tr h_0 = 0");
    s.exact(cid(9, tag + ".log_populated"), log_set, "x^{n+1} log x coefficient nonzero");
  }

  // TT input with Fefferman-Graham jets.
  {
    auto ht = JetSeries<QComplex>::zeros(N, n);
    const int slot = packed_index(2, 3, m);
    const auto a = fg_recursion_exact(Dim(n), Rational(1), (n - 1) / 2);
    for (int l = 0; 2 * l <= n - 1; ++l) ht.at(2 * l)[slot] = QComplex(a[l]);
    const auto g = gauge_jets<QComplex>(Dim(n), e1, ht);
    bool omega_zero = true;
    for (int k = 0; k <= n - 1; ++k)
      for (int j = 0; j < 2; ++j)
        for (const auto& v : g.omega.at(k, j)) omega_zero = omega_zero && v.is_zero();
    s.exact(cid(9, "tt.omega_vanishes"), omega_zero, "omega^k = 0 for k < n");
    s.exact(cid(9, "tt.h0_equals_input"), g.h.at(0) == ht.at(0), "h_0 = h~_0");
  }

  // Pure trace, xi = 0 and xi = e1.
  for (int variant = 0; variant < 2; ++variant) {
    auto ht = JetSeries<QComplex>::zeros(N, n);
    for (int i = 1; i < m; ++i) ht.at(0)[packed_index(i, i, m)] = QComplex(1);
    const std::vector<QComplex> xi = variant == 0 ? std::vector<QComplex>(n, QComplex(0)) : e1;
    const auto g = gauge_jets<QComplex>(Dim(n), xi, ht);
    std::vector<QComplex> expect(m, QComplex(0));
    expect[0] = QComplex(1);  // tr / n with tr = n
    s.exact(cid(9, std::string("trace.omega0.") + (variant == 0 ? "xi0" : "xi_e1")), g.omega.at(0) == expect,
            "omega^0 = (tr/n) dx/x");
  }
}

void crit_fg(const CheckContext& ctx, std::vector<CheckCase>& out) {
  Sink s{ctx, out, 10};
  for (int n : {3, 5, 7, 9}) {
    const auto c = fg_vs_frobenius(Dim(n), 1.0);
    s.exact(cid(10, "vs_frobenius.n" + std::to_string(n)), c.max_deviation == 0.0 && c.off_pattern == 0.0,
            "exact agreement with Frobenius on the TT mode",
            "orders compared: " + std::to_string(c.orders_compared));
  }
  const auto f = fg_tt_coefficients(Dim(5), 1.0, 2);
  s.exact(cid(10, "a4.n5"), f.exact[2] == Rational(1, 24), "a4 = 1/24");
  s.exact(cid(10, "d4_flag.n5"), f.mismatch.size() > 2 && f.mismatch[2] && std::abs(f.printed_values[2] + 1.0 / 12) < 1e-15,
          "printed d4 = -1/12 flagged");
  s.exact(cid(10, "d2_agrees.n5"), !f.mismatch[1], "a2 = d2 = -1/6");
}

void crit_weyl(const CheckContext& ctx, std::vector<CheckCase>& out) {
  Sink s{ctx, out, 11};
  Rng rng(ctx.seed, 11);
  for (int n : {5, 7}) {
    double res = 0.0, kdev = 0.0, kappa = 0.0;
    const double printed = (n - 3.0) / (n - 2.0);
    for (int t = 0; t < 10; ++t) {
      const auto w = weyl_check(Dim(n), random_xi(rng, n));
      res = std::max(res, w.residual);
      kdev = std::max(kdev, std::abs(w.constant - printed));
      kappa = w.constant;
    }
    s.le(cid(11, "proportional.n" + std::to_string(n)), res, 1e-10, "W*W = kappa |xi|^4 Theta");
    s.le(cid(11, "kappa.n" + std::to_string(n)), kdev, 1e-8, "(n-3)/(n-2)", printed, true,
         "measured kappa " + num(kappa));
  }
}

void crit_cotton(const CheckContext& ctx, std::vector<CheckCase>& out) {
  Sink s{ctx, out, 12};
  Rng rng(ctx.seed, 12);
  double res = 0.0, mdev = 0.0, mu = 0.0;
  for (int t = 0; t < 10; ++t) {
    const auto c = cotton_check(random_xi(rng, 3));
    res = std::max(res, c.fit.residual);
    mdev = std::max(mdev, std::abs(c.fit.constant - 1.0));
    mu = c.fit.constant;
  }
  s.le(cid(12, "proportional.n3"), res, 1e-8, "|C| = mu |xi|^3 Theta");
  s.le(cid(12, "mu.n3"), mdev, 1e-8, "1", 1.0, true, "measured mu " + num(mu));
}

void crit_specfun(const CheckContext& ctx, std::vector<CheckCase>& out) {
  Sink s{ctx, out, 13};
  Rng rng(ctx.seed, 13);
  // Half-integer closed forms, long double to keep the oracle's own
  // cancellation (x = 0.1, nu = 5/2) below the tolerance.
  using LD = long double;
  const LD pi = 3.141592653589793238462643383279502884L;
  double half_i = 0.0, half_k = 0.0;
  for (double x : {0.1, 1.0, 10.0}) {
    const LD X = x, sh = std::sinh(X), ch = std::cosh(X), pre_i = std::sqrt(2 / (pi * X)),
             pre_k = std::sqrt(pi / (2 * X)) * std::exp(-X);
    const LD I[3] = {pre_i * sh, pre_i * (ch - sh / X), pre_i * ((1 + 3 / (X * X)) * sh - 3 * ch / X)};
    const LD K[3] = {pre_k, pre_k * (1 + 1 / X), pre_k * (1 + 3 / X + 3 / (X * X))};
    for (int t = 0; t < 3; ++t) {
      const BesselOrder nu(0.5 + t);
      half_i = std::max(half_i, static_cast<double>(std::abs((bessel_i(nu, x) - I[t]) / I[t])));
      half_k = std::max(half_k, static_cast<double>(std::abs((bessel_k(nu, x) - K[t]) / K[t])));
    }
  }
  s.le(cid(13, "half_integer.I"), half_i, 1e-12, "sqrt(2/(pi x)) sinh/cosh forms");
  s.le(cid(13, "half_integer.K"), half_k, 1e-12, "sqrt(pi/(2x)) e^{-x} forms");

  double wr = 0.0;
  for (int t = 0; t < 50; ++t) {
    double v;
    do v = rng.uniform(0.0, 8.0);
    while (v == 0.0 || v == std::floor(v));
    const double x = rng.uniform(0.05, 30.0);
    const BesselOrder nu(v);
    const double w = bessel_i(nu, x) * bessel_k_prime(nu, x) - bessel_i_prime(nu, x) * bessel_k(nu, x);
    wr = std::max(wr, std::abs(w * x + 1.0));
  }
  s.le(cid(13, "bessel_wronskian"), wr, 1e-9, "I K' - I' K = -1/x");

  double rec = 0.0;
  for (int t = 0; t < 200; ++t) {
    cplx z;
    do z = cplx(rng.uniform(-20.0, 20.0), rng.uniform(-20.0, 20.0));
    while (std::abs(z) > 20.0 || std::abs(z) < 1e-3);
    const cplx lhs = gamma(z + 1.0), rhs = z * gamma(z);
    rec = std::max(rec, std::abs(lhs - rhs) / std::abs(lhs));
  }
  s.le(cid(13, "gamma_recurrence"), rec, 1e-12, "Gamma(z+1) = z Gamma(z)");
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "dnmap", "Graham n=3 coefficient c_3 = 1/3", 1e-3, crit_graham_n3},
      {2, "dnmap", "Graham constant and consistency with c_n", 0.0, crit_graham_constant},
      {3, "dnmap", "sigma_2(A) composition and inverse", 1.0, crit_a_symbol},
      {4, "dnmap", "Theta projector suite", 5.0, crit_theta},
      {5, "scattering", "Scattering ratio: ODE vs closed form", 30.0, crit_scattering},
      {6, "scattering", "Wronskian normalization", 0.0, crit_wronskian},
      {7, "indicial", "Indicial root ordering", 0.0, crit_indicial},
      {8, "gauge", "Operator identity 2 beta delta* = J", 5.0, crit_gauge_identity},
      {9, "gauge", "Gauge jets", 0.0, crit_gauge_jets},
      {10, "fg", "Fefferman-Graham vs Frobenius and d_2l flag", 0.0, crit_fg},
      {11, "dnmap", "Weyl proportionality", 0.0, crit_weyl},
      {12, "dnmap", "Cotton proportionality", 0.0, crit_cotton},
      {13, "specfun", "Special functions", 0.0, crit_specfun},
  };
  return list;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"all", "dnmap", "fg", "gauge", "indicial", "scattering", "specfun"};
  return names;
}

CheckReport run_suite(const std::string& suite, const CheckContext& ctx) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw std::invalid_argument("unknown suite '" + suite + "'");
  CheckReport r;
  r.suite = suite;
  r.seed = ctx.seed;
  r.tol_scale = ctx.tol_scale;
  for (const auto& c : criteria()) {
    if (suite != "all" && suite != c.suite) continue;
    try {
      c.run(ctx, r.cases);
    } catch (const std::exception& e) {
      CheckCase fc;
      fc.id = cid(c.number, "error");
      fc.criterion = c.number;
      fc.status = CaseStatus::fail;
      fc.measured = 1.0;
      fc.basis = "criterion raised";
      fc.detail = e.what();
      r.cases.push_back(std::move(fc));
    }
  }
  std::stable_sort(r.cases.begin(), r.cases.end(), [](const CheckCase& a, const CheckCase& b) { return a.id < b.id; });
  return r;
}

}  // namespace ahscatter::cli
