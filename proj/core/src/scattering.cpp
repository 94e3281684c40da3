#include "ahscatter/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ahscatter/specfun.hpp"

namespace ahscatter {

namespace {

bool is_integer(double v) { return v == std::floor(v); }

}  // namespace

cplx scattering_ratio_closed(Dim n, cplx lambda, double xi_norm) {
  if (!(xi_norm > 0.0)) throw DomainError("scattering_ratio_closed: |xi| must be positive");
  const cplx nu = lambda - 0.5 * n.value();
  if (nu.imag() == 0.0 && nu.real() >= 0.0 && is_integer(nu.real())) {
    std::ostringstream os;
    os << "scattering_ratio_closed: Gamma(n/2 - lambda) has a pole at lambda = " << lambda.real();
    throw ResonanceError(os.str());
  }
  // 1/Gamma(lambda - n/2) vanishes at its poles.
  const bool denom_pole = nu.imag() == 0.0 && nu.real() <= 0.0 && is_integer(nu.real());
  if (denom_pole) return 0.0;
  return std::pow(2.0, -2.0 * nu) * gamma(-nu) / gamma(nu) * std::pow(cplx(xi_norm), 2.0 * nu);
}

double bessel_order_for(Dim n, double lambda, double xi_norm) {
  if (!(xi_norm > 0.0)) throw DomainError("|xi| must be positive");
  if (!std::isfinite(lambda)) throw DomainError("lambda must be finite");
  const double nu = lambda - 0.5 * n.value();
  if (nu < 0.0) throw DomainError("lambda must satisfy lambda >= n/2 for the Bessel pair");
  if (is_integer(nu)) {
    std::ostringstream os;
    os << "lambda = " << lambda << " gives integer Bessel order " << nu << " (log resonance)";
    throw ResonanceError(os.str());
  }
  return nu;
}

ScatteringResult scattering_ratio_ode(Dim n, double lambda, double xi_norm, const ScatteringOptions& opts) {
  SpectralParam(lambda).require_region(n);
  const double nu = bessel_order_for(n, lambda, xi_norm);
  const int nv = n.value();
  const double h = 0.5 * nv;
  const BesselOrder order(nu);

  ScatteringResult r;
  r.n = nv;
  r.lambda = lambda;
  r.xi_norm = xi_norm;
  r.closed_form = scattering_ratio_closed(n, lambda, xi_norm);

  // Decaying data x^{n/2} K_nu(x|xi|) far out, scaled to unit size.
  const double x_start = opts.start / xi_norm;
  const double k0 = bessel_k(order, opts.start);
  const double v0 = std::pow(x_start, h) * k0;
  const double dv0 = h * std::pow(x_start, h - 1.0) * k0 + std::pow(x_start, h) * xi_norm * bessel_k_prime(order, opts.start);
  const auto sys = build_scalar_system(n, lambda, xi_norm);
  const double xa = opts.fit_hi / xi_norm, xb = opts.fit_lo / xi_norm;
  const auto at_a = integrate(sys, x_start, {cplx(1.0)}, {cplx(dv0 / v0)}, xa);
  const auto at_b = integrate(sys, xa, at_a.value, at_a.deriv, xb);
  r.ode_steps = at_a.steps + at_b.steps;

  // Frobenius pair; c1 = 0 so only even orders appear and the series are
  // entire in x.
  r.series_order = std::max(2 * nv + 4, opts.min_order);
  const auto lower = frobenius_series(sys, cplx(nv - lambda), {cplx(1.0)}, r.series_order);
  const auto upper = frobenius_series(sys, cplx(lambda), {cplx(1.0)}, r.series_order);
  const double guard = opts.fit_hi + 1.0;
  const cplx a11 = evaluate_series(lower, xa, xi_norm, guard).value[0];
  const cplx a12 = evaluate_series(upper, xa, xi_norm, guard).value[0];
  const cplx a21 = evaluate_series(lower, xb, xi_norm, guard).value[0];
  const cplx a22 = evaluate_series(upper, xb, xi_norm, guard).value[0];

  // Columns scaled to unit max-norm before the conditioning estimate.
  const double s1 = std::max(std::abs(a11), std::abs(a21));
  const double s2 = std::max(std::abs(a12), std::abs(a22));
  const cplx b11 = a11 / s1, b21 = a21 / s1, b12 = a12 / s2, b22 = a22 / s2;
  const cplx det = b11 * b22 - b12 * b21;
  const double norm1 = std::max(std::abs(b11) + std::abs(b21), std::abs(b12) + std::abs(b22));
  const double inv_norm1 =
      std::max(std::abs(b22) + std::abs(b21), std::abs(b12) + std::abs(b11)) / std::abs(det);
  r.rcond = 1.0 / (norm1 * inv_norm1);
  if (!(r.rcond >= opts.min_rcond)) {
    std::ostringstream os;
    os << "scattering_ratio_ode: fit conditioning " << r.rcond << " below " << opts.min_rcond;
    throw IllConditionedError(os.str());
  }
  auto solve = [&](cplx ya, cplx yb, cplx& F, cplx& G) {
    F = (ya * b22 - b12 * yb) / det / s1;
    G = (b11 * yb - ya * b21) / det / s2;
  };
  solve(at_a.value[0], at_b.value[0], r.F, r.G);
  r.ratio = r.G / r.F;
  r.rel_err = std::abs(r.ratio - r.closed_form) / std::abs(r.closed_form);

  cplx Fd, Gd;
  solve(std::pow(xa, h) * bessel_k(order, opts.fit_hi), std::pow(xb, h) * bessel_k(order, opts.fit_lo), Fd, Gd);
  r.direct_ratio = Gd / Fd;
  r.direct_rel_err = std::abs(r.direct_ratio - r.closed_form) / std::abs(r.closed_form);
  return r;
}

WronskianResult wronskian_check(Dim n, double lambda, double xi_norm, const std::vector<double>& samples) {
  const double nu = bessel_order_for(n, lambda, xi_norm);
  if (samples.empty()) throw ContractViolation("wronskian_check: need at least one sample");
  const BesselOrder order(nu);
  const double h = 0.5 * n.value();
  auto wronskian = [&](double x) {
    if (!(x > 0.0)) throw DomainError("wronskian_check: samples must be positive");
    const double z = x * xi_norm;
    const double I = bessel_i(order, z), K = bessel_k(order, z);
    const double xh = std::pow(x, h);
    const double u = xh * I, v = xh * K;
    const double du = h * xh / x * I + xh * xi_norm * bessel_i_prime(order, z);
    const double dv = h * xh / x * K + xh * xi_norm * bessel_k_prime(order, z);
    return du * v - dv * u;
  };
  WronskianResult r;
  const double x0 = samples.front();
  r.alpha_beta = -0.5 * std::pow(x0, n.value() - 1) / wronskian(x0);
  for (std::size_t i = 1; i < samples.size(); ++i) {
    const double x = samples[i];
    const double scale = std::pow(x, n.value() - 1);
    const double res = std::abs(r.alpha_beta * wronskian(x) + 0.5 * scale) / scale;
    r.per_sample.push_back(res);
    r.residual = std::max(r.residual, res);
  }
  return r;
}

double green_mode_scalar(Dim n, double lambda, double x, double x_prime, double xi_norm) {
  const double nu = bessel_order_for(n, lambda, xi_norm);
  if (!(x > 0.0) || !(x_prime > 0.0)) throw DomainError("green_mode_scalar: x and x' must be positive");
  if (x == x_prime) throw DomainError("green_mode_scalar: x = x' lies on the diagonal");
  const BesselOrder order(nu);
  const double lo = std::min(x, x_prime), hi = std::max(x, x_prime);
  return std::pow(x * x_prime, 0.5 * n.value()) * bessel_i(order, xi_norm * lo) * bessel_k(order, xi_norm * hi);
}

}  // namespace ahscatter
