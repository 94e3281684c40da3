#pragma once

// Per-mode scattering data on the TT (scalar) reduction of the model
// operator: closed form, ODE extraction of the x^{n-lambda} / x^{lambda}
// coefficients of the decaying solution, Wronskian normalization and the
// mode Green function.

#include <string>
#include <vector>

#include "ahscatter/indicial.hpp"
#include "ahscatter/ode.hpp"

namespace ahscatter {

/// 2^{n - 2 lambda} Gamma(n/2 - lambda) / Gamma(lambda - n/2) |xi|^{2 lambda - n}.
/// Throws ResonanceError when lambda - n/2 is a non-negative integer.
cplx scattering_ratio_closed(Dim n, cplx lambda, double xi_norm);

struct ScatteringOptions {
  // Fit points and the start of the inward integration, in units of 1/|xi|.
  double fit_lo = 2.0;
  double fit_hi = 4.0;
  double start = 12.0;
  int min_order = 60;
  double min_rcond = 1e-8;
};

struct ScatteringResult {
  int n = 0;
  double lambda = 0.0;
  double xi_norm = 0.0;
  cplx F;  // coefficient of x^{n - lambda}
  cplx G;  // coefficient of x^{lambda}
  cplx ratio;
  cplx closed_form;
  double rel_err = 0.0;
  // Same fit fed with Bessel values instead of integrated data.
  cplx direct_ratio;
  double direct_rel_err = 0.0;
  double rcond = 0.0;
  int series_order = 0;
  long ode_steps = 0;
};

/// lambda real in D_eps with nu = lambda - n/2 not an integer.
ScatteringResult scattering_ratio_ode(Dim n, double lambda, double xi_norm, const ScatteringOptions& opts = {});

struct WronskianResult {
  double residual = 0.0;
  double alpha_beta = 0.0;  // fitted normalization of u = alpha x^{n/2} I, v = beta x^{n/2} K
  std::vector<double> per_sample;
};

/// Fits alpha*beta at samples[0] so that u'v - v'u = -x^{n-1}/2 and returns the
/// max relative residual over the remaining samples.
WronskianResult wronskian_check(Dim n, double lambda, double xi_norm, const std::vector<double>& samples);

/// (x x')^{n/2} I_nu(|xi| x_<) K_nu(|xi| x_>), normalized so that applying the
/// scalar mode operator in x gives x^{n+1} delta(x - x').
double green_mode_scalar(Dim n, double lambda, double x, double x_prime, double xi_norm);

/// nu = lambda - n/2 after the resonance and domain checks shared by the
/// Bessel-based operations.
double bessel_order_for(Dim n, double lambda, double xi_norm);

}  // namespace ahscatter
