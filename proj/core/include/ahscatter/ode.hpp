#pragma once

// Fourier-mode normal-operator systems
//
//   P = -(x d/dx)^2 + n x d/dx + x^2 |xi|^2 + c0 + x c1 - shift
//
// on a fiber C^N, their Frobenius solutions at x = 0 (with log terms at
// resonant orders) and numerical continuation in x.
//
// c0 is block-scalar: c0 = sum_b c_b P_b for commuting projectors P_b. The
// Frobenius solver works block by block, which is what makes exact rational
// arithmetic and resonance bookkeeping straightforward.

#include <array>
#include <string>
#include <vector>

#include "ahscatter/algebra.hpp"
#include "ahscatter/indicial.hpp"

namespace ahscatter {

constexpr int kMaxLogDepth = 3;

template <class T>
struct OdeSystem {
  int n = 0;
  int N = 0;
  Matrix<T> c0;
  Matrix<T> c1;
  T xi_norm_sq = T(0);
  T shift = T(0);
  // c0 = sum_b block_c[b] * blocks[b]
  std::vector<Matrix<T>> blocks;
  std::vector<T> block_c;
  std::vector<int> block_labels;
};

/// Scalar part of the operator on block b at exponent sigma: -sigma^2 + n sigma + c_b - shift.
template <class T>
T block_indicial(const OdeSystem<T>& sys, int b, const T& sigma) {
  return -(sigma * sigma) + T(sys.n) * sigma + sys.block_c[b] - sys.shift;
}

/// J system on the (n+1)-covector fiber; index 0 is the dx/x direction.
/// Symbols use d/dy -> i xi.
template <class T>
OdeSystem<T> build_J_system_t(Dim n, const std::vector<T>& xi);

/// L(lambda) system on packed Sym^2 over the (n+1)-fiber.
template <class T>
OdeSystem<T> build_L_system_t(Dim n, const T& lambda, const std::vector<T>& xi);

/// Scalar model -(x d/dx)^2 + n x d/dx + x^2 |xi|^2 - lambda(n - lambda).
template <class T>
OdeSystem<T> build_scalar_system_t(Dim n, const T& lambda, const T& xi_norm_sq);

OdeSystem<cplx> build_J_system(Dim n, const Covector& xi);
OdeSystem<cplx> build_L_system(Dim n, const SpectralParam& lambda, const Covector& xi);
OdeSystem<cplx> build_scalar_system(Dim n, cplx lambda, double xi_norm);

struct ResonanceEvent {
  int order = 0;
  int block = 0;
  bool log_introduced = false;
};

template <class T>
struct FrobeniusSeries {
  T s = T(0);
  int N = 0;
  int order = 0;
  int log_depth = 0;
  // coeffs[k][j]: coefficient vector of x^{s+k} (log x)^j.
  std::vector<std::array<std::vector<T>, kMaxLogDepth + 1>> coeffs;
  std::vector<ResonanceEvent> resonances;

  const std::vector<T>& c(int k, int j) const { return coeffs.at(k).at(j); }
};

/// Order-by-order solution with leading vector `leading` at exponent s.
/// Throws ContractViolation if `leading` has components in blocks whose
/// indicial value at s is nonzero, ResonanceError if the log depth would
/// exceed kMaxLogDepth.
template <class T>
FrobeniusSeries<T> frobenius_series(const OdeSystem<T>& sys, const T& s, const std::vector<T>& leading, int order);

/// Applies the system to a truncated series term by term. Entry [k][j] is the
/// coefficient of x^{s+k} (log x)^j of P(series) for k <= order; a correct
/// series gives zeros there.
template <class T>
std::vector<std::array<std::vector<T>, kMaxLogDepth + 1>> apply_system(const OdeSystem<T>& sys,
                                                                      const FrobeniusSeries<T>& series);

/// max_k,j |residual| / max_k,j |coefficient| over all computed orders.
double series_residual(const OdeSystem<cplx>& sys, const FrobeniusSeries<cplx>& series);

struct SeriesValue {
  std::vector<cplx> value;
  bool outside_guard = false;
};

/// sum_{k,j} c[k][j] x^{s+k} (log x)^j. The guard flags x |xi| > guard.
template <class T>
SeriesValue evaluate_series(const FrobeniusSeries<T>& series, double x, double xi_norm, double guard = 1.0);

/// x d/dx of the series at x.
template <class T>
std::vector<cplx> evaluate_series_theta(const FrobeniusSeries<T>& series, double x);

struct IntegrateOptions {
  double rel_tol = 1e-12;
  double abs_tol = 1e-14;
  long max_steps = 2'000'000;
};

struct IntegrateResult {
  std::vector<cplx> value;
  std::vector<cplx> deriv;  // d/dx
  long steps = 0;
};

/// Adaptive continuation of a solution from x0 to x1 (either direction), in
/// t = log x with an embedded Dormand-Prince 5(4) pair.
IntegrateResult integrate(const OdeSystem<cplx>& sys, double x0, const std::vector<cplx>& value,
                          const std::vector<cplx>& deriv, double x1, const IntegrateOptions& opts = {});

}  // namespace ahscatter
