#pragma once

// Indicial polynomials s -> -s^2 + n s + c and their roots for the model
// operators J (two blocks) and L(lambda) (four blocks).

#include <array>
#include <vector>

#include "ahscatter/algebra.hpp"

namespace ahscatter {

constexpr double kDefaultEpsilon = 0.1;

/// Spectral parameter lambda together with the half-width eps of the region
/// D_eps = { Re lambda > n - eps, |Im lambda| < eps }.
class SpectralParam {
 public:
  explicit SpectralParam(cplx lambda, double eps = kDefaultEpsilon);
  cplx value() const { return lambda_; }
  double eps() const { return eps_; }
  bool in_region(Dim n) const;
  /// Throws DomainError when outside D_eps.
  void require_region(Dim n) const;

 private:
  cplx lambda_;
  double eps_;
};

struct IndicialBlock {
  int label = 0;
  int n = 0;
  cplx c;      // constant term of -s^2 + n s + c
  cplx lower;  // (n - sqrt(n^2 + 4c)) / 2
  cplx upper;  // (n + sqrt(n^2 + 4c)) / 2

  cplx poly(cplx s) const { return -s * s + static_cast<double>(n) * s + c; }
};

/// Builds a block from its constant term; principal branch of sqrt.
IndicialBlock make_indicial_block(int label, Dim n, cplx c);

/// Blocks 1 (c = 2n) and 2 (c = n + 1).
std::array<IndicialBlock, 2> indicial_roots_J(Dim n);

/// Blocks 0..3 with c = c_b - lambda(n - lambda), c_b = (2n, 0, 2n, n + 1).
std::array<IndicialBlock, 4> indicial_roots_L(Dim n, const SpectralParam& lambda);

/// Re lambda = Re s^1 < Re s^3 < Re s^0 = Re s^2 < Re lambda + 2. The two
/// equalities are tested to 1e-12, the inequalities strictly.
bool ordering_check(Dim n, const SpectralParam& lambda);

/// Constant terms of the four L blocks before the shift, indexed by block.
std::array<int, 4> block_constants(Dim n);

}  // namespace ahscatter
