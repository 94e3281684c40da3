#pragma once

// Complex Gamma and modified Bessel functions of real order.

#include "ahscatter/errors.hpp"
#include "ahscatter/exact.hpp"

namespace ahscatter {

/// Gamma(z). Throws DomainError at the poles z = 0, -1, -2, ...
cplx gamma(cplx z);
double gamma(double x);

/// Validated Bessel order nu >= 0.
class BesselOrder {
 public:
  explicit BesselOrder(double nu);
  double value() const { return nu_; }
  bool is_integer() const;

 private:
  double nu_;
};

/// I_nu(x), x > 0.
double bessel_i(BesselOrder nu, double x);
/// K_nu(x), x > 0, nu not an integer.
double bessel_k(BesselOrder nu, double x);

/// Derivatives via the standard recurrences I' = I_{nu+1} + (nu/x) I and
/// K' = -K_{nu+1} + (nu/x) K.
double bessel_i_prime(BesselOrder nu, double x);
double bessel_k_prime(BesselOrder nu, double x);

}  // namespace ahscatter
