#pragma once

// Linearized Fefferman-Graham coefficients of a TT Fourier mode on the flat
// model: g'_{2l} = a[2l] g'_0 below order n.

#include <vector>

#include "ahscatter/algebra.hpp"

namespace ahscatter {

struct FGCoefficients {
  int n = 0;
  double xi_norm = 0.0;
  std::vector<Rational> exact;       // a[2l], l = 0..L, exact in |xi|^2 as a rational
  std::vector<double> values;        // a[2l]
  std::vector<double> printed_values;  // -|xi|^{2l} / (2^l (n-2)(n-4)...(n-2l)), l >= 1
  std::vector<bool> mismatch;        // |a - printed| > 1e-12 |a|
};

/// a[2l] = -|xi|^2 a[2l-2] / (2l (n - 2l)), a[0] = 1, for 2L <= n - 1.
FGCoefficients fg_tt_coefficients(Dim n, double xi_norm, int L);

/// Same recursion with |xi|^2 given as an exact rational.
std::vector<Rational> fg_recursion_exact(Dim n, const Rational& xi_norm_sq, int L);

struct FGFrobeniusComparison {
  double max_deviation = 0.0;  // relative, over even orders below n
  double off_pattern = 0.0;    // odd orders, non-TT slots and log slots (should be 0)
  int orders_compared = 0;
};

/// Runs the exact-arithmetic Frobenius solver on the full L(n) system with
/// xi = |xi| e_1 and TT leading data e_2 (.) e_3 at s = 0, through order n - 1,
/// and compares with fg_recursion_exact.
FGFrobeniusComparison fg_vs_frobenius(Dim n, double xi_norm);

}  // namespace ahscatter
