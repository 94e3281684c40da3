#include "ahscatter/fg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ahscatter/ode.hpp"

namespace ahscatter {

namespace {

int max_L(Dim n) { return (n.value() - 1) / 2; }

void require_range(Dim n, int L) {
  if (L < 0 || 2 * L > n.value() - 1) {
    std::ostringstream os;
    os << "fg: need 0 <= 2L <= n - 1, got L = " << L << " for n = " << n.value();
    throw DomainError(os.str());
  }
}

}  // namespace

std::vector<Rational> fg_recursion_exact(Dim n, const Rational& xi_norm_sq, int L) {
  require_range(n, L);
  std::vector<Rational> a(L + 1);
  a[0] = 1;
  for (int l = 1; l <= L; ++l) {
    a[l] = -xi_norm_sq * a[l - 1] / Rational(2 * l * (n.value() - 2 * l));
    a[l].canonicalize();
  }
  return a;
}

FGCoefficients fg_tt_coefficients(Dim n, double xi_norm, int L) {
  if (!(xi_norm >= 0.0) || !std::isfinite(xi_norm)) throw DomainError("fg: |xi| must be finite and non-negative");
  FGCoefficients r;
  r.n = n.value();
  r.xi_norm = xi_norm;
  const Rational x = to_rational(xi_norm);
  r.exact = fg_recursion_exact(n, x * x, L);
  for (int l = 0; l <= L; ++l) {
    const double a = r.exact[l].get_d();
    double printed = 1.0;
    if (l >= 1) {
      double denom = std::pow(2.0, l);
      for (int t = 1; t <= l; ++t) denom *= n.value() - 2 * t;
      printed = -std::pow(xi_norm, 2 * l) / denom;
    }
    r.values.push_back(a);
    r.printed_values.push_back(printed);
    r.mismatch.push_back(std::abs(a - printed) > 1e-12 * std::abs(a));
  }
  return r;
}

FGFrobeniusComparison fg_vs_frobenius(Dim n, double xi_norm) {
  if (!(xi_norm > 0.0) || !std::isfinite(xi_norm)) throw DomainError("fg_vs_frobenius: |xi| must be positive");
  const int nv = n.value();
  const int m = nv + 1;
  const Rational xr = to_rational(xi_norm);
  std::vector<QComplex> xi(nv, QComplex(0));
  xi[0] = QComplex(xr);
  const auto sys = build_L_system_t<QComplex>(n, QComplex(nv), xi);
  const int slot = packed_index(2, 3, m);
  std::vector<QComplex> lead(sys.N, QComplex(0));
  lead[slot] = QComplex(1);
  const int order = nv - 1;
  const auto series = frobenius_series<QComplex>(sys, QComplex(0), lead, order);
  const auto a = fg_recursion_exact(n, xr * xr, max_L(n));

  FGFrobeniusComparison out;
  for (int k = 0; k <= order; ++k) {
    for (int j = 0; j <= kMaxLogDepth; ++j)
      for (int i = 0; i < sys.N; ++i) {
        const QComplex& c = series.c(k, j)[i];
        const bool tracked = (j == 0 && i == slot && k % 2 == 0);
        if (tracked) continue;
        out.off_pattern = std::max(out.off_pattern, std::abs(c.to_complex()));
      }
    if (k % 2 != 0) continue;
    const QComplex diff = series.c(k, 0)[slot] - QComplex(a[k / 2]);
    const double rel = diff.is_zero() ? 0.0 : std::abs(diff.to_complex()) / std::abs(a[k / 2].get_d());
    out.max_deviation = std::max(out.max_deviation, rel);
    ++out.orders_compared;
  }
  return out;
}

}  // namespace ahscatter
