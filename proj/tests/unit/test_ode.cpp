#include <cmath>

#include "doctest.h"
#include "ahscatter/ode.hpp"
#include "ahscatter/specfun.hpp"
#include "helpers.hpp"

using namespace ahscatter;
using testutil::q;

namespace {

std::vector<QComplex> qvec(std::initializer_list<long> v) {
  std::vector<QComplex> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

bool all_zero(const std::vector<QComplex>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

// Block-1 TT direction for xi along e1 (n = 3): dy2 dy3 slot.
std::vector<QComplex> tt_slot(int n) {
  std::vector<QComplex> v(packed_size(n + 1), QComplex(0));
  v[packed_index(2, 3, n + 1)] = QComplex(1);
  return v;
}

}  // namespace

TEST_SUITE("ode") {

TEST_CASE("J system matrices") {
  const auto s = build_J_system(Dim(3), Covector::unit(3, 0));
  CHECK(s.N == 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const double diag = i == j ? (i == 0 ? 6.0 : 4.0) : 0.0;
      CHECK(std::abs(s.c0(i, j) - diag) == 0.0);
      cplx c1 = 0.0;
      if (i == 0 && j == 1) c1 = cplx(0.0, -2.0);
      if (i == 1 && j == 0) c1 = cplx(0.0, 2.0);
      CHECK(std::abs(s.c1(i, j) - c1) == 0.0);
    }
  CHECK(std::abs(s.shift) == 0.0);
  const auto z = build_J_system(Dim(3), Covector{0, 0, 0});
  CHECK(z.c1 == Matrix<cplx>(4, 4));
}

TEST_CASE("L system block structure") {
  const auto sys = build_L_system_t<QComplex>(Dim(3), QComplex(3), qvec({1, 0, 0}));
  CHECK(sys.shift.is_zero());
  const auto fb = make_fiber_blocks<QComplex>(Dim(3));
  const long cb[4] = {6, 0, 6, 4};
  for (int b = 0; b < 4; ++b) CHECK(sys.c0 * fb.projectors[b] == fb.projectors[b] * QComplex(cb[b]));
  // Eigenvalue multiplicities {6 x2, 0 x5, 4 x3} via traces of powers.
  CHECK(sys.c0.trace() == QComplex(6 * 2 + 4 * 3));
  CHECK((sys.c0 * sys.c0).trace() == QComplex(36 * 2 + 16 * 3));

  // Divergence free W1 directions are not coupled.
  CHECK(all_zero(sys.c1.apply(tt_slot(3))));
  std::vector<QComplex> split(10, QComplex(0));
  split[packed_index(2, 2, 4)] = QComplex(1);
  split[packed_index(3, 3, 4)] = QComplex(-1);
  CHECK(all_zero(sys.c1.apply(split)));
  // A W1 direction with nonzero divergence is.
  std::vector<QComplex> d(10, QComplex(0));
  d[packed_index(1, 2, 4)] = QComplex(1);
  CHECK_FALSE(all_zero(sys.c1.apply(d)));

  const auto z = build_L_system_t<QComplex>(Dim(3), QComplex(3), qvec({0, 0, 0}));
  CHECK(z.c1 == Matrix<QComplex>(10, 10));
  CHECK(std::abs(build_L_system(Dim(3), SpectralParam(3.5), Covector{0, 0, 0}).shift - 3.5 * (3.0 - 3.5)) == 0.0);
  CHECK_THROWS_AS(build_L_system(Dim(3), SpectralParam(1.0), Covector{1, 0, 0}), DomainError);
}

TEST_CASE("scalar series coefficients") {
  const auto sys = build_scalar_system_t<QComplex>(Dim(5), QComplex(5), QComplex(1));
  const auto s = frobenius_series(sys, QComplex(0), {QComplex(1)}, 14);
  CHECK(s.c(2, 0)[0] == QComplex(q(-1, 6)));
  CHECK(s.c(4, 0)[0] == QComplex(q(1, 24)));
  CHECK(s.log_depth == 0);
  // Brute force recursion a_k = -a_{k-2} / (k (n - k)).
  Rational a = 1;
  for (int k = 2; k <= 14; k += 2) {
    if (k == 5) continue;
    a = -a / Rational(k * (5 - k));
    CHECK(s.c(k, 0)[0] == QComplex(a));
    CHECK(s.c(k - 1, 0)[0].is_zero());
  }
}

TEST_CASE("J block 2 series terminates at xi = 0") {
  const auto sys = build_J_system_t<QComplex>(Dim(3), qvec({0, 0, 0}));
  const auto s = frobenius_series(sys, QComplex(4), qvec({0, 1, 0, 0}), 10);
  CHECK(s.c(0, 0) == qvec({0, 1, 0, 0}));
  for (int k = 1; k <= 10; ++k)
    for (int j = 0; j <= kMaxLogDepth; ++j) CHECK(all_zero(s.c(k, j)));
}

TEST_CASE("leading vector outside root eigenspace is rejected") {
  const auto sys = build_J_system_t<QComplex>(Dim(3), qvec({1, 0, 0}));
  CHECK_THROWS_AS(frobenius_series(sys, QComplex(4), qvec({1, 0, 0, 0}), 4), ContractViolation);
}

TEST_CASE("resonance pattern at lambda = n on the s = 0 branch") {
  // Generic xi; TT leading data plus a W1 component with nonzero divergence.
  const int n = 3, m = 4;
  const std::vector<QComplex> xi = {QComplex(q(1, 3)), QComplex(q(-2, 5)), QComplex(q(3, 7))};
  const auto sys = build_L_system_t<QComplex>(Dim(n), QComplex(n), xi);
  std::vector<QComplex> lead(packed_size(m), QComplex(0));
  lead[packed_index(1, 2, m)] = QComplex(1);
  lead[packed_index(2, 3, m)] = QComplex(q(2, 3));
  const auto fb = make_fiber_blocks<QComplex>(Dim(n));
  lead = fb.projectors[1].apply(lead);
  const auto s = frobenius_series(sys, QComplex(0), lead, 2 * n + 4);
  REQUIRE(s.resonances.size() == 2);
  CHECK(s.resonances[0].order == n);
  CHECK(s.resonances[0].block == 1);
  CHECK(s.resonances[1].order == n + 1);
  CHECK(s.resonances[1].block == 3);
  // Parity of the coupling keeps the resonant forcing at zero: no logs.
  for (const auto& e : s.resonances) CHECK_FALSE(e.log_introduced);
  CHECK(s.log_depth == 0);
  // Even orders below n are log free.
  for (int k = 0; k < n; k += 2)
    for (int j = 1; j <= kMaxLogDepth; ++j) CHECK(all_zero(s.c(k, j)));
  for (const auto& row : apply_system(sys, s))
    for (const auto& v : row) CHECK(all_zero(v));
}

TEST_CASE("resonance pattern on the s^1 = n branch") {
  const int n = 3, m = 4;
  const std::vector<QComplex> xi = {QComplex(q(1, 3)), QComplex(q(-2, 5)), QComplex(q(3, 7))};
  const auto sys = build_L_system_t<QComplex>(Dim(n), QComplex(n), xi);
  const auto fb = make_fiber_blocks<QComplex>(Dim(n));
  std::vector<QComplex> lead(packed_size(m), QComplex(0));
  lead[packed_index(1, 2, m)] = QComplex(1);
  lead = fb.projectors[1].apply(lead);
  const auto s = frobenius_series(sys, QComplex(n), lead, 8);
  REQUIRE(s.resonances.size() >= 1);
  CHECK(s.resonances[0].order == 1);
  CHECK(s.resonances[0].block == 3);
  CHECK(s.resonances[0].log_introduced);
  CHECK(s.log_depth == 1);
  for (const auto& row : apply_system(sys, s))
    for (const auto& v : row) CHECK(all_zero(v));
}

TEST_CASE("resonance pattern on the s_3 branch") {
  const int n = 3, m = 4;
  const std::vector<QComplex> xi = {QComplex(q(1, 3)), QComplex(q(-2, 5)), QComplex(q(3, 7))};
  const auto sys = build_L_system_t<QComplex>(Dim(n), QComplex(n), xi);
  std::vector<QComplex> lead(packed_size(m), QComplex(0));
  lead[packed_index(0, 1, m)] = QComplex(1);
  const auto s = frobenius_series(sys, QComplex(-1), lead, 8);
  // Block 1 hits sigma = 0 at k = 1 and sigma = n at k = n + 1; block 3 hits s^3 at k = n + 2.
  REQUIRE(s.resonances.size() == 3);
  CHECK(s.resonances[0].order == 1);
  CHECK(s.resonances[0].block == 1);
  CHECK(s.resonances[0].log_introduced);
  CHECK(s.resonances[1].order == n + 1);
  CHECK_FALSE(s.resonances[1].log_introduced);
  CHECK(s.resonances[2].order == n + 2);
  CHECK(s.resonances[2].block == 3);
  CHECK_FALSE(s.resonances[2].log_introduced);
  CHECK(s.log_depth == 1);
  for (const auto& row : apply_system(sys, s))
    for (const auto& v : row) CHECK(all_zero(v));
}

TEST_CASE("L system TT data reduces to the scalar recursion") {
  for (int n : {3, 5, 7}) {
    std::vector<QComplex> xi(n, QComplex(0));
    xi[0] = QComplex(q(3, 2));
    const auto sys = build_L_system_t<QComplex>(Dim(n), QComplex(n), xi);
    const int order = 2 * n + 4;
    const auto s = frobenius_series(sys, QComplex(0), tt_slot(n), order);
    const int slot = packed_index(2, 3, n + 1);
    Rational a = 1;
    for (int k = 0; k <= order; ++k) {
      Rational expect = 0;
      if (k % 2 == 0) {
        if (k > 0) a = -a * q(9, 4) / Rational(k * (n - k));
        expect = a;
      }
      for (int i = 0; i < packed_size(n + 1); ++i)
        CHECK(s.c(k, 0)[i] == (i == slot ? QComplex(expect) : QComplex(0)));
    }
  }
}

TEST_CASE("float series residual is small") {
  auto g = testutil::rng(31);
  for (int n : {3, 5}) {
    const auto xi = testutil::random_covector(g, n);
    const auto sys = build_L_system(Dim(n), SpectralParam(n + 0.37), xi);
    const auto roots = indicial_roots_L(Dim(n), SpectralParam(n + 0.37));
    std::vector<cplx> lead(packed_size(n + 1), 0.0);
    lead[packed_index(0, 1, n + 1)] = 1.0;
    const auto s = frobenius_series(sys, roots[3].lower, lead, 2 * n + 4);
    CHECK(series_residual(sys, s) <= 1e-11);
  }
}

TEST_CASE("evaluate_series") {
  FrobeniusSeries<cplx> one;
  one.s = 0.0;
  one.N = 2;
  one.order = 0;
  one.coeffs.resize(1);
  for (auto& v : one.coeffs[0]) v.assign(2, 0.0);
  one.coeffs[0][0] = {cplx(2.0), cplx(-1.0)};
  const auto v = evaluate_series(one, 0.5, 1.0);
  CHECK(std::abs(v.value[0] - 2.0) == 0.0);
  CHECK(std::abs(v.value[1] + 1.0) == 0.0);

  const auto sys = build_scalar_system(Dim(5), 5.0, 1.0);
  const auto s = frobenius_series(sys, cplx(0.0), {cplx(1.0)}, 14);
  const double partial = 1.0 - 0.01 / 6.0 + 0.0001 / 24.0;
  CHECK(std::abs(evaluate_series(s, 0.1, 1.0).value[0] - partial) <= 1e-8);
  const auto s2 = frobenius_series(sys, cplx(0.0), {cplx(1.0)}, 18);
  CHECK(std::abs(evaluate_series(s, 0.1, 1.0).value[0] - evaluate_series(s2, 0.1, 1.0).value[0]) < 1e-10);
  CHECK_FALSE(evaluate_series(s, 0.5, 1.0).outside_guard);
  CHECK(evaluate_series(s, 2.0, 1.0).outside_guard);
}

TEST_CASE("integrate against the K Bessel solution") {
  // u = x^{3/2} K_{3/2}(x) solves the scalar mode equation for n = 3, lambda = 3.
  const auto sys = build_scalar_system(Dim(3), 3.0, 1.0);
  const BesselOrder nu(1.5);
  auto u = [&](double x) { return std::pow(x, 1.5) * bessel_k(nu, x); };
  auto du = [&](double x) { return 1.5 * std::sqrt(x) * bessel_k(nu, x) + std::pow(x, 1.5) * bessel_k_prime(nu, x); };
  const auto r = integrate(sys, 0.1, {cplx(u(0.1))}, {cplx(du(0.1))}, 5.0);
  CHECK(std::abs(r.value[0] - u(5.0)) <= 1e-7 * u(5.0));
  CHECK(std::abs(r.deriv[0] - du(5.0)) <= 1e-7 * std::abs(du(5.0)));
}

TEST_CASE("integrate is reversible and linear") {
  const auto sys = build_L_system(Dim(3), SpectralParam(3.3), Covector{0.4, -0.2, 0.7});
  std::vector<cplx> v(10), d(10);
  for (int i = 0; i < 10; ++i) {
    v[i] = cplx(0.1 * i - 0.3, 0.05 * i);
    d[i] = cplx(-0.2 + 0.03 * i, 0.01);
  }
  const auto fwd = integrate(sys, 0.5, v, d, 1.5);
  const auto back = integrate(sys, 1.5, fwd.value, fwd.deriv, 0.5);
  for (int i = 0; i < 10; ++i) {
    CHECK(std::abs(back.value[i] - v[i]) <= 1e-8);
    CHECK(std::abs(back.deriv[i] - d[i]) <= 1e-8);
  }
  const std::vector<cplx> zero(10, 0.0);
  const auto z = integrate(sys, 0.5, zero, zero, 3.0);
  for (int i = 0; i < 10; ++i) CHECK(std::abs(z.value[i]) == 0.0);
}

TEST_CASE("integrate validates inputs") {
  const auto sys = build_scalar_system(Dim(3), 3.0, 1.0);
  CHECK_THROWS_AS(integrate(sys, 0.0, {cplx(1.0)}, {cplx(0.0)}, 1.0), DomainError);
  CHECK_THROWS_AS(integrate(sys, 0.1, {cplx(1.0), cplx(0.0)}, {cplx(0.0)}, 1.0), ContractViolation);
  IntegrateOptions tight;
  tight.max_steps = 3;
  CHECK_THROWS_AS(integrate(sys, 0.1, {cplx(1.0)}, {cplx(0.0)}, 40.0, tight), IntegrationError);
}

}  // TEST_SUITE
