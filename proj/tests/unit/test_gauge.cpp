#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "ahscatter/gauge.hpp"
#include "helpers.hpp"

using namespace ahscatter;
using testutil::q;

namespace {

std::vector<QComplex> random_rational_vec(std::mt19937_64& g, int len) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  std::vector<QComplex> v(len);
  for (auto& x : v) x = QComplex(q(num(g), den(g)));
  return v;
}

bool all_zero(const std::vector<QComplex>& v) {
  return std::all_of(v.begin(), v.end(), [](const QComplex& z) { return z.is_zero(); });
}

// Hand-evaluated Bianchi operator on a log-free Sym^2 jet, term by term:
// for x^k H, theta acts as k and x d_y as x * i xi.
JetSeries<QComplex> bianchi_oracle(int n, const std::vector<QComplex>& xi, const JetSeries<QComplex>& h) {
  const int m = n + 1;
  const QComplex I(Rational(0), Rational(1));
  auto out = JetSeries<QComplex>::zeros(m, h.order);
  for (int k = 0; k <= h.order; ++k) {
    const auto& H = h.at(k);
    auto P = [&](int a, int b) { return H[packed_index(a, b, m)]; };
    QComplex tr(0);
    for (int i = 1; i < m; ++i) tr += P(i, i);
    const QComplex kk(k);
    out.at(k)[0] += (QComplex(n) - kk * QComplex(q(1, 2))) * P(0, 0) + (kk * QComplex(q(1, 2)) - QComplex(1)) * tr;
    for (int j = 1; j < m; ++j) out.at(k)[j] += (QComplex(n + 1) - kk) * P(0, j);
    if (k + 1 > h.order) continue;
    for (int i = 1; i < m; ++i) out.at(k + 1)[0] -= I * xi[i - 1] * P(i, 0);
    for (int j = 1; j < m; ++j) {
      for (int i = 1; i < m; ++i) out.at(k + 1)[j] -= I * xi[i - 1] * P(i, j);
      out.at(k + 1)[j] += QComplex(q(1, 2)) * I * xi[j - 1] * (P(0, 0) + tr);
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("gauge") {

TEST_CASE("model_J on a constant jet gives c0 v") {
  const std::vector<QComplex> xi = {QComplex(q(1, 2)), QComplex(q(-1, 3)), QComplex(2)};
  const auto J = model_J<QComplex>(Dim(3), xi);
  auto in = JetSeries<QComplex>::zeros(4, 2);
  in.at(0) = {QComplex(1), QComplex(2), QComplex(3), QComplex(4)};
  const auto out = J.apply(in);
  CHECK(out.at(0) == std::vector<QComplex>{QComplex(6), QComplex(8), QComplex(12), QComplex(16)});
}

TEST_CASE("model_J annihilates the block 2 indicial root at xi = 0") {
  for (int n : {3, 5}) {
    const auto J = model_J<QComplex>(Dim(n), std::vector<QComplex>(n, QComplex(0)));
    auto in = JetSeries<QComplex>::zeros(n + 1, n + 1);
    in.at(n + 1)[2] = QComplex(1);
    const auto out = J.apply(in);
    for (int k = 0; k <= n + 1; ++k)
      for (int j = 0; j < 2; ++j) CHECK(all_zero(out.at(k, j)));
  }
}

TEST_CASE("model_J on x^{n+1} log x") {
  // (-(x d)^2 + n x d + n + 1)(x^{n+1} log x) = -(n + 2) x^{n+1}, log part cancels.
  for (int n : {3, 5, 7}) {
    const auto J = model_J<QComplex>(Dim(n), std::vector<QComplex>(n, QComplex(0)));
    auto in = JetSeries<QComplex>::zeros(n + 1, n + 1);
    in.at(n + 1, 1)[1] = QComplex(1);
    const auto out = J.apply(in);
    CHECK(out.at(n + 1, 0)[1] == QComplex(-(n + 2)));
    CHECK(all_zero(out.at(n + 1, 1)));
  }
}

TEST_CASE("two beta delta star equals J exactly") {
  auto g = testutil::rng(51);
  for (int n : {3, 5, 7})
    for (int r = 0; r < 10; ++r) {
      const auto xi = random_rational_vec(g, n);
      const auto lhs = model_bianchi<QComplex>(Dim(n), xi).compose(model_delta_star<QComplex>(Dim(n), xi)) * QComplex(2);
      CHECK(lhs.equals(model_J<QComplex>(Dim(n), xi)));
      CHECK(lhs.max_difference(model_J<QComplex>(Dim(n), xi)) == 0.0);
    }
}

TEST_CASE("model_bianchi on a TT constant jet") {
  const int n = 3, m = 4;
  const std::vector<QComplex> e1 = {QComplex(1), QComplex(0), QComplex(0)};
  auto h = JetSeries<QComplex>::zeros(packed_size(m), 2);
  h.at(0)[packed_index(2, 3, m)] = QComplex(1);
  h.at(0)[packed_index(2, 2, m)] = QComplex(q(1, 2));
  h.at(0)[packed_index(3, 3, m)] = QComplex(q(-1, 2));
  const auto b = model_bianchi<QComplex>(Dim(n), e1).apply(h);
  for (int k = 0; k <= 2; ++k) CHECK(all_zero(b.at(k)));
}

TEST_CASE("model_delta_star on the normal direction") {
  const int n = 3, m = 4;
  const std::vector<QComplex> xi = {QComplex(q(2, 3)), QComplex(1), QComplex(-1)};
  auto w = JetSeries<QComplex>::zeros(m, 1);
  w.at(0)[0] = QComplex(q(5, 2));
  const auto H = model_delta_star<QComplex>(Dim(n), xi).apply(w).at(0);
  CHECK(H[packed_index(0, 0, m)].is_zero());
  for (int i = 1; i < m; ++i)
    for (int j = i; j < m; ++j) CHECK(H[packed_index(i, j, m)] == (i == j ? QComplex(q(-5, 2)) : QComplex(0)));
}

TEST_CASE("jet operator composition matches sequential application") {
  auto g = testutil::rng(52);
  const int n = 3, m = 4;
  const auto xi = random_rational_vec(g, n);
  const auto B = model_bianchi<QComplex>(Dim(n), xi);
  const auto D = model_delta_star<QComplex>(Dim(n), xi);
  auto w = JetSeries<QComplex>::zeros(m, 5);
  for (int k = 0; k <= 5; ++k)
    for (int j = 0; j < 2; ++j) w.at(k, j) = random_rational_vec(g, m);
  const auto a = B.compose(D).apply(w), b = B.apply(D.apply(w));
  for (int k = 0; k <= 5; ++k)
    for (int j = 0; j < 2; ++j) CHECK(a.at(k, j) == b.at(k, j));
}

TEST_CASE("gauge jets on random tangential data") {
  auto g = testutil::rng(53);
  for (int n : {3, 5}) {
    const int m = n + 1;
    std::vector<QComplex> xi(n, QComplex(0));
    xi[0] = QComplex(1);
    for (int r = 0; r < 3; ++r) {
      auto ht = JetSeries<QComplex>::zeros(packed_size(m), n);
      for (int k = 0; k <= n; ++k) ht.at(k) = embed_tangential(n, random_rational_vec(g, packed_size(n)));
      const auto res = gauge_jets<QComplex>(Dim(n), xi, ht);
      CHECK(res.bianchi_residual == 0.0);
      const auto b = bianchi_oracle(n, xi, res.h);
      for (int k = 0; k <= n; ++k) CHECK(all_zero(b.at(k)));
      QComplex tr(0);
      for (int i = 1; i < m; ++i) tr += res.h.at(0)[packed_index(i, i, m)];
      CHECK(tr.is_zero());
      CHECK_FALSE(all_zero(res.log_coefficient));
      CHECK(res.log_identity_constant == QComplex(-(n + 2)));
      CHECK(res.normal_factor == QComplex(q(-1, n - 1)));
      CHECK(res.normal_factor_printed == QComplex(q(-1, 2 * n)));
      CHECK(res.normal_factor_mismatch);
      // Log slots stay empty below order n + 1.
      for (int k = 0; k <= n; ++k) CHECK(all_zero(res.omega.at(k, 1)));
      // omega^0 = (tr h~_0 / n) dx/x.
      QComplex tr0(0);
      for (int i = 1; i < m; ++i) tr0 += ht.at(0)[packed_index(i, i, m)];
      CHECK(res.omega.at(0)[0] == tr0 / QComplex(n));
    }
  }
}

TEST_CASE("gauge jets in floating point") {
  auto g = testutil::rng(54);
  const int n = 3, m = 4;
  const std::vector<cplx> xi = {0.3, -0.8, 0.5};
  auto ht = JetSeries<cplx>::zeros(packed_size(m), n);
  for (int k = 0; k <= n; ++k) {
    std::vector<cplx> tan(packed_size(n));
    for (auto& v : tan) v = {testutil::uniform(g, -1, 1), testutil::uniform(g, -1, 1)};
    ht.at(k) = embed_tangential(n, tan);
  }
  const auto res = gauge_jets<cplx>(Dim(n), xi, ht);
  CHECK(res.bianchi_residual <= 1e-10);
}

TEST_CASE("gauge jets on TT input") {
  for (int n : {3, 5}) {
    const int m = n + 1;
    std::vector<QComplex> xi(n, QComplex(0));
    xi[0] = QComplex(1);
    auto ht = JetSeries<QComplex>::zeros(packed_size(m), n);
    const int slot = packed_index(2, 3, m);
    // Flat TT jets a[2l] from the mode recursion with |xi| = 1.
    Rational a = 1;
    for (int l = 0; 2 * l <= n - 1; ++l) {
      if (l > 0) a = -a / Rational(2 * l * (n - 2 * l));
      ht.at(2 * l)[slot] = QComplex(a);
    }
    const auto res = gauge_jets<QComplex>(Dim(n), xi, ht);
    for (int k = 0; k <= n - 1; ++k)
      for (int j = 0; j < 2; ++j) CHECK(all_zero(res.omega.at(k, j)));
    CHECK(res.h.at(0) == ht.at(0));
    CHECK(res.bianchi_residual == 0.0);
  }
}

TEST_CASE("gauge jets on pure trace input") {
  for (int n : {3, 5}) {
    const int m = n + 1;
    auto ht = JetSeries<QComplex>::zeros(packed_size(m), n);
    for (int i = 1; i < m; ++i) ht.at(0)[packed_index(i, i, m)] = QComplex(1);
    const auto res = gauge_jets<QComplex>(Dim(n), std::vector<QComplex>(n, QComplex(0)), ht);
    std::vector<QComplex> expect(m, QComplex(0));
    expect[0] = QComplex(1);
    CHECK(res.omega.at(0) == expect);
    CHECK(all_zero(res.h.at(0)));
  }
}

TEST_CASE("gauge jets validates the fiber") {
  auto ht = JetSeries<QComplex>::zeros(6, 3);
  CHECK_THROWS_AS(gauge_jets<QComplex>(Dim(3), {QComplex(1), QComplex(0), QComplex(0)}, ht), ContractViolation);
}

}  // TEST_SUITE
