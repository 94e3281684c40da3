#include <cmath>

#include "doctest.h"
#include "ahscatter/algebra.hpp"
#include "helpers.hpp"

using namespace ahscatter;
using testutil::unpack;

TEST_SUITE("algebra") {

TEST_CASE("dim rejects small n and odd requirement") {
  CHECK_THROWS_AS(Dim(2), DomainError);
  CHECK_NOTHROW(Dim(3));
  CHECK_THROWS_AS(Dim(4).require_odd("test"), DomainError);
  CHECK_NOTHROW(Dim(5).require_odd("test"));
}

TEST_CASE("packed indexing round trips") {
  for (int m : {3, 4, 6}) {
    int slot = 0;
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j, ++slot) {
        CHECK(packed_index(i, j, m) == slot);
        CHECK(packed_index(j, i, m) == slot);
        const auto p = packed_pair(slot, m);
        CHECK(p[0] == i);
        CHECK(p[1] == j);
      }
    CHECK(slot == packed_size(m));
  }
}

TEST_CASE("trace examples") {
  CHECK(trace(Sym2Value::identity(3)) == cplx(3.0));
  CHECK(trace(Sym2Value::unit(3, 0, 1)) == cplx(0.0));
  CHECK(trace(Sym2Value::diag({1, 2, 3})) == cplx(6.0));
}

TEST_CASE("tf examples") {
  CHECK(tf(Sym2Value::identity(5)).max_abs() == doctest::Approx(0.0));
  const auto e12 = Sym2Value::unit(3, 0, 1);
  CHECK((tf(e12) - e12).max_abs() == 0.0);
  const auto t = tf(Sym2Value::diag({2, 0, 0}));
  CHECK(t(0, 0).real() == doctest::Approx(4.0 / 3.0));
  CHECK(t(1, 1).real() == doctest::Approx(-2.0 / 3.0));
  CHECK(t(2, 2).real() == doctest::Approx(-2.0 / 3.0));
  CHECK(std::abs(t(0, 1)) == 0.0);
}

TEST_CASE("tf is trace free and idempotent") {
  auto g = testutil::rng(1);
  for (int n : {3, 5, 7})
    for (int r = 0; r < 100; ++r) {
      const auto h = testutil::random_sym2(g, n);
      const auto t = tf(h);
      CHECK(std::abs(trace(t)) <= 1e-14);
      CHECK((tf(t) - t).max_abs() <= 1e-13);
    }
}

TEST_CASE("div_symbol examples") {
  const auto e1 = Covector::unit(3, 0);
  Sym2Value e11(3);
  e11.set(0, 0, 1.0);
  auto d = div_symbol(e1, e11);
  CHECK(d[0] == cplx(1.0));
  CHECK(d[1] == cplx(0.0));
  d = div_symbol(e1, Sym2Value::unit(3, 1, 2));
  for (auto v : d) CHECK(std::abs(v) == 0.0);
  d = div_symbol(e1, Sym2Value::unit(3, 0, 1));
  CHECK(d[1].real() == doctest::Approx(0.5));
  CHECK(std::abs(d[0]) == 0.0);
}

TEST_CASE("sym_outer examples") {
  const auto e1 = Covector::unit(3, 0), e2 = Covector::unit(3, 1);
  const auto s11 = sym_outer(e1, e1);
  CHECK(s11(0, 0) == cplx(1.0));
  CHECK(std::abs(trace(s11) - 1.0) == 0.0);
  const auto s12 = sym_outer(e1, e2);
  CHECK(s12(0, 1).real() == doctest::Approx(0.5));
  CHECK(std::abs(s12(0, 0)) == 0.0);
  const auto s = sym_outer(Covector{1, 2, 0}, Covector{3, 0, 0});
  CHECK(trace(s).real() == doctest::Approx(3.0));
}

TEST_CASE("inner product is the full double sum") {
  auto g = testutil::rng(2);
  const auto h = testutil::random_sym2(g, 4), k = testutil::random_sym2(g, 4);
  const auto H = unpack(h), K = unpack(k);
  cplx oracle = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) oracle += H[i][j] * std::conj(K[i][j]);
  CHECK(std::abs(inner_product(h, k) - oracle) <= 1e-14);
}

TEST_CASE("div_symbol is adjoint to sym_outer") {
  auto g = testutil::rng(3);
  for (int n : {3, 5, 7})
    for (int r = 0; r < 20; ++r) {
      const auto xi = testutil::random_covector(g, n);
      const auto w = testutil::random_covector(g, n);
      const auto h = testutil::random_sym2(g, n);
      const auto d = div_symbol(xi, h);
      cplx rhs = 0.0;
      for (int j = 0; j < n; ++j) rhs += w[j] * std::conj(d[j]);
      CHECK(std::abs(inner_product(sym_outer(xi, w), h) - rhs) <= 1e-12);
    }
}

TEST_CASE("fiber blocks dims") {
  auto fb = fiber_blocks(Dim(3));
  CHECK(fb.dims == std::array<int, 4>{1, 5, 1, 3});
  CHECK(fb.dims[0] + fb.dims[1] + fb.dims[2] + fb.dims[3] == 10);
  fb = fiber_blocks(Dim(5));
  CHECK(fb.dims == std::array<int, 4>{1, 14, 1, 5});
  CHECK(fb.dims[0] + fb.dims[1] + fb.dims[2] + fb.dims[3] == 21);
}

TEST_CASE("fiber block projectors partition identity exactly") {
  for (int n : {3, 5, 7}) {
    const auto fb = make_fiber_blocks<QComplex>(Dim(n));
    const int N = packed_size(n + 1);
    auto sum = Matrix<QComplex>(N, N);
    for (int a = 0; a < 4; ++a) {
      sum += fb.projectors[a];
      CHECK(fb.projectors[a].trace() == QComplex(fb.dims[a]));
      for (int b = 0; b < 4; ++b) {
        const auto prod = fb.projectors[a] * fb.projectors[b];
        CHECK(prod == (a == b ? fb.projectors[a] : Matrix<QComplex>(N, N)));
      }
    }
    CHECK(sum == Matrix<QComplex>::identity(N));
  }
}

TEST_CASE("fiber block directions") {
  const int n = 3, m = 4;
  const auto fb = make_fiber_blocks<QComplex>(Dim(n));
  // Mixed dx dy^i slots belong to block 3.
  std::vector<QComplex> mixed(packed_size(m), QComplex(0));
  mixed[packed_index(0, 2, m)] = QComplex(1);
  CHECK(fb.projectors[3].apply(mixed) == mixed);
  // Tangential trace free direction belongs to block 1.
  std::vector<QComplex> tt(packed_size(m), QComplex(0));
  tt[packed_index(1, 1, m)] = QComplex(1);
  tt[packed_index(2, 2, m)] = QComplex(-1);
  CHECK(fb.projectors[1].apply(tt) == tt);
  // n (dx/x)^2 - Id_tangential belongs to block 2.
  std::vector<QComplex> split(packed_size(m), QComplex(0));
  split[0] = QComplex(n);
  for (int i = 1; i < m; ++i) split[packed_index(i, i, m)] = QComplex(-1);
  CHECK(fb.projectors[2].apply(split) == split);
}

}  // TEST_SUITE
