#include <cmath>

#include "doctest.h"
#include "ahscatter/fg.hpp"
#include "helpers.hpp"

using namespace ahscatter;
using testutil::q;

TEST_SUITE("fg") {

TEST_CASE("n = 5 coefficients and mismatch flag") {
  const auto f = fg_tt_coefficients(Dim(5), 1.0, 2);
  REQUIRE(f.values.size() == 3);
  CHECK(f.exact[0] == 1);
  CHECK(f.exact[1] == q(-1, 6));
  CHECK(f.exact[2] == q(1, 24));
  CHECK(f.printed_values[1] == doctest::Approx(-1.0 / 6.0));
  CHECK(f.printed_values[2] == doctest::Approx(-1.0 / 12.0));
  CHECK_FALSE(f.mismatch[1]);
  CHECK(f.mismatch[2]);
}

TEST_CASE("n = 7 top coefficient") {
  const auto f = fg_tt_coefficients(Dim(7), 1.0, 3);
  CHECK(f.exact[2] == q(1, 120));
  CHECK(f.exact[3] == q(-1, 720));
  CHECK(f.values[3] == doctest::Approx(-1.0 / 720.0));
}

TEST_CASE("recursion, sign alternation and scaling") {
  for (int n : {3, 5, 7, 9, 11}) {
    const int L = (n - 1) / 2;
    const auto a = fg_recursion_exact(Dim(n), q(4, 9), L);
    CHECK(a[0] == 1);
    for (int l = 1; l <= L; ++l) {
      CHECK(a[l] == -q(4, 9) * a[l - 1] / Rational(2 * l * (n - 2 * l)));
      CHECK(sgn(a[l]) == (l % 2 == 0 ? 1 : -1));
    }
    const auto f = fg_tt_coefficients(Dim(n), 2.0 / 3.0, L);
    for (int l = 0; l <= L; ++l) CHECK(f.values[l] == doctest::Approx(a[l].get_d()).epsilon(1e-14));
  }
}

TEST_CASE("range error") {
  CHECK_THROWS_AS(fg_tt_coefficients(Dim(5), 1.0, 3), DomainError);
  CHECK_NOTHROW(fg_tt_coefficients(Dim(3), 1.0, 1));
}

TEST_CASE("recursion agrees with the Frobenius series exactly") {
  for (int n : {3, 5, 7, 9}) {
    const auto c = fg_vs_frobenius(Dim(n), 1.0);
    CHECK(c.max_deviation == 0.0);
    CHECK(c.off_pattern == 0.0);
    CHECK(c.orders_compared == (n + 1) / 2);
  }
  CHECK(fg_vs_frobenius(Dim(7), 0.5).max_deviation == 0.0);
}

}  // TEST_SUITE
