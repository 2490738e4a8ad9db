#include "doctest.h"

#include "helpers.hpp"
#include "qlab/errors.hpp"
#include "qlab/macmahon.hpp"
#include "qlab/special.hpp"

using namespace qlab;
using namespace qlab::macmahon;
using testing::head;

namespace {

// sum over odd d | N of f(N / d)
template <class F>
long odd_divisor_sum(long N, F f) {
  long s = 0;
  for (long d = 1; d <= N; d += 2) {
    if (N % d == 0) s += f(N / d);
  }
  return s;
}

long chi3(long m) { return m % 3 == 1 ? 1 : (m % 3 == 2 ? -1 : 0); }
long chi4(long m) { return m % 4 == 1 ? 1 : (m % 4 == 3 ? -1 : 0); }

}  // namespace

TEST_SUITE("macmahon") {
  TEST_CASE("local factors") {
    const auto m2 = local_factor_coeffs(-2, 6);
    const auto p2 = local_factor_coeffs(2, 6);
    for (long m = 0; m <= 6; ++m) {
      CHECK(m2[m] == m);
      CHECK(p2[m] == (m % 2 ? m : -m));
    }
    CHECK(local_factor_coeffs(1, 6) == std::vector<mpz_class>{0, 1, -1, 0, 1, -1, 0});
    CHECK(local_factor_coeffs(0, 6) == std::vector<mpz_class>{0, 1, 0, -1, 0, 1, 0});
  }

  TEST_CASE("dynamic program against enumeration") {
    for (int a = -2; a <= 2; ++a) {
      const auto u = direct_utilde(a, 4, 45);
      for (unsigned t = 0; t <= 4; ++t) {
        for (unsigned long n = 0; n < 45; ++n) {
          if (u[t][n] != oracle_modd(a, t, n)) FAIL_CHECK("a=" << a << " t=" << t << " n=" << n);
        }
      }
    }
    CHECK(oracle_modd(-2, 1, 9) == 13);
    CHECK(oracle_modd(0, 1, 13) == 2);
    CHECK(oracle_modd(1, 2, 4) == 1);
  }

  TEST_CASE("t = 1 against divisor sums") {
    const long T = 300;
    const Series m2 = direct_utilde(-2, 1, T)[1];
    const Series z0 = direct_utilde(0, 1, T)[1];
    const Series p1 = direct_utilde(1, 1, T)[1];
    const Series p2 = direct_utilde(2, 1, T)[1];
    for (long N = 1; N < T; ++N) {
      CHECK(m2[N] == odd_divisor_sum(N, [](long k) { return k; }));
      CHECK(z0[N] == odd_divisor_sum(N, chi4));
      CHECK(p1[N] == odd_divisor_sum(N, chi3));
      CHECK(p2[N] == odd_divisor_sum(N, [](long k) { return k % 2 ? k : -k; }));
    }
  }

  TEST_CASE("q -> -q flips a and the sign of odd t") {
    for (int a = -2; a <= 2; ++a) {
      const auto u = direct_utilde(a, 4, 200);
      const auto v = direct_utilde(-a, 4, 200);
      for (unsigned t = 0; t <= 4; ++t) CHECK(substitute_negq(u[t]) == (t % 2 ? -v[t] : v[t]));
    }
  }

  TEST_CASE("explicit closed forms equal the dynamic program") {
    for (int a : {-2, 0, 1}) {
      const auto u = direct_utilde(a, 8, 900);
      for (unsigned t = 0; t <= 8; ++t) CHECK(explicit_utilde(a, t, 900) == u[t]);
    }
    CHECK_THROWS_AS(explicit_utilde(2, 1, 10), UnsupportedA);
    CHECK_THROWS_AS(explicit_utilde(-1, 1, 10), UnsupportedA);
  }

  TEST_CASE("pointwise evaluator") {
    PrefactorCache cache;
    for (int a : {-2, 0, 1}) {
      const auto u = direct_utilde(a, 5, 600);
      for (unsigned t = 1; t <= 5; ++t) {
        const ModdEvaluator ev(a, t, 599, cache);
        CHECK(ev.leading_exponent() == t * t);
        CHECK(ev.max_arg() == 599);
        for (std::size_t n = 0; n < 600; ++n) {
          if (ev(n) != u[t][n]) FAIL_CHECK("a=" << a << " t=" << t << " n=" << n);
        }
      }
    }
  }

  TEST_CASE("leading term q^(t^2)") {
    for (int a = -2; a <= 2; ++a) {
      const auto u = direct_utilde(a, 5, 40);
      for (unsigned t = 1; t <= 5; ++t) {
        REQUIRE(u[t].valuation().has_value());
        CHECK(*u[t].valuation() == t * t);
        CHECK(u[t][t * t] == 1);
      }
    }
  }

  TEST_CASE("a = 0 support") {
    const auto u = direct_utilde(0, 6, 400);
    for (unsigned t = 1; t <= 6; ++t) {
      for (std::size_t n = 0; n < 400; ++n) {
        const bool allowed = t % 2 ? n % 4 == 1 : n % 4 == 0;
        if (!allowed) CHECK(u[t][n] == 0);
      }
    }
  }

  TEST_CASE("c_n: closed forms, the k-sum and the Riordan column agree") {
    for (unsigned t = 0; t <= 6; ++t) {
      const Series rm2 = riordan_column(-2, t, 60);
      const Series r1 = riordan_column(1, t, 60);
      const Series r0 = riordan_column(0, t, 60);
      for (unsigned long n = 1; n < 60; ++n) {
        CHECK(coeff_c(-2, t, n) == rm2[n]);
        CHECK(chebyshev_ksum(-2, t, n) == rm2[n]);
        CHECK(coeff_c(1, t, n) == r1[n]);
        CHECK(chebyshev_ksum(1, t, n) == r1[n]);
        CHECK(chebyshev_ksum(0, t, n) == r0[n]);
        CHECK(riordan_coeff(1, t, n) == r1[n]);
      }
    }
    // c_n(-2,1) = (-1)^{n+1} n^2
    for (long n = 1; n < 30; ++n) CHECK(coeff_c(-2, 1, n) == (n % 2 ? n * n : -n * n));
    CHECK(coeff_c(1, 1, 1) == 1);
    CHECK(coeff_c(1, 1, 2) == 2);
    CHECK(coeff_c(1, 1, 3) == 0);
    CHECK(coeff_c(1, 1, 4) == -4);
    CHECK_THROWS(coeff_c(1, 1, 0));
    CHECK_THROWS_AS(coeff_c(2, 1, 3), UnsupportedA);
  }

  TEST_CASE("W_t against the even-index dissection of U~") {
    for (unsigned t = 0; t <= 4; ++t) {
      const Series u = direct_utilde(0, 2 * t + 1, 801)[2 * t + 1];
      CHECK(dissect(u, 4, 1) == w_series(t, 200));
    }
  }

  TEST_CASE("Chebyshev") {
    CHECK(chebyshev_T(0) == Poly{1});
    CHECK(chebyshev_T(3) == Poly{0, -3, 0, 4});
    CHECK(te(1) == Poly{-1, 2});
    CHECK(te(2) == Poly{1, -8, 8});
    for (unsigned n = 0; n <= 12; ++n) {
      // te_n(y^2) = 2 T_n(y)^2 - 1
      const Poly tn = chebyshev_T(n);
      CHECK(poly_substitute_power(te(n), 2) == Poly{2} * tn * tn - Poly{1});
      for (int a : {-2, -1, 0, 1, 2}) {
        const Poly e = te_shifted_expansion(n, a);
        for (long x = -5; x <= 5; ++x) {
          CHECK(e.evaluate(mpq_class(x)) == 2 * te(n).evaluate(mpq_class(x + a + 2, 4)));
        }
      }
    }
  }

  TEST_CASE("generating function identity") {
    for (int a = -2; a <= 2; ++a) {
      for (long x0 : {-3L, -1L, 0L, 1L, 2L, 5L}) {
        CHECK(generating_sum_side(a, x0, 200) == generating_product_side(a, x0, 200));
      }
    }
  }

  TEST_CASE("theta identity for te") {
    for (long x0 : {-4L, -1L, 0L, 1L, 3L, 4L, 7L}) CHECK(teven_product_side(x0, 300) == teven_theta_side(x0, 300));
  }
}
