#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library's sparse or parallel paths: products are expanded factor by
// factor, divisions by (1 - q^m) are prefix sums, and arithmetic functions are
// computed from divisors.

#include <cstddef>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Coeffs = std::vector<mpz_class>;

inline Coeffs one(std::size_t order) {
  Coeffs c(order, mpz_class(0));
  if (order) c[0] = 1;
  return c;
}

// c *= (1 - q^m)
inline void times_one_minus(Coeffs& c, std::size_t m) {
  for (std::size_t i = c.size(); i-- > m;) c[i] -= c[i - m];
}

// c /= (1 - q^m)
inline void over_one_minus(Coeffs& c, std::size_t m) {
  for (std::size_t i = m; i < c.size(); ++i) c[i] += c[i - m];
}

/// prod_r f_r^{e_r} expanded one factor (1 - q^{rk}) at a time.
inline Coeffs eta_quotient(const std::vector<std::pair<unsigned, int>>& factors, std::size_t order) {
  Coeffs c = one(order);
  for (const auto& [r, e] : factors) {
    for (std::size_t k = 1; r * k < order; ++k) {
      for (int i = 0; i < (e > 0 ? e : -e); ++i) {
        if (e > 0) {
          times_one_minus(c, r * k);
        } else {
          over_one_minus(c, r * k);
        }
      }
    }
  }
  return c;
}

inline Coeffs convolve(const Coeffs& a, const Coeffs& b) {
  const std::size_t n = std::min(a.size(), b.size());
  Coeffs out(n, mpz_class(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; i + j < n; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

inline long sigma(long n) {
  long s = 0;
  for (long d = 1; d <= n; ++d) {
    if (n % d == 0) s += d;
  }
  return s;
}

/// Number of divisors d of n with d = j mod 6.
inline long tau6(long n, long j) {
  long c = 0;
  for (long d = 1; d <= n; ++d) {
    if (n % d == 0 && d % 6 == j) ++c;
  }
  return c;
}

/// Ordered representations n = T_i + T_j with triangular numbers T_k = k(k+1)/2.
inline long two_triangular(long n) {
  long c = 0;
  for (long i = 0; i * (i + 1) / 2 <= n; ++i) {
    for (long j = 0; j * (j + 1) / 2 <= n; ++j) {
      if (i * (i + 1) / 2 + j * (j + 1) / 2 == n) ++c;
    }
  }
  return c;
}

/// nu_p(C(n, m)) by computing the binomial and dividing out p.
inline long nu_binomial_brute(unsigned long p, unsigned long n, unsigned long m) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, m);
  long v = 0;
  while (mpz_divisible_ui_p(b.get_mpz_t(), p)) {
    mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), p);
    ++v;
  }
  return v;
}

}  // namespace oracle
