#pragma once

// p-adic valuations, base-p digit sums and Kummer's theorem, plus the
// power-of-two polynomial congruence (1+z)^{2^s} = (1+z^2)^{2^{s-1}} mod 2^s.

#include <gmpxx.h>

namespace qlab::arith {

bool is_prime(long p);

/// S_p(k): sum of the base-p digits of k. Requires p >= 2, k >= 0.
long digit_sum(long p, const mpz_class& k);

/// nu_p(k) for k != 0 (ZeroArgument otherwise). Throws NonPrime.
long nu_int(long p, const mpz_class& k);

/// nu_p(C(n, m)) from base-p digit sums. Requires 0 <= m <= n.
long nu_binomial_kummer(long p, long n, long m);

/// Whether (1+z^m)^{2^s} and (1+z^{2m})^{2^{s-1}} agree coefficientwise mod 2^s.
bool pow2_poly_congruence(unsigned s, unsigned m = 1);

}  // namespace qlab::arith
