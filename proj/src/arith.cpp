#include "qlab/arith.hpp"

#include <stdexcept>

#include "qlab/errors.hpp"
#include "qlab/poly.hpp"

namespace qlab::arith {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

long digit_sum(long p, const mpz_class& k) {
  if (p < 2) throw std::invalid_argument("digit_sum needs base >= 2");
  if (k < 0) throw std::invalid_argument("digit_sum needs k >= 0");
  long sum = 0;
  mpz_class rest = k;
  mpz_class digit;
  while (sgn(rest) != 0) {
    mpz_fdiv_qr_ui(rest.get_mpz_t(), digit.get_mpz_t(), rest.get_mpz_t(), static_cast<unsigned long>(p));
    sum += digit.get_si();
  }
  return sum;
}

long nu_int(long p, const mpz_class& k) {
  if (!is_prime(p)) throw NonPrime(p);
  if (sgn(k) == 0) throw ZeroArgument("nu_p(0) is undefined");
  mpz_class rest = abs(k);
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), mpz_class(p).get_mpz_t()));
}

long nu_binomial_kummer(long p, long n, long m) {
  if (!is_prime(p)) throw NonPrime(p);
  if (m < 0 || n < m) throw std::invalid_argument("nu_binomial_kummer needs 0 <= m <= n");
  const long carries = digit_sum(p, m) + digit_sum(p, n - m) - digit_sum(p, n);
  return carries / (p - 1);
}

bool pow2_poly_congruence(unsigned s, unsigned m) {
  if (s < 1 || m < 1) throw std::invalid_argument("pow2_poly_congruence needs s >= 1, m >= 1");
  const mpz_class modulus = mpz_class(1) << s;
  const Poly lhs = poly_pow_mod(poly_substitute_power(Poly{1, 1}, m), 1UL << s, modulus);
  const Poly rhs = poly_pow_mod(poly_substitute_power(Poly{1, 0, 1}, m), 1UL << (s - 1), modulus);
  return lhs == rhs;
}

}  // namespace qlab::arith
