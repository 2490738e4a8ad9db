#pragma once

// Exact integer polynomials (no truncation). Used for the Riordan variable z
// and the Chebyshev variable x.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "qlab/series.hpp"

namespace qlab {

class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<long> coeffs);
  explicit Poly(std::vector<mpz_class> coeffs);

  static Poly monomial(std::size_t degree, const mpz_class& c = 1);

  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::span<const mpz_class> coeffs() const noexcept { return coeffs_; }
  /// Zero beyond the degree.
  mpz_class coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : mpz_class(0); }

  mpq_class evaluate(const mpq_class& x) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const mpz_class& k, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) = default;

 private:
  void normalize();
  std::vector<mpz_class> coeffs_;
};

Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_pow(const Poly& p, unsigned long e);

/// p^e with every coefficient reduced into [0, m). Requires m >= 1.
Poly poly_pow_mod(const Poly& p, unsigned long e, const mpz_class& m);

/// Reduces coefficients into [0, m).
Poly poly_mod(const Poly& p, const mpz_class& m);

/// p(z^m).
Poly poly_substitute_power(const Poly& p, std::size_t m);

/// p(x + c).
Poly poly_taylor_shift(const Poly& p, const mpz_class& c);

/// Power series of num/den to order T; den(0) must be +-1.
Series series_of_rational(const Poly& num, const Poly& den, std::size_t order);

}  // namespace qlab
