#pragma once

// Truncated formal power series over the integers.
//
// A Series of order T knows the coefficients of q^0 .. q^{T-1}; everything at
// q^T and beyond is unknown, not zero. Binary operations return the smallest
// order both operands support, so two series can only ever be compared on
// the coefficients they both know.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "qlab/kernels.hpp"

namespace qlab {

class Series {
 public:
  Series() = default;

  /// Zero series known to `order` coefficients.
  explicit Series(std::size_t order) : coeffs_(order) {}
  explicit Series(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {}
  Series(std::initializer_list<long> coeffs, std::size_t order);

  static Series constant(const mpz_class& c, std::size_t order);
  static Series one(std::size_t order) { return constant(1, order); }
  static Series monomial(std::size_t exponent, const mpz_class& c, std::size_t order);
  static Series from_sparse(std::span<const SparseTerm> terms, std::size_t order);
  static Series from_sparse(std::span<const BigSparseTerm> terms, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size(); }
  std::span<const mpz_class> coeffs() const noexcept { return coeffs_; }

  /// Throws OutOfRange when n >= order().
  const mpz_class& coeff_at(std::size_t n) const;
  const mpz_class& operator[](std::size_t n) const noexcept { return coeffs_[n]; }

  bool is_zero() const;
  /// Index of the first nonzero coefficient, if any is known.
  std::optional<std::size_t> valuation() const;
  /// Nonzero coefficients as a sparse list when they all fit in a long.
  std::optional<std::vector<SparseTerm>> small_sparse_terms() const;
  std::size_t nonzero_count() const;

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator-(const Series& a);
  friend Series operator*(const Series& a, const Series& b);

  Series& operator+=(const Series& b) { return *this = *this + b; }
  Series& operator-=(const Series& b) { return *this = *this - b; }
  Series& operator*=(const Series& b) { return *this = *this * b; }

  /// Exact equality over the common order.
  friend bool operator==(const Series& a, const Series& b);

 private:
  std::vector<mpz_class> coeffs_;
};

Series scale(const Series& a, const mpz_class& k);

/// Keeps the first min(order, a.order()) coefficients.
Series truncate(const Series& a, std::size_t order);

/// 1/a; the constant term must be +1 or -1 (NonUnitConstant otherwise).
Series invert(const Series& a);

/// Multiplies by q^k; the order grows by k.
Series shift(const Series& a, std::size_t k);

/// Divides by q^k; the first k coefficients must be zero.
Series unshift(const Series& a, std::size_t k);

/// q -> q^m.
Series substitute_power(const Series& a, std::size_t m);

/// q -> -q.
Series substitute_negq(const Series& a);

/// Coefficients of q^{m n + r}, reindexed by n. Requires 0 <= r < m.
Series dissect(const Series& a, std::size_t m, std::size_t r);

/// Compares the coefficients both series know, modulo m; m = 0 is exact equality.
bool eq_mod(const Series& a, const Series& b, const mpz_class& m);

/// Smallest exponent where a and b differ (mod m when m > 0) within the common order.
std::optional<std::size_t> first_mismatch(const Series& a, const Series& b, const mpz_class& m = 0);

/// Reference products without the OpenMP kernels; used by tests and benchmarks.
Series mul_serial(const Series& a, const Series& b);

}  // namespace qlab
