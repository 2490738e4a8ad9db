#pragma once

// Odd MacMahon-type sums
//
//   U~_t(a, q) = sum over odd 1 <= n_1 < ... < n_t of prod_k q^{n_k} / (1 + a q^{n_k} + q^{2 n_k})
//              = sum_N m_odd(a, t; N) q^N,        |a| <= 2,
//
// computed three ways: a dynamic program over odd parts (direct_utilde), the
// prefactor-times-theta closed forms (explicit_utilde, a in {-2, 0, 1}), and
// brute-force enumeration of the underlying weighted partitions
// (oracle_modd). The closed forms are
//
//   a = -2:  f2/f1^2       * sum_{n>=1} c_n(-2,t) q^{n^2}
//   a =  0:  U~_{2t}(0,q) = U~_t(-2,q^4),   U~_{2t+1}(0,q) = q W_t(q^4),
//            W_t = f2/f1^2 * sum_{n>=1} c_n(0,t) q^{n(n-1)}
//   a =  1:  A(q)          * sum_{n>=1} c_n(1,t) q^{n^2}

#include <cstddef>
#include <memory>
#include <mutex>
#include <vector>

#include <gmpxx.h>

#include "qlab/poly.hpp"
#include "qlab/series.hpp"

namespace qlab::macmahon {

/// d_0 .. d_mmax with q^n / (1 + a q^n + q^{2n}) = sum_{m>=1} d_m q^{mn}; d_0 = 0.
std::vector<mpz_class> local_factor_coeffs(int a, std::size_t mmax);

/// U~_0 .. U~_{t_max} to order T by dynamic programming over the odd parts.
std::vector<Series> direct_utilde(int a, std::size_t t_max, std::size_t order);

/// m_odd(a, t; N) by enumerating strictly increasing odd parts and their
/// multiplicities. Exponential; meant for N below a hundred or so.
mpz_class oracle_modd(int a, unsigned t, unsigned long n);

/// c_n(a, t) for a in {-2, 0, 1}; n >= 1.
mpz_class coeff_c(int a, unsigned t, unsigned long n);

/// sum_{k=t}^{n} (-1)^{n-k} 2n/(n+k) C(n+k, 2k) C(k, t) (a+2)^{k-t}; n >= 1.
mpz_class chebyshev_ksum(int a, unsigned t, unsigned long n);

/// [z^n] (z^t - z^{t+2}) / (1 - a z + z^2)^{t+1}.
mpz_class riordan_coeff(int a, unsigned t, unsigned long n);

/// The whole column [z^0 .. z^{order-1}] of the Riordan generating function.
Series riordan_column(int a, unsigned t, std::size_t order);

/// Chebyshev polynomial of the first kind T_k(y).
Poly chebyshev_T(unsigned k);

/// te_n(x) = T_{2n}(sqrt x).
Poly te(unsigned n);

/// 2 te_n((x + a + 2)/4) as an integer polynomial in x.
Poly te_shifted_expansion(unsigned n, int a);

Series explicit_utilde(int a, unsigned t, std::size_t order);

/// W_t of the odd a = 0 closed form.
Series w_series(unsigned t, std::size_t order);

/// Both sides of the generating identity
///   sum_t U~_t(a,q) x^t
///     = prod_n 1/((1 + a q^{2n-1} + q^{2(2n-1)})(1 - q^{2n})) * (1 + 2 sum_n te_n((x+a+2)/4) q^{n^2})
/// at the integer point x = x0. The left side sums t up to the last t with t^2 < T.
Series generating_sum_side(int a, long x0, std::size_t order);
Series generating_product_side(int a, long x0, std::size_t order);

/// Both sides of
///   f1/(-q;q)_inf * prod_n (1 + x q^{2n-1}/(1 - q^{2n-1})^2) = 1 + 2 sum_n te_n(x/4) q^{n^2}
/// at x = x0.
Series teven_product_side(long x0, std::size_t order);
Series teven_theta_side(long x0, std::size_t order);

/// Prefactor series shared across evaluators. Grows on demand; never shrinks.
class PrefactorCache {
 public:
  enum class Kind { Overpartition, PrefactorA };

  std::shared_ptr<const Series> get(Kind kind, std::size_t order);

 private:
  std::mutex mutex_;
  std::shared_ptr<const Series> overpartition_;
  std::shared_ptr<const Series> prefactor_a_;
};

/// Pointwise m_odd(a, t; N) for N <= max_arg through the closed forms:
/// one prefactor series plus O(sqrt N) theta terms per coefficient.
class ModdEvaluator {
 public:
  ModdEvaluator(int a, unsigned t, std::size_t max_arg, PrefactorCache& cache);

  mpz_class operator()(std::size_t n) const;

  /// Smallest exponent that can carry a nonzero coefficient, t^2.
  std::size_t leading_exponent() const noexcept { return static_cast<std::size_t>(t_) * t_; }
  std::size_t max_arg() const noexcept { return max_arg_; }

 private:
  int a_;
  unsigned t_;
  std::size_t max_arg_;
  std::size_t stride_ = 1;
  std::size_t offset_ = 0;
  std::shared_ptr<const Series> prefactor_;
  std::vector<BigSparseTerm> theta_;
};

}  // namespace qlab::macmahon
