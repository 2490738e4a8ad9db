#include "qlab/special.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace qlab {

EtaQuotientSpec::EtaQuotientSpec(std::initializer_list<EtaFactor> factors)
    : EtaQuotientSpec(std::vector<EtaFactor>(factors)) {}

EtaQuotientSpec::EtaQuotientSpec(std::vector<EtaFactor> factors) : factors_(std::move(factors)) {
  std::set<unsigned> seen;
  for (const auto& f : factors_) {
    if (f.scale == 0) throw std::invalid_argument("eta quotient scale must be >= 1");
    if (f.exponent == 0) throw std::invalid_argument("eta quotient exponent must be nonzero");
    if (!seen.insert(f.scale).second) {
      throw std::invalid_argument("eta quotient scale f" + std::to_string(f.scale) + " repeated");
    }
  }
}

std::vector<SparseTerm> eta_terms(unsigned r, std::size_t order) {
  if (r == 0) throw std::invalid_argument("eta needs r >= 1");
  // Euler: prod(1 - q^k) = sum_k (-1)^k q^{k(3k-1)/2} over all integers k.
  std::vector<SparseTerm> terms;
  if (order == 0) return terms;
  terms.push_back({0, 1});
  for (std::size_t k = 1;; ++k) {
    const std::size_t lo = r * (k * (3 * k - 1) / 2);
    const std::size_t hi = r * (k * (3 * k + 1) / 2);
    if (lo >= order) break;
    const long sign = (k % 2 == 1) ? -1 : 1;
    terms.push_back({lo, sign});
    if (hi < order) terms.push_back({hi, sign});
  }
  return terms;
}

Series eta(unsigned r, std::size_t order) { return Series::from_sparse(eta_terms(r, order), order); }

Series eta_inv(unsigned r, std::size_t order) {
  std::vector<mpz_class> out(order);
  const std::vector<mpz_class> one{1};
  kernel::sparse_div(one, eta_terms(r, order), out);
  return Series(std::move(out));
}

Series eta_quotient(const EtaQuotientSpec& spec, std::size_t order) {
  std::vector<mpz_class> cur(order);
  if (order > 0) cur[0] = 1;
  std::vector<mpz_class> next(order);
  // Multiplications first keeps the intermediate coefficients small.
  for (const auto& f : spec.factors()) {
    if (f.exponent < 0) continue;
    const auto terms = eta_terms(f.scale, order);
    for (int i = 0; i < f.exponent; ++i) {
      kernel::sparse_mul(cur, terms, next);
      std::swap(cur, next);
    }
  }
  for (const auto& f : spec.factors()) {
    if (f.exponent > 0) continue;
    const auto terms = eta_terms(f.scale, order);
    for (int i = 0; i < -f.exponent; ++i) {
      kernel::sparse_div(cur, terms, next);
      std::swap(cur, next);
    }
  }
  return Series(std::move(cur));
}

Series phi(std::size_t order, int sign) {
  std::vector<SparseTerm> terms{{0, 1}};
  for (std::size_t k = 1; k * k < order; ++k) {
    terms.push_back({k * k, (sign < 0 && k % 2 == 1) ? -2L : 2L});
  }
  return Series::from_sparse(terms, order);
}

Series psi(std::size_t order) {
  std::vector<SparseTerm> terms;
  for (std::size_t k = 0; k * (k + 1) / 2 < order; ++k) terms.push_back({k * (k + 1) / 2, 1});
  return Series::from_sparse(terms, order);
}

Series pgen(std::size_t order) {
  std::vector<SparseTerm> terms;
  for (const auto& t : eta_terms(1, order)) terms.push_back({t.exponent, 1});
  return Series::from_sparse(terms, order);
}

Series borwein_a(std::size_t order) {
  std::vector<mpz_class> out(order);
  // m^2 + mn + n^2 >= (m^2 + n^2)/2, so |m|, |n| > sqrt(2T) cannot reach q^{T-1}.
  const long bound = static_cast<long>(std::ceil(2.0 * std::sqrt(static_cast<double>(order))));
  for (long m = -bound; m <= bound; ++m) {
    for (long n = -bound; n <= bound; ++n) {
      const long e = m * m + m * n + n * n;
      if (e < static_cast<long>(order)) out[static_cast<std::size_t>(e)] += 1;
    }
  }
  return Series(std::move(out));
}

Series borwein_b(std::size_t order) {
  // sum omega^{m-n} q^{m^2+mn+n^2}: weight 1 when 3 | m-n, else Re(omega) = -1/2.
  std::vector<mpz_class> twice(order);
  const long bound = static_cast<long>(std::ceil(2.0 * std::sqrt(static_cast<double>(order))));
  for (long m = -bound; m <= bound; ++m) {
    for (long n = -bound; n <= bound; ++n) {
      const long e = m * m + m * n + n * n;
      if (e >= static_cast<long>(order)) continue;
      twice[static_cast<std::size_t>(e)] += ((m - n) % 3 == 0) ? 2 : -1;
    }
  }
  for (auto& c : twice) mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), 2);
  return Series(std::move(twice));
}

Series overpartition(std::size_t order) { return eta_quotient({{2, 1}, {1, -2}}, order); }

Series prefactor_A(std::size_t order) { return eta_quotient({{1, 1}, {6, 1}, {2, -2}, {3, -1}}, order); }

}  // namespace qlab
