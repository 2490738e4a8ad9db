#include "qlab/series.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "qlab/errors.hpp"

namespace qlab {

namespace {

// Operands with fewer nonzero terms than order/kSparseRatio go through the sparse kernels.
constexpr std::size_t kSparseRatio = 8;

std::vector<BigSparseTerm> big_terms(const Series& a, std::size_t limit) {
  std::vector<BigSparseTerm> terms;
  for (std::size_t i = 0; i < std::min(limit, a.order()); ++i) {
    if (sgn(a[i]) != 0) terms.push_back({i, a[i]});
  }
  return terms;
}

bool is_unit(const mpz_class& c) { return c == 1 || c == -1; }

}  // namespace

Series::Series(std::initializer_list<long> coeffs, std::size_t order) : coeffs_(order) {
  std::size_t i = 0;
  for (long c : coeffs) {
    if (i >= order) break;
    coeffs_[i++] = c;
  }
}

Series Series::constant(const mpz_class& c, std::size_t order) {
  Series s(order);
  if (order > 0) s.coeffs_[0] = c;
  return s;
}

Series Series::monomial(std::size_t exponent, const mpz_class& c, std::size_t order) {
  Series s(order);
  if (exponent < order) s.coeffs_[exponent] = c;
  return s;
}

Series Series::from_sparse(std::span<const SparseTerm> terms, std::size_t order) {
  Series s(order);
  for (const auto& t : terms) {
    if (t.exponent < order) s.coeffs_[t.exponent] += t.coeff;
  }
  return s;
}

Series Series::from_sparse(std::span<const BigSparseTerm> terms, std::size_t order) {
  Series s(order);
  for (const auto& t : terms) {
    if (t.exponent < order) s.coeffs_[t.exponent] += t.coeff;
  }
  return s;
}

const mpz_class& Series::coeff_at(std::size_t n) const {
  if (n >= coeffs_.size()) {
    throw OutOfRange("coefficient q^" + std::to_string(n) + " requested from series of order " +
                     std::to_string(coeffs_.size()));
  }
  return coeffs_[n];
}

bool Series::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return sgn(c) == 0; });
}

std::optional<std::size_t> Series::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return i;
  }
  return std::nullopt;
}

std::size_t Series::nonzero_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return sgn(c) != 0; }));
}

std::optional<std::vector<SparseTerm>> Series::small_sparse_terms() const {
  std::vector<SparseTerm> terms;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    if (!coeffs_[i].fits_slong_p()) return std::nullopt;
    terms.push_back({i, coeffs_[i].get_si()});
  }
  return terms;
}

Series operator+(const Series& a, const Series& b) {
  Series r(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i < r.order(); ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
  return r;
}

Series operator-(const Series& a, const Series& b) {
  Series r(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i < r.order(); ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
  return r;
}

Series operator-(const Series& a) {
  Series r(a.order());
  for (std::size_t i = 0; i < r.order(); ++i) r.coeffs_[i] = -a.coeffs_[i];
  return r;
}

Series operator*(const Series& a, const Series& b) {
  const std::size_t order = std::min(a.order(), b.order());
  Series r(order);
  const Series* dense = &a;
  const Series* other = &b;
  if (a.nonzero_count() < b.nonzero_count()) std::swap(dense, other);
  if (other->nonzero_count() * kSparseRatio < order) {
    if (auto small = other->small_sparse_terms()) {
      kernel::sparse_mul(dense->coeffs(), *small, r.coeffs_);
    } else {
      const auto terms = big_terms(*other, order);
      kernel::sparse_mul(dense->coeffs(), std::span<const BigSparseTerm>(terms), r.coeffs_);
    }
    return r;
  }
  kernel::convolve(a.coeffs().first(order), b.coeffs().first(order), r.coeffs_);
  return r;
}

bool operator==(const Series& a, const Series& b) { return !first_mismatch(a, b).has_value(); }

Series mul_serial(const Series& a, const Series& b) {
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<mpz_class> out(order);
  kernel::serial::convolve(a.coeffs().first(order), b.coeffs().first(order), out);
  return Series(std::move(out));
}

Series scale(const Series& a, const mpz_class& k) {
  std::vector<mpz_class> out(a.order());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] * k;
  return Series(std::move(out));
}

Series truncate(const Series& a, std::size_t order) {
  const auto n = std::min(order, a.order());
  return Series(std::vector<mpz_class>(a.coeffs().begin(), a.coeffs().begin() + static_cast<long>(n)));
}

Series invert(const Series& a) {
  if (a.order() == 0) return a;
  if (!is_unit(a[0])) {
    throw NonUnitConstant("cannot invert series with constant term " + a[0].get_str());
  }
  std::vector<mpz_class> out(a.order());
  const std::vector<mpz_class> one{1};
  if (auto small = a.small_sparse_terms()) {
    kernel::sparse_div(one, *small, out);
  } else {
    const auto terms = big_terms(a, a.order());
    kernel::sparse_div(one, std::span<const BigSparseTerm>(terms), out);
  }
  return Series(std::move(out));
}

Series shift(const Series& a, std::size_t k) {
  std::vector<mpz_class> out(a.order() + k);
  for (std::size_t i = 0; i < a.order(); ++i) out[i + k] = a[i];
  return Series(std::move(out));
}

Series unshift(const Series& a, std::size_t k) {
  if (k > a.order()) throw OutOfRange("cannot divide series of order " + std::to_string(a.order()) +
                                      " by q^" + std::to_string(k));
  for (std::size_t i = 0; i < k; ++i) {
    if (sgn(a[i]) != 0) throw std::domain_error("series is not divisible by q^" + std::to_string(k));
  }
  return Series(std::vector<mpz_class>(a.coeffs().begin() + static_cast<long>(k), a.coeffs().end()));
}

Series substitute_power(const Series& a, std::size_t m) {
  if (m == 0) throw std::invalid_argument("substitute_power needs m >= 1");
  if (a.order() == 0) return a;
  // Coefficients between the last known q^{m(T-1)} and q^{mT} are known zeros.
  std::vector<mpz_class> out(a.order() * m);
  for (std::size_t i = 0; i < a.order(); ++i) out[i * m] = a[i];
  return Series(std::move(out));
}

Series substitute_negq(const Series& a) {
  std::vector<mpz_class> out(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return Series(std::move(out));
}

Series dissect(const Series& a, std::size_t m, std::size_t r) {
  if (m == 0 || r >= m) {
    throw BadResidue("dissect needs 0 <= r < m, got m=" + std::to_string(m) + ", r=" + std::to_string(r));
  }
  const std::size_t order = a.order() > r ? (a.order() - r + m - 1) / m : 0;
  std::vector<mpz_class> out(order);
  for (std::size_t n = 0; n < order; ++n) out[n] = a[m * n + r];
  return Series(std::move(out));
}

std::optional<std::size_t> first_mismatch(const Series& a, const Series& b, const mpz_class& m) {
  const std::size_t order = std::min(a.order(), b.order());
  mpz_class diff;
  for (std::size_t i = 0; i < order; ++i) {
    diff = a[i] - b[i];
    if (sgn(m) == 0 ? sgn(diff) != 0 : !mpz_divisible_p(diff.get_mpz_t(), m.get_mpz_t())) return i;
  }
  return std::nullopt;
}

bool eq_mod(const Series& a, const Series& b, const mpz_class& m) { return !first_mismatch(a, b, m).has_value(); }

}  // namespace qlab
