#include "qlab/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "qlab/errors.hpp"

namespace qlab {

Poly::Poly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

Poly::Poly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly Poly::monomial(std::size_t degree, const mpz_class& c) {
  std::vector<mpz_class> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

mpq_class Poly::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + mpq_class(*it);
  }
  return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<mpz_class> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<mpz_class> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
  return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) { return poly_mul(a, b); }

Poly operator*(const mpz_class& k, const Poly& a) {
  std::vector<mpz_class> v(a.coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = k * a.coeffs_[i];
  return Poly(std::move(v));
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.coeffs().size() + b.coeffs().size() - 1);
  kernel::convolve(a.coeffs(), b.coeffs(), out);
  return Poly(std::move(out));
}

Poly poly_pow(const Poly& p, unsigned long e) {
  Poly result{1};
  Poly base = p;
  while (e > 0) {
    if (e & 1UL) result = poly_mul(result, base);
    e >>= 1;
    if (e > 0) base = poly_mul(base, base);
  }
  return result;
}

Poly poly_mod(const Poly& p, const mpz_class& m) {
  if (m < 1) throw std::invalid_argument("poly_mod needs modulus >= 1");
  std::vector<mpz_class> v(p.coeffs().size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpz_fdiv_r(v[i].get_mpz_t(), p.coeffs()[i].get_mpz_t(), m.get_mpz_t());
  }
  return Poly(std::move(v));
}

Poly poly_pow_mod(const Poly& p, unsigned long e, const mpz_class& m) {
  Poly result = poly_mod(Poly{1}, m);
  Poly base = poly_mod(p, m);
  while (e > 0) {
    if (e & 1UL) result = poly_mod(poly_mul(result, base), m);
    e >>= 1;
    if (e > 0) base = poly_mod(poly_mul(base, base), m);
  }
  return result;
}

Poly poly_substitute_power(const Poly& p, std::size_t m) {
  if (m == 0) throw std::invalid_argument("poly_substitute_power needs m >= 1");
  if (p.is_zero()) return p;
  std::vector<mpz_class> v(static_cast<std::size_t>(p.degree()) * m + 1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) v[i * m] = p.coeffs()[i];
  return Poly(std::move(v));
}

Poly poly_taylor_shift(const Poly& p, const mpz_class& c) {
  // Horner in the shifted variable: ((a_d)(x+c) + a_{d-1})(x+c) + ...
  const Poly linear(std::vector<mpz_class>{c, mpz_class(1)});
  Poly acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = acc * linear + Poly(std::vector<mpz_class>{*it});
  }
  return acc;
}

Series series_of_rational(const Poly& num, const Poly& den, std::size_t order) {
  if (den.is_zero() || !(den.coeff(0) == 1 || den.coeff(0) == -1)) {
    throw NonUnitConstant("series_of_rational: denominator constant term must be +-1");
  }
  std::vector<BigSparseTerm> terms;
  for (std::size_t i = 0; i < den.coeffs().size(); ++i) {
    if (sgn(den.coeffs()[i]) != 0) terms.push_back({i, den.coeffs()[i]});
  }
  std::vector<mpz_class> numer(std::min(order, num.coeffs().size()));
  for (std::size_t i = 0; i < numer.size(); ++i) numer[i] = num.coeffs()[i];
  std::vector<mpz_class> out(order);
  kernel::sparse_div(numer, std::span<const BigSparseTerm>(terms), out);
  return Series(std::move(out));
}

}  // namespace qlab
