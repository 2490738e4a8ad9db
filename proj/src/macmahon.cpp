#include "qlab/macmahon.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "qlab/errors.hpp"
#include "qlab/special.hpp"

namespace qlab::macmahon {

namespace {

void require_small_a(int a) {
  if (a < -2 || a > 2) throw UnsupportedA(a);
}

mpz_class binom(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class divexact_checked(const mpz_class& num, const mpz_class& den, const char* what) {
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw std::logic_error(std::string(what) + ": non-integral quotient " + num.get_str() + "/" + den.get_str());
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

/// 2 te_n(x) at a rational point; integral at every point used here.
mpz_class twice_te_at(unsigned n, const mpq_class& x) {
  mpq_class v = te(n).evaluate(x) * 2;
  v.canonicalize();
  if (v.get_den() != 1) throw std::logic_error("2 te_n is not integral at " + x.get_str());
  return v.get_num();
}

void divide_in_place(std::vector<mpz_class>& s, std::vector<SparseTerm> divisor) {
  std::vector<mpz_class> out(s.size());
  kernel::sparse_div(s, divisor, out);
  s.swap(out);
}

void multiply_in_place(std::vector<mpz_class>& s, std::vector<SparseTerm> factor) {
  std::vector<mpz_class> out(s.size());
  kernel::sparse_mul(s, factor, out);
  s.swap(out);
}

/// 1 + a q^m + q^{2m} truncated below `order`.
std::vector<SparseTerm> local_denominator(int a, std::size_t m, std::size_t order) {
  std::vector<SparseTerm> terms{{0, 1}};
  if (a != 0 && m < order) terms.push_back({m, a});
  if (2 * m < order) terms.push_back({2 * m, 1});
  return terms;
}

Series theta_product(const Series& prefactor, const std::vector<BigSparseTerm>& theta) {
  std::vector<mpz_class> out(prefactor.order());
  kernel::sparse_mul(prefactor.coeffs(), std::span<const BigSparseTerm>(theta), out);
  return Series(std::move(out));
}

std::vector<BigSparseTerm> square_theta(int a, unsigned t, std::size_t order) {
  std::vector<BigSparseTerm> theta;
  for (unsigned long n = 1; n * n < order; ++n) {
    mpz_class c = coeff_c(a, t, n);
    if (sgn(c) != 0) theta.push_back({n * n, std::move(c)});
  }
  return theta;
}

std::vector<BigSparseTerm> oblong_theta(unsigned t, std::size_t order) {
  std::vector<BigSparseTerm> theta;
  for (unsigned long n = 1; n * (n - 1) < order; ++n) {
    mpz_class c = coeff_c(0, t, n);
    if (sgn(c) != 0) theta.push_back({n * (n - 1), std::move(c)});
  }
  return theta;
}

}  // namespace

std::vector<mpz_class> local_factor_coeffs(int a, std::size_t mmax) {
  require_small_a(a);
  std::vector<mpz_class> d(mmax + 1);
  if (mmax >= 1) d[1] = 1;
  for (std::size_t m = 2; m <= mmax; ++m) d[m] = -a * d[m - 1] - d[m - 2];
  return d;
}

std::vector<Series> direct_utilde(int a, std::size_t t_max, std::size_t order) {
  require_small_a(a);
  const auto d = local_factor_coeffs(a, order);
  std::vector<std::vector<mpz_class>> s(t_max + 1, std::vector<mpz_class>(order));
  if (order > 0) s[0][0] = 1;
  // U~_t starts at q^{1+3+...+(2t-1)} = q^{t^2}; larger t vanish to this order.
  std::size_t t_live = 0;
  while (t_live < t_max && (t_live + 1) * (t_live + 1) < order) ++t_live;

  std::size_t parts_seen = 0;
  for (std::size_t n = 1; n < order; n += 2) {
    ++parts_seen;
    std::vector<SparseTerm> g;
    for (std::size_t m = 1; m * n < order; ++m) {
      if (sgn(d[m]) != 0) g.push_back({m * n, d[m].get_si()});
    }
    for (std::size_t t = std::min(t_live, parts_seen); t >= 1; --t) {
      auto& dst = s[t];
      const auto& src = s[t - 1];
      for (const auto& term : g) {
        for (std::size_t j = 0; j + term.exponent < order; ++j) {
          if (sgn(src[j]) == 0) continue;
          if (term.coeff == 1) {
            dst[j + term.exponent] += src[j];
          } else if (term.coeff == -1) {
            dst[j + term.exponent] -= src[j];
          } else {
            dst[j + term.exponent] += term.coeff * src[j];
          }
        }
      }
    }
  }
  std::vector<Series> out;
  out.reserve(t_max + 1);
  for (auto& v : s) out.emplace_back(std::move(v));
  return out;
}

mpz_class oracle_modd(int a, unsigned t, unsigned long n) {
  require_small_a(a);
  const auto d = local_factor_coeffs(a, n);
  // Sum over odd parts p_1 < ... < p_t with multiplicities m_k >= 1, sum m_k p_k = n.
  std::function<mpz_class(unsigned long, unsigned long, unsigned)> walk =
      [&](unsigned long rest, unsigned long min_part, unsigned left) -> mpz_class {
    if (left == 0) return rest == 0 ? mpz_class(1) : mpz_class(0);
    mpz_class total = 0;
    for (unsigned long p = min_part; p <= rest; p += 2) {
      // Smallest use of the budget: p, p+2, ..., p+2(left-1), each once.
      if (left * p + left * (left - 1) > rest) break;
      for (unsigned long m = 1; m * p <= rest; ++m) {
        if (sgn(d[m]) == 0) continue;
        total += d[m] * walk(rest - m * p, p + 2, left - 1);
      }
    }
    return total;
  };
  return walk(n, 1, t);
}

mpz_class chebyshev_ksum(int a, unsigned t, unsigned long n) {
  require_small_a(a);
  if (n == 0) throw std::invalid_argument("chebyshev_ksum needs n >= 1");
  mpz_class total = 0;
  mpz_class weight = 1;  // (a+2)^{k-t}
  for (unsigned long k = t; k <= n; ++k) {
    if (k > t) weight *= (a + 2);
    if (sgn(weight) == 0) break;
    mpz_class term = divexact_checked(mpz_class(2 * n) * binom(n + k, 2 * k), mpz_class(n + k), "chebyshev_ksum");
    term *= binom(k, t) * weight;
    if ((n - k) % 2 == 1) {
      total -= term;
    } else {
      total += term;
    }
  }
  return total;
}

mpz_class coeff_c(int a, unsigned t, unsigned long n) {
  if (n == 0) throw std::invalid_argument("coeff_c needs n >= 1");
  switch (a) {
    case -2: {
      // (-1)^{n+t} 2n/(n+t) C(n+t, 2t)
      mpz_class v = divexact_checked(mpz_class(2 * n) * binom(n + t, 2UL * t), mpz_class(n + t), "c_n(-2,t)");
      return (n + t) % 2 == 0 ? v : mpz_class(-v);
    }
    case 0: {
      // (-1)^{n-t-1} (2n-1)/(n+t) C(n+t, 2t+1)
      mpz_class v =
          divexact_checked(mpz_class(2 * n - 1) * binom(n + t, 2UL * t + 1), mpz_class(n + t), "c_n(0,t)");
      return (n + t + 1) % 2 == 0 ? v : mpz_class(-v);
    }
    case 1:
      return chebyshev_ksum(1, t, n);
    default:
      throw UnsupportedA(a);
  }
}

Series riordan_column(int a, unsigned t, std::size_t order) {
  require_small_a(a);
  const Poly numerator = Poly::monomial(t) - Poly::monomial(t + 2UL);
  const Poly denominator = poly_pow(Poly{1, -a, 1}, t + 1UL);
  return series_of_rational(numerator, denominator, order);
}

mpz_class riordan_coeff(int a, unsigned t, unsigned long n) { return riordan_column(a, t, n + 1)[n]; }

Poly chebyshev_T(unsigned k) {
  Poly prev{1};
  if (k == 0) return prev;
  Poly cur{0, 1};
  const Poly two_y{0, 2};
  for (unsigned i = 2; i <= k; ++i) {
    Poly next = two_y * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly te(unsigned n) {
  const Poly t = chebyshev_T(2 * n);
  std::vector<mpz_class> even;
  for (std::size_t i = 0; i < t.coeffs().size(); i += 2) even.push_back(t.coeffs()[i]);
  return Poly(std::move(even));
}

Poly te_shifted_expansion(unsigned n, int a) {
  // 2 te_n((x+c)/4) = 2 * sum_j e_j 4^{n-j} (x+c)^j / 4^n
  const Poly base = te(n);
  std::vector<mpz_class> scaled(base.coeffs().size());
  mpz_class four_pow = 1;
  for (std::size_t j = scaled.size(); j-- > 0;) {
    scaled[j] = base.coeffs()[j] * four_pow;
    four_pow *= 4;
  }
  const Poly shifted = poly_taylor_shift(Poly(std::move(scaled)), mpz_class(a + 2));
  mpz_class denom = 1;
  denom <<= 2 * n;
  std::vector<mpz_class> out(shifted.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = divexact_checked(2 * shifted.coeffs()[i], denom, "te_shifted_expansion");
  }
  return Poly(std::move(out));
}

Series w_series(unsigned t, std::size_t order) {
  return theta_product(overpartition(order), oblong_theta(t, order));
}

Series explicit_utilde(int a, unsigned t, std::size_t order) {
  if (t == 0) return Series::one(order);
  switch (a) {
    case -2:
      return theta_product(overpartition(order), square_theta(-2, t, order));
    case 1:
      return theta_product(prefactor_A(order), square_theta(1, t, order));
    case 0: {
      if (order == 0) return Series(0);
      if (t % 2 == 0) {
        const std::size_t inner = (order + 3) / 4;
        return truncate(substitute_power(explicit_utilde(-2, t / 2, inner), 4), order);
      }
      const std::size_t inner = order / 4 + 1;
      return truncate(shift(substitute_power(w_series((t - 1) / 2, inner), 4), 1), order);
    }
    default:
      throw UnsupportedA(a);
  }
}

Series generating_sum_side(int a, long x0, std::size_t order) {
  std::size_t t_max = 0;
  while ((t_max + 1) * (t_max + 1) < order) ++t_max;
  const auto u = direct_utilde(a, t_max, order);
  Series total(order);
  mpz_class power = 1;
  for (std::size_t t = 0; t <= t_max; ++t) {
    total += scale(u[t], power);
    power *= x0;
  }
  return total;
}

Series generating_product_side(int a, long x0, std::size_t order) {
  require_small_a(a);
  const Series inv_f2 = eta_inv(2, order);
  std::vector<mpz_class> pref(inv_f2.coeffs().begin(), inv_f2.coeffs().end());
  for (std::size_t m = 1; m < order; m += 2) divide_in_place(pref, local_denominator(a, m, order));
  std::vector<BigSparseTerm> theta{{0, mpz_class(1)}};
  const mpq_class point(mpz_class(x0 + a + 2), mpz_class(4));
  for (unsigned n = 1; static_cast<std::size_t>(n) * n < order; ++n) {
    theta.push_back({static_cast<std::size_t>(n) * n, twice_te_at(n, point)});
  }
  return theta_product(Series(std::move(pref)), theta);
}

Series teven_product_side(long x0, std::size_t order) {
  const Series phi_neg = phi(order, -1);
  std::vector<mpz_class> s(phi_neg.coeffs().begin(), phi_neg.coeffs().end());
  for (std::size_t m = 1; m < order; m += 2) {
    multiply_in_place(s, local_denominator(static_cast<int>(x0 - 2), m, order));
    const std::vector<SparseTerm> one_minus{{0, 1}, {m, -1}};
    divide_in_place(s, one_minus);
    divide_in_place(s, one_minus);
  }
  return Series(std::move(s));
}

Series teven_theta_side(long x0, std::size_t order) {
  std::vector<BigSparseTerm> theta{{0, mpz_class(1)}};
  const mpq_class point(mpz_class(x0), mpz_class(4));
  for (unsigned n = 1; static_cast<std::size_t>(n) * n < order; ++n) {
    theta.push_back({static_cast<std::size_t>(n) * n, twice_te_at(n, point)});
  }
  return Series::from_sparse(std::span<const BigSparseTerm>(theta), order);
}

std::shared_ptr<const Series> PrefactorCache::get(Kind kind, std::size_t order) {
  std::lock_guard lock(mutex_);
  auto& slot = kind == Kind::Overpartition ? overpartition_ : prefactor_a_;
  if (!slot || slot->order() < order) {
    slot = std::make_shared<const Series>(kind == Kind::Overpartition ? overpartition(order) : prefactor_A(order));
  }
  return slot;
}

ModdEvaluator::ModdEvaluator(int a, unsigned t, std::size_t max_arg, PrefactorCache& cache)
    : a_(a), t_(t), max_arg_(max_arg) {
  if (a != -2 && a != 0 && a != 1) throw UnsupportedA(a);
  if (t == 0) return;
  std::size_t inner = max_arg + 1;
  auto kind = PrefactorCache::Kind::Overpartition;
  if (a == 0) {
    stride_ = 4;
    offset_ = t % 2 == 0 ? 0 : 1;
    inner = max_arg / 4 + 1;
    theta_ = t % 2 == 0 ? square_theta(-2, t / 2, inner) : oblong_theta((t - 1) / 2, inner);
  } else {
    if (a == 1) kind = PrefactorCache::Kind::PrefactorA;
    theta_ = square_theta(a, t, inner);
  }
  prefactor_ = cache.get(kind, inner);
}

mpz_class ModdEvaluator::operator()(std::size_t n) const {
  if (n > max_arg_) {
    throw OutOfRange("m_odd argument " + std::to_string(n) + " beyond evaluator range " + std::to_string(max_arg_));
  }
  if (t_ == 0) return n == 0 ? 1 : 0;
  if (n < offset_ || (n - offset_) % stride_ != 0) return 0;
  const std::size_t m = (n - offset_) / stride_;
  mpz_class acc = 0;
  const auto& pref = *prefactor_;
  for (const auto& term : theta_) {
    if (term.exponent > m) break;
    mpz_addmul(acc.get_mpz_t(), term.coeff.get_mpz_t(), pref[m - term.exponent].get_mpz_t());
  }
  return acc;
}

}  // namespace qlab::macmahon
