#include "qlab/kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include <omp.h>

namespace qlab {

namespace {
int g_thread_cap = 0;
int g_default_threads = 0;
}  // namespace

void set_thread_cap(int threads) {
  if (g_default_threads == 0) g_default_threads = omp_get_max_threads();
  g_thread_cap = threads > 0 ? threads : 0;
  omp_set_num_threads(g_thread_cap > 0 ? g_thread_cap : g_default_threads);
}

int thread_cap() { return g_thread_cap > 0 ? g_thread_cap : omp_get_max_threads(); }

void apply_thread_env() {
  if (const char* env = std::getenv("QLAB_THREADS"); env != nullptr && *env != '\0') {
    set_thread_cap(std::max(0, std::atoi(env)));
  }
}

namespace kernel {

namespace {

// Below this many output coefficients the thread startup costs more than it saves.
constexpr std::size_t kParallelThreshold = 256;

template <typename Term>
void check_unit_head(std::span<const Term> sparse) {
  if (sparse.empty() || sparse.front().exponent != 0 ||
      !(sparse.front().coeff == 1 || sparse.front().coeff == -1)) {
    throw std::domain_error("sparse divisor must start with constant term +-1");
  }
}

template <typename Term>
void sparse_mul_impl(std::span<const mpz_class> dense, std::span<const Term> sparse,
                     std::span<mpz_class> out) {
  const auto n_out = static_cast<long>(out.size());
#pragma omp parallel for schedule(dynamic, 64) if (out.size() >= kParallelThreshold)
  for (long n = 0; n < n_out; ++n) {
    mpz_class acc = 0;
    for (const auto& term : sparse) {
      if (term.exponent > static_cast<std::size_t>(n)) break;
      const std::size_t j = static_cast<std::size_t>(n) - term.exponent;
      if (j >= dense.size()) continue;
      acc += term.coeff * dense[j];
    }
    out[static_cast<std::size_t>(n)] = std::move(acc);
  }
}

template <typename Term>
void sparse_div_impl(std::span<const mpz_class> dense, std::span<const Term> sparse,
                     std::span<mpz_class> out) {
  check_unit_head(sparse);
  const bool negate = sparse.front().coeff == -1;
  for (std::size_t n = 0; n < out.size(); ++n) {
    mpz_class acc = n < dense.size() ? dense[n] : mpz_class(0);
    for (std::size_t k = 1; k < sparse.size(); ++k) {
      const auto e = sparse[k].exponent;
      if (e > n) break;
      acc -= sparse[k].coeff * out[n - e];
    }
    if (negate) acc = -acc;
    out[n] = std::move(acc);
  }
}

}  // namespace

void convolve(std::span<const mpz_class> a, std::span<const mpz_class> b, std::span<mpz_class> out) {
  const auto n_out = static_cast<long>(out.size());
#pragma omp parallel for schedule(dynamic, 32) if (out.size() >= kParallelThreshold)
  for (long n = 0; n < n_out; ++n) {
    mpz_class acc = 0;
    const auto un = static_cast<std::size_t>(n);
    const std::size_t imax = std::min(un, a.empty() ? 0 : a.size() - 1);
    for (std::size_t i = 0; i <= imax && !a.empty(); ++i) {
      const std::size_t j = un - i;
      if (j >= b.size()) continue;
      if (sgn(a[i]) == 0) continue;
      mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    out[un] = std::move(acc);
  }
}

void sparse_mul(std::span<const mpz_class> dense, std::span<const SparseTerm> sparse,
                std::span<mpz_class> out) {
  sparse_mul_impl(dense, sparse, out);
}

void sparse_mul(std::span<const mpz_class> dense, std::span<const BigSparseTerm> sparse,
                std::span<mpz_class> out) {
  sparse_mul_impl(dense, sparse, out);
}

void sparse_div(std::span<const mpz_class> dense, std::span<const SparseTerm> sparse,
                std::span<mpz_class> out) {
  sparse_div_impl(dense, sparse, out);
}

void sparse_div(std::span<const mpz_class> dense, std::span<const BigSparseTerm> sparse,
                std::span<mpz_class> out) {
  sparse_div_impl(dense, sparse, out);
}

}  // namespace kernel
}  // namespace qlab
