#include "qlab/kernels.hpp"

#include <algorithm>

namespace qlab::kernel::serial {

void convolve(std::span<const mpz_class> a, std::span<const mpz_class> b, std::span<mpz_class> out) {
  for (auto& c : out) c = 0;
  for (std::size_t i = 0; i < a.size() && i < out.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    const std::size_t jmax = std::min(b.size(), out.size() - i);
    for (std::size_t j = 0; j < jmax; ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
}

void sparse_mul(std::span<const mpz_class> dense, std::span<const SparseTerm> sparse,
                std::span<mpz_class> out) {
  for (auto& c : out) c = 0;
  for (const auto& term : sparse) {
    for (std::size_t j = 0; j < dense.size() && term.exponent + j < out.size(); ++j) {
      out[term.exponent + j] += term.coeff * dense[j];
    }
  }
}

void sparse_mul(std::span<const mpz_class> dense, std::span<const BigSparseTerm> sparse,
                std::span<mpz_class> out) {
  for (auto& c : out) c = 0;
  for (const auto& term : sparse) {
    for (std::size_t j = 0; j < dense.size() && term.exponent + j < out.size(); ++j) {
      out[term.exponent + j] += term.coeff * dense[j];
    }
  }
}

}  // namespace qlab::kernel::serial
