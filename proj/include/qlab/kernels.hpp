#pragma once

// Coefficient kernels shared by Series and Poly.
//
// Every kernel writes a prefix of an output span: out[n] for n < out.size().
// The default entry points are OpenMP-parallel over the output index; the
// `serial` namespace holds straightforward reference loops used by the tests
// and the benchmark. Both must produce identical results.

#include <cstddef>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace qlab {

/// Nonzero term of a sparse series with a machine-sized coefficient
/// (pentagonal and theta series: coefficients are +-1 or +-2).
struct SparseTerm {
  std::size_t exponent;
  long coeff;
};

/// Nonzero term with an arbitrary-precision coefficient.
struct BigSparseTerm {
  std::size_t exponent;
  mpz_class coeff;
};

/// Caps the number of OpenMP threads used by the kernels and sweeps.
/// Zero restores the runtime default.
void set_thread_cap(int threads);
int thread_cap();

/// Reads QLAB_THREADS from the environment and applies it, if set.
void apply_thread_env();

namespace kernel {

// out[n] = sum_{i+j=n} a[i] b[j]
void convolve(std::span<const mpz_class> a, std::span<const mpz_class> b, std::span<mpz_class> out);

// out[n] = sum_k c_k dense[n - e_k]
void sparse_mul(std::span<const mpz_class> dense, std::span<const SparseTerm> sparse,
                std::span<mpz_class> out);
void sparse_mul(std::span<const mpz_class> dense, std::span<const BigSparseTerm> sparse,
                std::span<mpz_class> out);

// Solves sparse * out = dense for out; sparse must contain exponent 0 with
// coefficient +-1. Inherently sequential in n.
void sparse_div(std::span<const mpz_class> dense, std::span<const SparseTerm> sparse,
                std::span<mpz_class> out);
void sparse_div(std::span<const mpz_class> dense, std::span<const BigSparseTerm> sparse,
                std::span<mpz_class> out);

namespace serial {

void convolve(std::span<const mpz_class> a, std::span<const mpz_class> b, std::span<mpz_class> out);
void sparse_mul(std::span<const mpz_class> dense, std::span<const SparseTerm> sparse,
                std::span<mpz_class> out);
void sparse_mul(std::span<const mpz_class> dense, std::span<const BigSparseTerm> sparse,
                std::span<mpz_class> out);

}  // namespace serial

}  // namespace kernel
}  // namespace qlab
