#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "qlab/kernels.hpp"
#include "qlab/special.hpp"

using namespace qlab;

namespace {

std::vector<mpz_class> random_dense(std::mt19937_64& rng, std::size_t n) {
  std::vector<mpz_class> v(n);
  std::uniform_int_distribution<long> d(-1000000, 1000000);
  for (auto& x : v) x = d(rng);
  // one huge coefficient so the GMP paths get exercised
  if (n > 3) v[n / 2] = mpz_class("123456789012345678901234567890");
  return v;
}

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("convolve: omp equals serial") {
    std::mt19937_64 rng(11);
    for (std::size_t n : {0ul, 1ul, 2ul, 17ul, 300ul, 1200ul}) {
      const auto a = random_dense(rng, n);
      const auto b = random_dense(rng, n + 5);
      std::vector<mpz_class> x(n), y(n);
      kernel::convolve(a, b, x);
      kernel::serial::convolve(a, b, y);
      CHECK(x == y);
      CHECK(x == oracle::convolve(a, std::vector<mpz_class>(b.begin(), b.begin() + n)));
    }
  }

  TEST_CASE("sparse_mul: omp equals serial, small and big terms") {
    std::mt19937_64 rng(12);
    const auto dense = random_dense(rng, 2000);
    const auto small = eta_terms(1, 2000);
    std::vector<BigSparseTerm> big;
    for (const auto& t : small) big.push_back({t.exponent, mpz_class(t.coeff) * mpz_class("99999999999999999999")});
    std::vector<mpz_class> x(2000), y(2000);
    kernel::sparse_mul(dense, small, x);
    kernel::serial::sparse_mul(dense, small, y);
    CHECK(x == y);
    kernel::sparse_mul(dense, big, x);
    kernel::serial::sparse_mul(dense, big, y);
    CHECK(x == y);
  }

  TEST_CASE("sparse_div inverts sparse_mul") {
    std::mt19937_64 rng(13);
    const auto dense = random_dense(rng, 800);
    for (unsigned r : {1u, 2u, 5u}) {
      auto terms = eta_terms(r, 800);
      std::vector<mpz_class> prod(800), back(800);
      kernel::sparse_mul(dense, terms, prod);
      kernel::sparse_div(prod, terms, back);
      CHECK(back == dense);
      for (auto& t : terms) t.coeff = -t.coeff;  // leading -1 is still a unit
      kernel::sparse_mul(dense, terms, prod);
      kernel::sparse_div(prod, terms, back);
      CHECK(back == dense);
    }
  }

  TEST_CASE("thread cap") {
    set_thread_cap(1);
    CHECK(thread_cap() == 1);
    std::mt19937_64 rng(14);
    const auto a = random_dense(rng, 400);
    std::vector<mpz_class> x(400), y(400);
    kernel::convolve(a, a, x);
    set_thread_cap(0);
    kernel::convolve(a, a, y);
    CHECK(x == y);
  }
}
