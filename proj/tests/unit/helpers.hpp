#pragma once

#include <random>
#include <vector>

#include "oracles.hpp"
#include "qlab/series.hpp"

namespace testing {

inline std::vector<long> head(const qlab::Series& s, std::size_t n) {
  std::vector<long> out;
  for (std::size_t i = 0; i < n && i < s.order(); ++i) out.push_back(s[i].get_si());
  return out;
}

inline qlab::Series from(const oracle::Coeffs& c) { return qlab::Series(c); }

inline qlab::Series random_series(std::mt19937_64& rng, std::size_t order, long lo = -50, long hi = 50) {
  std::uniform_int_distribution<long> d(lo, hi);
  std::vector<mpz_class> c(order);
  for (auto& x : c) x = d(rng);
  return qlab::Series(std::move(c));
}

inline qlab::Series random_unit(std::mt19937_64& rng, std::size_t order) {
  auto s = random_series(rng, order);
  std::vector<mpz_class> c(s.coeffs().begin(), s.coeffs().end());
  if (!c.empty()) c[0] = (rng() & 1) ? 1 : -1;
  return qlab::Series(std::move(c));
}

}  // namespace testing
