#pragma once

// Named q-series: f_r = (q^r; q^r)_inf and eta quotients built from them,
// the theta functions phi, psi and P, the cubic theta functions a(q), b(q)
// of the Borweins, the overpartition generating function, and the prefactor
// A(q) = f1 f6 / (f2^2 f3).

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "qlab/series.hpp"

namespace qlab {

struct EtaFactor {
  unsigned scale;  // r in f_r
  int exponent;
};

/// Product of f_r^e over the factors. Scales distinct, exponents nonzero.
class EtaQuotientSpec {
 public:
  EtaQuotientSpec() = default;
  EtaQuotientSpec(std::initializer_list<EtaFactor> factors);
  explicit EtaQuotientSpec(std::vector<EtaFactor> factors);

  const std::vector<EtaFactor>& factors() const noexcept { return factors_; }
  bool empty() const noexcept { return factors_.empty(); }

 private:
  std::vector<EtaFactor> factors_;
};

/// Sparse pentagonal expansion of f_r to order T, exponents ascending.
std::vector<SparseTerm> eta_terms(unsigned r, std::size_t order);

Series eta(unsigned r, std::size_t order);
Series eta_inv(unsigned r, std::size_t order);
Series eta_quotient(const EtaQuotientSpec& spec, std::size_t order);

/// phi(q) for sign = +1, phi(-q) for sign = -1.
Series phi(std::size_t order, int sign = 1);
Series psi(std::size_t order);
/// Generating function of the generalized pentagonal numbers.
Series pgen(std::size_t order);

/// Borwein a(q) and b(q) from their lattice sums over m, n.
Series borwein_a(std::size_t order);
Series borwein_b(std::size_t order);

/// Overpartition generating function f2 / f1^2.
Series overpartition(std::size_t order);

/// f1 f6 / (f2^2 f3).
Series prefactor_A(std::size_t order);

}  // namespace qlab
