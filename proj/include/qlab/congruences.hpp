#pragma once

// Registry of congruence, vanishing and characterization families together
// with the engine that sweeps them. A family is a list of cases; each case
// fixes an optional affine rule t = alpha*J + beta, a set of arithmetic
// progressions M*N + r for the argument, and what is expected there.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "qlab/macmahon.hpp"

namespace qlab::congruences {

enum class SeqKind { Modd, PrefactorA, Overpartition, Coeff };

struct Sequence {
  SeqKind kind = SeqKind::Modd;
  int a = 0;  // Modd and Coeff only
};

std::string to_string(const Sequence& s);

struct TRule {
  unsigned long alpha = 0;
  long beta = 1;
  unsigned long j_min = 0;
  long t_of(unsigned long j) const { return static_cast<long>(alpha * j) + beta; }
};

/// Arguments M*N + r for N >= 0 and every r in `offsets` (r may exceed M,
/// as in 6N+6).
struct ArgRule {
  unsigned long modulus = 1;
  std::vector<unsigned long> offsets;
};

enum class Expect {
  CongZero,       // value = 0 mod `modulus`
  ExactZero,      // value = 0
  Residue,        // value = expected(N) mod `modulus`
  QuarterMinus2,  // m_odd(0, 2J; 4N) = m_odd(-2, J; N)
};

struct Case {
  std::optional<TRule> t;
  ArgRule arg;
  unsigned long modulus = 0;
  Expect expect = Expect::CongZero;
  std::function<long(unsigned long n_index)> expected;  // Residue only
};

struct CongruenceFamily {
  std::string id;
  Sequence sequence;
  std::vector<Case> cases;
  /// Smallest argument that is checked (0 unless the statement needs a positive argument).
  unsigned long min_arg = 0;
  /// Additionally assert m_odd(-2,t;n) = m_odd(1,t;n) mod 3 over the swept range.
  bool easy3_crosscheck = false;
};

/// Complete and duplicate free.
const std::vector<CongruenceFamily>& registry();

/// Throws UnknownFamily.
const CongruenceFamily& lookup(std::string_view id);

enum class Profile { Quick, Full };

struct SweepOptions {
  /// Inclusive J range; by default the first two J with t >= 1 (three on the full profile).
  std::optional<std::pair<unsigned long, unsigned long>> j_range;
  /// Largest argument. m_odd sweeps are extended to t^2 + 2000 when t^2 is beyond it.
  std::optional<unsigned long> budget;
  Profile profile = Profile::Quick;
};

struct Counterexample {
  std::optional<unsigned long> j;
  std::optional<long> t;
  unsigned long n_index = 0;
  unsigned long argument = 0;
  std::string value;
  std::string expected;
  unsigned long modulus = 0;
};

struct VerifyReport {
  std::string id;
  std::string sequence;
  std::string t_rule;
  std::string arg_rule;
  std::vector<unsigned long> moduli;
  std::vector<unsigned long> j_values;
  std::vector<long> t_values;
  unsigned long max_arg = 0;
  std::size_t checked = 0;
  bool pass = false;
  std::optional<Counterexample> counterexample;
  double millis = 0;
};

/// Default budget (largest argument, or largest n for Coeff families).
unsigned long default_budget(const CongruenceFamily& family, Profile profile);

/// Throws BudgetTooSmall when no nontrivial coefficient is in range.
VerifyReport verify_family(const CongruenceFamily& family, const SweepOptions& options = {});
VerifyReport verify_family(std::string_view id, const SweepOptions& options = {});

/// Throws std::invalid_argument on an empty family list.
std::vector<VerifyReport> verify_all(const std::vector<CongruenceFamily>& families, Profile profile);
std::vector<VerifyReport> verify_all(Profile profile);

/// One JSON object per line.
std::string to_json_line(const VerifyReport& report);

/// Prefactor series shared by all sweeps of the process.
macmahon::PrefactorCache& shared_cache();

}  // namespace qlab::congruences
