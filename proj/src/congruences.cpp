#include "qlab/congruences.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "qlab/errors.hpp"
#include "qlab/special.hpp"

namespace qlab::congruences {

std::string to_string(const Sequence& s) {
  switch (s.kind) {
    case SeqKind::Modd: return "MODD(" + std::to_string(s.a) + ")";
    case SeqKind::PrefactorA: return "PREFACTOR_A";
    case SeqKind::Overpartition: return "OVERPARTITION";
    case SeqKind::Coeff: return "COEFF(" + std::to_string(s.a) + ")";
  }
  return "?";
}

namespace {

TRule tr(unsigned long alpha, long beta, unsigned long j_min = 0) { return {alpha, beta, j_min}; }
TRule fixed_t(long t) { return {0, t, 0}; }

ArgRule ar(unsigned long m, std::vector<unsigned long> offsets) { return {m, std::move(offsets)}; }

// n mod k avoiding the listed residues.
ArgRule excluding(unsigned long k, std::set<unsigned long> excluded) {
  ArgRule rule{k, {}};
  for (unsigned long r = 0; r < k; ++r) {
    if (!excluded.count(r)) rule.offsets.push_back(r);
  }
  return rule;
}

ArgRule not_pm1(unsigned long k) { return excluding(k, {1 % k, (k - 1) % k}); }

Case cong(std::optional<TRule> t, ArgRule arg, unsigned long m) { return {t, std::move(arg), m, Expect::CongZero, {}}; }
Case zero(std::optional<TRule> t, ArgRule arg) { return {t, std::move(arg), 0, Expect::ExactZero, {}}; }

std::vector<unsigned long> quadratic_nonresidues(unsigned long p) {
  std::set<unsigned long> squares;
  for (unsigned long x = 1; x < p; ++x) squares.insert(x * x % p);
  std::vector<unsigned long> out;
  for (unsigned long r = 1; r < p; ++r) {
    if (!squares.count(r)) out.push_back(r);
  }
  return out;
}

bool is_square(unsigned long n) {
  mpz_class z(n);
  return mpz_perfect_square_p(z.get_mpz_t()) != 0;
}

CongruenceFamily family(std::string id, Sequence seq, std::vector<Case> cases) {
  return {std::move(id), seq, std::move(cases), 0, false};
}

std::vector<CongruenceFamily> build_registry() {
  const Sequence A{SeqKind::PrefactorA, 0};
  const Sequence PBAR{SeqKind::Overpartition, 0};
  const Sequence M2{SeqKind::Modd, -2};
  const Sequence M0{SeqKind::Modd, 0};
  const Sequence M1{SeqKind::Modd, 1};
  const Sequence C2{SeqKind::Coeff, -2};
  const Sequence C0{SeqKind::Coeff, 0};
  const Sequence C1{SeqKind::Coeff, 1};

  std::vector<CongruenceFamily> r;

  // ---- prefactor A(q) = f1 f6 / (f2^2 f3)
  {
    Case parity{std::nullopt, ar(2, {0}), 2, Expect::Residue,
                [](unsigned long n) -> long { return n == 0 || (is_square(n) && n % 3 != 0) ? 1 : 0; }};
    r.push_back(family("parity-characterization", A, {parity}));
  }
  r.push_back(family("a6n-mod2", A, {cong(std::nullopt, ar(6, {4, 6}), 2)}));
  r.push_back(family("a8n-mod2", A, {cong(std::nullopt, ar(8, {4, 6}), 2)}));
  {
    std::vector<Case> cases;
    for (unsigned long p : {5UL, 7UL, 11UL}) {
      std::vector<unsigned long> offs;
      for (auto q : quadratic_nonresidues(p)) offs.push_back(2 * q);
      cases.push_back(cong(std::nullopt, ar(2 * p, offs), 2));
    }
    r.push_back(family("a2pn-mod2", A, cases));
  }
  r.push_back(family("a24n13-mod2", A, {cong(std::nullopt, ar(24, {13}), 2)}));
  r.push_back(family("a-mod4", A,
                     {cong(std::nullopt, ar(12, {6}), 4), cong(std::nullopt, ar(16, {6}), 4),
                      cong(std::nullopt, ar(24, {16, 22}), 4)}));
  r.push_back(family("a-mod8", A, {cong(std::nullopt, ar(12, {9}), 8), cong(std::nullopt, ar(24, {19}), 8)}));
  r.push_back(family("a32n28-mod8", A, {cong(std::nullopt, ar(32, {28}), 8)}));
  r.push_back(family("a32n20-mod4", A, {cong(std::nullopt, ar(32, {20}), 4)}));
  {
    auto f = family("pre1-24", A,
                    {cong(std::nullopt, ar(24, {0, 4, 10, 12, 13, 14, 20}), 2),
                     cong(std::nullopt, ar(24, {6, 16, 18, 22}), 4), cong(std::nullopt, ar(24, {9, 19, 21}), 8)});
    f.min_arg = 1;
    r.push_back(std::move(f));
  }
  {
    auto f = family("pre1-32", A,
                    {cong(std::nullopt, ar(32, {4, 10, 12, 14, 16, 24, 26, 30}), 2),
                     cong(std::nullopt, ar(32, {6, 20, 22}), 4), cong(std::nullopt, ar(32, {28}), 8)});
    f.min_arg = 1;
    r.push_back(std::move(f));
  }

  // ---- overpartitions f2/f1^2
  {
    auto f = family("ovc8", PBAR,
                    {cong(std::nullopt, ar(8, {0, 1, 4}), 2), cong(std::nullopt, ar(8, {2}), 4),
                     cong(std::nullopt, ar(8, {3, 5, 6}), 8), cong(std::nullopt, ar(8, {7}), 64)});
    f.min_arg = 1;
    r.push_back(std::move(f));
  }
  {
    auto f = family("ovc9", PBAR,
                    {cong(std::nullopt, ar(9, {0, 1, 4, 7}), 2), cong(std::nullopt, ar(9, {2, 5, 8}), 4),
                     cong(std::nullopt, ar(9, {3, 6}), 8)});
    f.min_arg = 1;
    r.push_back(std::move(f));
  }
  r.push_back(family("ovp-16n10", PBAR, {cong(std::nullopt, ar(16, {10}), 8)}));
  r.push_back(family("ovc3", PBAR, {cong(std::nullopt, ar(27, {18}), 3)}));

  // ---- c_n(a, t); n >= 1
  auto coeff = [](std::string id, Sequence s, std::vector<Case> cases) {
    auto f = family(std::move(id), s, std::move(cases));
    f.min_arg = 1;
    return f;
  };
  {
    std::vector<Case> cases;
    for (unsigned s = 1; s <= 5; ++s) cases.push_back(cong(tr(1UL << s, -1, 1), ar(2, {0}), 1UL << (s + 1)));
    r.push_back(coeff("cm2-1", C2, cases));
  }
  r.push_back(coeff("cm2-2", C2, {cong(tr(27, 13, 0), excluding(27, {13, 14}), 3)}));
  r.push_back(coeff("cm2-3", C2, {cong(tr(27, -1, 1), not_pm1(27), 3)}));
  r.push_back(coeff("c0-1", C0,
                    {cong(tr(4, -1, 1), excluding(4, {0, 1}), 4), cong(tr(8, -1, 1), excluding(4, {0, 1}), 8)}));
  r.push_back(coeff("c0-2", C0,
                    {cong(tr(32, -1, 1), excluding(8, {0, 1}), 16), cong(tr(64, -1, 1), excluding(8, {0, 1}), 32)}));
  r.push_back(coeff("c0-3", C0, {cong(tr(27, 12, 0), excluding(27, {13, 15}), 3)}));
  // Excluding only n = +-1 mod 27 fails at n = t+1 = 27J; under the
  // n(n-1) indexing the exceptional classes are 0 and 1.
  r.push_back(coeff("c0-4", C0, {cong(tr(27, -1, 1), excluding(27, {0, 1}), 3)}));
  r.push_back(coeff("c1-1", C1, {cong(tr(2, -1, 1), ar(2, {0}), 2)}));
  {
    // s = 2 reads "n not = +-1 mod 2", i.e. n even.
    std::vector<Case> cases;
    for (unsigned s = 2; s <= 6; ++s) cases.push_back(cong(tr(1UL << s, -1, 1), not_pm1(1UL << (s - 1)), 4));
    r.push_back(coeff("c1-2", C1, cases));
  }
  // Mod 8 the reduction only reaches (1+z^16)^{4J}, so the exceptional
  // classes are +-1 mod 16 (+-1 mod 32 is false at t = 63, n = 79).
  r.push_back(coeff("c1-3", C1, {cong(tr(64, -1, 1), not_pm1(16), 8)}));

  // ---- m_odd(-2, t; N)
  {
    Case parity{fixed_t(1), ar(1, {0}), 2, Expect::Residue,
                [](unsigned long n) -> long { return n % 2 == 1 && is_square(n) ? 1 : 0; }};
    r.push_back(family("vm2-t1-parity", M2, {parity}));
  }
  r.push_back(family("vm2-6n5", M2, {cong(fixed_t(1), ar(6, {5}), 6)}));
  r.push_back(family("vm2A-1", M2, {cong(tr(1, 0, 1), ar(8, {3, 6}), 4)}));
  r.push_back(family("vm2A-2", M2, {cong(tr(1, 0, 1), ar(9, {3, 6}), 4)}));
  r.push_back(family("vm2A-3", M2, {cong(tr(1, 0, 1), ar(8, {7}), 8)}));
  r.push_back(family("vm2-1", M2, {cong(tr(2, 1), ar(8, {0, 4}), 4)}));
  r.push_back(family("vm2-1b", M2, {cong(tr(2, 0), ar(8, {2}), 4)}));
  r.push_back(family("vm2-2", M2, {cong(tr(2, 1), ar(8, {6}), 8)}));
  r.push_back(family("vm2-2b", M2, {cong(tr(2, 0), ar(8, {3}), 8)}));
  r.push_back(family("vm2-2c", M2, {cong(tr(4, 3), ar(8, {0, 4}), 8)}));
  r.push_back(family("vm2-2d", M2, {cong(tr(4, 2), ar(16, {14}), 8)}));
  r.push_back(family("vm2-3", M2, {cong(tr(4, 0), ar(8, {7}), 16)}));
  r.push_back(family("vm2-3a", M2, {cong(tr(8, 7), ar(8, {0}), 16)}));
  r.push_back(family("vm2-4", M2, {cong(tr(16, 15), ar(8, {0}), 32)}));
  r.push_back(family("vm2-5", M2, {cong(tr(32, 31), ar(8, {0}), 64)}));
  r.push_back(family("vm2-10", M2, {cong(tr(27, 13), ar(27, {25}), 3)}));
  r.push_back(family("vm2-11", M2, {cong(tr(27, 26), ar(27, {19}), 3)}));

  // ---- m_odd(0, t; N)
  r.push_back(family("v0-even-zero", M0, {zero(tr(2, 0, 1), ar(4, {1, 2, 3}))}));
  r.push_back(family("v0-odd-zero", M0, {zero(tr(2, 1), ar(4, {0, 2, 3}))}));
  r.push_back(family("v0-even-reinterp", M0, {{tr(2, 0, 1), ar(4, {0}), 0, Expect::QuarterMinus2, {}}}));
  r.push_back(family("v0-36n", M0, {cong(tr(2, 1), ar(36, {21, 33}), 4)}));
  r.push_back(family("v0-t1-zero", M0, {zero(fixed_t(1), ar(36, {21, 33}))}));
  r.push_back(family("v0odd-1", M0, {cong(tr(8, 7), ar(16, {9, 13}), 4)}));
  r.push_back(family("v0odd-2", M0, {cong(tr(16, 15), ar(16, {13}), 8)}));
  r.push_back(family("v0odd-3", M0, {cong(tr(64, 63), ar(32, {29}), 16)}));
  r.push_back(family("v0odd-3b", M0, {cong(tr(128, 127), ar(32, {29}), 32)}));
  r.push_back(family("v0odd-4", M0, {cong(tr(54, 25), ar(108, {49}), 3)}));
  r.push_back(family("v0odd-5", M0, {cong(tr(54, 53), ar(108, {73}), 3)}));

  // ---- m_odd(1, t; N)
  r.push_back(family("v1-0", M1, {cong(tr(1, 0), ar(24, {22}), 2)}));
  r.push_back(family("v1-0b", M1, {cong(tr(2, 1), ar(12, {7}), 2)}));
  r.push_back(family("v1-0c", M1, {cong(tr(4, 3), ar(24, {7}), 4)}));
  r.push_back(family("v1-1", M1, {cong(tr(2, 1), ar(8, {5, 7}), 2)}));
  r.push_back(family("v1-2", M1, {cong(tr(16, 15), ar(16, {7}), 4)}));
  r.push_back(family("v1-2b", M1, {cong(tr(32, 31), ar(32, {21, 29}), 4)}));
  r.push_back(family("v1-2c", M1, {cong(tr(64, 63), ar(32, {29}), 8)}));
  {
    auto f = family("v1-mod3", M1, {cong(tr(27, 13), ar(27, {25}), 3), cong(tr(27, 26), ar(27, {19}), 3)});
    f.easy3_crosscheck = true;
    r.push_back(std::move(f));
  }
  r.push_back(family("v1-6n5", M1, {zero(fixed_t(1), ar(6, {5}))}));

  std::set<std::string> seen;
  for (const auto& f : r) {
    if (!seen.insert(f.id).second) throw std::logic_error("duplicate family id " + f.id);
  }
  return r;
}

std::string t_rule_text(const std::optional<TRule>& t) {
  if (!t) return "-";
  std::ostringstream os;
  if (t->alpha == 0) {
    os << "t = " << t->beta;
    return os.str();
  }
  os << "t = ";
  if (t->alpha != 1) os << t->alpha;
  os << 'J';
  if (t->beta > 0) os << '+' << t->beta;
  if (t->beta < 0) os << t->beta;
  os << ", J >= " << t->j_min;
  return os.str();
}

std::string arg_rule_text(const ArgRule& a, bool coeff) {
  std::ostringstream os;
  if (coeff) {
    os << "n mod " << a.modulus << " in {";
  } else {
    os << a.modulus << "N+{";
  }
  for (std::size_t i = 0; i < a.offsets.size(); ++i) os << (i ? "," : "") << a.offsets[i];
  os << '}';
  return os.str();
}

template <class F>
std::string joined(const CongruenceFamily& f, F&& piece) {
  std::vector<std::string> parts;
  for (const auto& c : f.cases) {
    auto p = piece(c);
    if (std::find(parts.begin(), parts.end(), p) == parts.end()) parts.push_back(p);
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "; " : "") + parts[i];
  return out;
}

std::vector<unsigned long> j_window(const Case& c, const SweepOptions& opt, SeqKind kind) {
  if (!c.t || c.t->alpha == 0) return {0};
  const TRule& t = *c.t;
  std::vector<unsigned long> out;
  if (opt.j_range) {
    for (unsigned long j = std::max(opt.j_range->first, t.j_min); j <= opt.j_range->second; ++j) {
      if (t.t_of(j) >= 1) out.push_back(j);
    }
    return out;
  }
  if (kind == SeqKind::Coeff) {
    for (unsigned long j = t.j_min; j <= 3; ++j) {
      if (t.t_of(j) >= 1) out.push_back(j);
    }
    return out;
  }
  const std::size_t want = opt.profile == Profile::Full ? 3 : 2;
  for (unsigned long j = t.j_min; out.size() < want; ++j) {
    if (t.t_of(j) >= 1) out.push_back(j);
  }
  return out;
}

struct Arg {
  unsigned long n_index;
  unsigned long value;
};

std::vector<Arg> arguments(const ArgRule& rule, unsigned long min_arg, unsigned long max_arg) {
  std::vector<Arg> out;
  for (unsigned long r : rule.offsets) {
    for (unsigned long n = 0;; ++n) {
      const unsigned long x = rule.modulus * n + r;
      if (x > max_arg) break;
      if (x >= min_arg) out.push_back({n, x});
    }
  }
  std::sort(out.begin(), out.end(), [](const Arg& a, const Arg& b) { return a.value < b.value; });
  return out;
}

std::string mod_text(const mpz_class& v, unsigned long m) {
  if (m == 0) return v.get_str();
  return v.get_str() + " (= " + std::to_string(mpz_fdiv_ui(v.get_mpz_t(), m)) + " mod " + std::to_string(m) + ")";
}

// Finds the first failing position of `check` over [0, count); OpenMP over positions.
template <class Check>
std::optional<std::size_t> first_failure(std::size_t count, Check&& check) {
  std::size_t first = std::numeric_limits<std::size_t>::max();
#pragma omp parallel for schedule(dynamic, 64)
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t seen;
#pragma omp atomic read
    seen = first;
    if (i > seen) continue;
    if (!check(i)) {
#pragma omp critical(qlab_first_failure)
      {
        if (i < first) {
#pragma omp atomic write
          first = i;
        }
      }
    }
  }
  if (first == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return first;
}

}  // namespace

const std::vector<CongruenceFamily>& registry() {
  static const std::vector<CongruenceFamily> r = build_registry();
  return r;
}

const CongruenceFamily& lookup(std::string_view id) {
  for (const auto& f : registry()) {
    if (f.id == id) return f;
  }
  throw UnknownFamily(std::string(id));
}

macmahon::PrefactorCache& shared_cache() {
  static macmahon::PrefactorCache cache;
  return cache;
}

unsigned long default_budget(const CongruenceFamily& family, Profile profile) {
  const bool full = profile == Profile::Full;
  switch (family.sequence.kind) {
    case SeqKind::Coeff: return 1500;
    case SeqKind::Overpartition: return 50000;
    case SeqKind::PrefactorA: return full ? 100000 : 20000;
    case SeqKind::Modd: {
      if (!full) return 20000;
      const bool large_t = family.sequence.a == 1 &&
                           std::any_of(family.cases.begin(), family.cases.end(),
                                       [](const Case& c) { return c.t && c.t->alpha >= 32; });
      return large_t ? 150000 : 100000;
    }
  }
  return 20000;
}

VerifyReport verify_family(const CongruenceFamily& family, const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const SeqKind kind = family.sequence.kind;
  const int a = family.sequence.a;
  const unsigned long budget = options.budget.value_or(default_budget(family, options.profile));

  VerifyReport report;
  report.id = family.id;
  report.sequence = to_string(family.sequence);
  report.t_rule = joined(family, [](const Case& c) { return t_rule_text(c.t); });
  report.arg_rule = joined(family, [&](const Case& c) { return arg_rule_text(c.arg, kind == SeqKind::Coeff); });
  for (const auto& c : family.cases) {
    if (std::find(report.moduli.begin(), report.moduli.end(), c.modulus) == report.moduli.end()) {
      report.moduli.push_back(c.modulus);
    }
  }

  auto& cache = shared_cache();
  std::size_t nontrivial = 0;
  std::set<unsigned long> js;
  std::set<long> ts;

  for (const auto& c : family.cases) {
    for (const unsigned long j : j_window(c, options, kind)) {
      const std::optional<long> t = c.t ? std::optional<long>(c.t->t_of(j)) : std::nullopt;
      if (c.t && c.t->alpha != 0) js.insert(j);
      if (t) ts.insert(*t);

      unsigned long max_arg = budget;
      unsigned long lead = 0;
      if (kind == SeqKind::Modd) {
        lead = static_cast<unsigned long>(*t) * static_cast<unsigned long>(*t);
        if (lead > budget) max_arg = lead + 2000;
      } else if (kind == SeqKind::Coeff) {
        lead = static_cast<unsigned long>(*t);
      }
      report.max_arg = std::max(report.max_arg, max_arg);

      const auto args = arguments(c.arg, family.min_arg, max_arg);
      nontrivial += static_cast<std::size_t>(
          std::count_if(args.begin(), args.end(), [&](const Arg& x) { return x.value >= lead; }));
      if (args.empty()) continue;

      // Coefficient source for this (case, t).
      std::function<mpz_class(unsigned long)> value;
      std::optional<macmahon::ModdEvaluator> modd;
      std::optional<macmahon::ModdEvaluator> reference;
      std::shared_ptr<const Series> series;
      std::vector<mpz_class> coeffs;
      switch (kind) {
        case SeqKind::Modd:
          modd.emplace(a, static_cast<unsigned>(*t), max_arg, cache);
          value = [&](unsigned long x) { return (*modd)(x); };
          if (c.expect == Expect::QuarterMinus2) {
            reference.emplace(-2, static_cast<unsigned>(*t / 2), max_arg / 4, cache);
          }
          break;
        case SeqKind::PrefactorA:
        case SeqKind::Overpartition:
          series = cache.get(kind == SeqKind::PrefactorA ? macmahon::PrefactorCache::Kind::PrefactorA
                                                         : macmahon::PrefactorCache::Kind::Overpartition,
                             max_arg + 1);
          value = [&](unsigned long x) { return (*series)[x]; };
          break;
        case SeqKind::Coeff:
          coeffs.assign(max_arg + 1, mpz_class(0));
          if (a == 1) {
            const Series col = macmahon::riordan_column(1, static_cast<unsigned>(*t), max_arg + 1);
            for (unsigned long n = 0; n <= max_arg; ++n) coeffs[n] = col[n];
          } else {
#pragma omp parallel for schedule(dynamic, 16)
            for (unsigned long n = 1; n <= max_arg; ++n) coeffs[n] = macmahon::coeff_c(a, static_cast<unsigned>(*t), n);
          }
          value = [&](unsigned long x) { return coeffs[x]; };
          break;
      }

      auto expected_of = [&](const Arg& x) -> mpz_class {
        switch (c.expect) {
          case Expect::Residue: return c.expected(x.n_index);
          case Expect::QuarterMinus2: return (*reference)(x.value / 4);
          default: return 0;
        }
      };
      auto holds = [&](const Arg& x) {
        const mpz_class v = value(x.value);
        switch (c.expect) {
          case Expect::CongZero: return mpz_divisible_ui_p(v.get_mpz_t(), c.modulus) != 0;
          case Expect::ExactZero: return sgn(v) == 0;
          case Expect::Residue: {
            const long e = c.expected(x.n_index);
            return static_cast<long>(mpz_fdiv_ui(v.get_mpz_t(), c.modulus)) ==
                   ((e % static_cast<long>(c.modulus)) + static_cast<long>(c.modulus)) % static_cast<long>(c.modulus);
          }
          case Expect::QuarterMinus2: return v == expected_of(x);
        }
        return false;
      };

      report.checked += args.size();
      if (auto bad = first_failure(args.size(), [&](std::size_t i) { return holds(args[i]); })) {
        const Arg& x = args[*bad];
        Counterexample ce;
        if (c.t && c.t->alpha != 0) ce.j = j;
        ce.t = t;
        ce.n_index = x.n_index;
        ce.argument = x.value;
        ce.modulus = c.modulus;
        ce.value = mod_text(value(x.value), c.modulus);
        ce.expected = c.expect == Expect::CongZero ? "0 mod " + std::to_string(c.modulus)
                      : c.expect == Expect::ExactZero ? "0"
                                                      : mod_text(expected_of(x), c.modulus);
        report.counterexample = ce;
        report.pass = false;
        report.j_values.assign(js.begin(), js.end());
        report.t_values.assign(ts.begin(), ts.end());
        report.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return report;
      }
    }
  }

  if (nontrivial == 0) {
    throw BudgetTooSmall("family " + family.id + ": no nontrivial coefficient up to argument " +
                         std::to_string(budget));
  }

  if (family.easy3_crosscheck) {
    for (const long t : ts) {
      const unsigned long max_arg =
          std::max(budget, static_cast<unsigned long>(t * t) + 2000);
      const macmahon::ModdEvaluator m2(-2, static_cast<unsigned>(t), max_arg, cache);
      const macmahon::ModdEvaluator m1(1, static_cast<unsigned>(t), max_arg, cache);
      report.checked += max_arg + 1;
      if (auto bad = first_failure(max_arg + 1, [&](std::size_t n) {
            const mpz_class d = m2(n) - m1(n);
            return mpz_divisible_ui_p(d.get_mpz_t(), 3) != 0;
          })) {
        Counterexample ce;
        ce.t = t;
        ce.n_index = *bad;
        ce.argument = *bad;
        ce.modulus = 3;
        ce.value = mod_text(m1(*bad), 3);
        ce.expected = "m_odd(-2,t;n) = " + mod_text(m2(*bad), 3);
        report.counterexample = ce;
        break;
      }
    }
  }

  report.pass = !report.counterexample.has_value();
  report.j_values.assign(js.begin(), js.end());
  report.t_values.assign(ts.begin(), ts.end());
  report.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

VerifyReport verify_family(std::string_view id, const SweepOptions& options) {
  return verify_family(lookup(id), options);
}

std::vector<VerifyReport> verify_all(const std::vector<CongruenceFamily>& families, Profile profile) {
  if (families.empty()) throw std::invalid_argument("verify_all: empty family registry");
  std::vector<VerifyReport> out;
  out.reserve(families.size());
  SweepOptions opt;
  opt.profile = profile;
  for (const auto& f : families) out.push_back(verify_family(f, opt));
  return out;
}

std::vector<VerifyReport> verify_all(Profile profile) { return verify_all(registry(), profile); }

std::string to_json_line(const VerifyReport& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["sequence"] = r.sequence;
  j["t_rule"] = r.t_rule;
  j["arg_rule"] = r.arg_rule;
  if (r.moduli.size() == 1) {
    j["modulus"] = r.moduli.front();
  } else {
    j["modulus"] = r.moduli;
  }
  j["ranges"] = {{"J", r.j_values}, {"t", r.t_values}, {"max_arg", r.max_arg}, {"checked", r.checked}};
  j["status"] = r.pass ? "pass" : "fail";
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    nlohmann::ordered_json ce;
    ce["J"] = c.j ? nlohmann::json(*c.j) : nlohmann::json(nullptr);
    ce["t"] = c.t ? nlohmann::json(*c.t) : nlohmann::json(nullptr);
    ce["N"] = c.n_index;
    ce["argument"] = c.argument;
    ce["value"] = c.value;
    ce["expected"] = c.expected;
    ce["modulus"] = c.modulus;
    j["counterexample"] = ce;
  } else {
    j["counterexample"] = nullptr;
  }
  j["millis"] = std::round(r.millis * 10.0) / 10.0;
  return j.dump();
}

}  // namespace qlab::congruences
