#pragma once

// A small language for eta/theta expressions, so that q-series identities
// can live in data files:
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ('^' ['-'] int)?
//   atom   := int | 'q' | 'f'<r> | name '(' arg ')' | '(' expr ')'
//   name   := 'phi' | 'psi' | 'P' | 'b' | 'aB'
//   arg    := ['-'] 'q' ('^' int)?
//
// Whitespace is insignificant and '#' starts a comment running to the end of
// the line. aB is the Borweins' a(q).

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "qlab/series.hpp"

namespace qlab::qexpr {

struct Expr;

struct ThetaArg {
  bool negated = false;
  unsigned power = 1;
  friend bool operator==(const ThetaArg&, const ThetaArg&) = default;
};

enum class ThetaKind { Phi, Psi, Pentagonal, BorweinB, BorweinA };

struct IntLit {
  mpz_class value;
  friend bool operator==(const IntLit& a, const IntLit& b) { return a.value == b.value; }
};
struct QVar {
  friend bool operator==(const QVar&, const QVar&) = default;
};
struct EtaAtom {
  unsigned scale;
  friend bool operator==(const EtaAtom&, const EtaAtom&) = default;
};
struct ThetaAtom {
  ThetaKind kind;
  ThetaArg arg;
  friend bool operator==(const ThetaAtom&, const ThetaAtom&) = default;
};
struct Paren {
  std::shared_ptr<const Expr> inner;
  friend bool operator==(const Paren& a, const Paren& b);
};

using Atom = std::variant<IntLit, QVar, EtaAtom, ThetaAtom, Paren>;

struct Factor {
  Atom atom;
  long exponent = 1;
  friend bool operator==(const Factor&, const Factor&) = default;
};

enum class MulOp { Mul, Div };

struct Term {
  int sign = 1;
  /// The first entry's operator is always Mul.
  std::vector<std::pair<MulOp, Factor>> factors;
  friend bool operator==(const Term&, const Term&) = default;
};

struct Expr {
  std::vector<Term> terms;
  friend bool operator==(const Expr&, const Expr&) = default;
};

/// Throws SyntaxError (with byte offset) or UnknownSymbol.
Expr parse(std::string_view text);

std::string to_string(const Expr& e);

/// Exact power series to `order` coefficients. Denominators may carry a
/// power of q; after removing it their constant term must be +-1
/// (DivisionByNonUnit otherwise). A result with a genuine negative power of
/// q raises NegativeValuation.
Series eval(const Expr& e, std::size_t order);
Series eval(std::string_view text, std::size_t order);

struct LemmaFixture {
  std::string name;
  std::string lhs;
  std::string rhs;
  std::size_t check_to = 0;
  /// When set, the lhs is replaced by its (m, r) dissection before comparing.
  std::optional<std::pair<std::size_t, std::size_t>> dissect;
};

struct FixtureReport {
  std::string name;
  bool pass = false;
  std::size_t checked_to = 0;
  std::optional<std::size_t> first_mismatch;
  std::string error;
};

/// Compares lhs and rhs exactly up to max(check_to, min_order).
FixtureReport check_fixture(const LemmaFixture& fx, std::size_t min_order = 0);

/// Blocks of `name:`, `lhs =`, `rhs =`, `check_to =` and optional `dissect = m, r`
/// lines separated by blank lines.
std::vector<LemmaFixture> parse_fixtures(std::string_view text);
std::vector<LemmaFixture> load_fixtures(const std::string& path);

}  // namespace qlab::qexpr
