#include "qlab/qexpr.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "qlab/errors.hpp"
#include "qlab/special.hpp"

namespace qlab::qexpr {

bool operator==(const Paren& a, const Paren& b) {
  if (!a.inner || !b.inner) return a.inner == b.inner;
  return *a.inner == *b.inner;
}

namespace {

// ---------------------------------------------------------------- parsing

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse_all() {
    Expr e = parse_expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(pos_, msg); }

  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool peek_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  mpz_class integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  long small_integer() {
    const std::size_t at = pos_;
    const mpz_class v = integer();
    if (!v.fits_slong_p() || v > 1'000'000'000) throw SyntaxError(at, "integer too large");
    return v.get_si();
  }

  Expr parse_expr() {
    Expr e;
    int sign = 1;
    if (accept('-')) {
      sign = -1;
    } else {
      accept('+');
    }
    e.terms.push_back(parse_term(sign));
    for (;;) {
      if (accept('+')) {
        e.terms.push_back(parse_term(1));
      } else if (accept('-')) {
        e.terms.push_back(parse_term(-1));
      } else {
        break;
      }
    }
    return e;
  }

  Term parse_term(int sign) {
    Term t;
    t.sign = sign;
    t.factors.emplace_back(MulOp::Mul, parse_factor());
    for (;;) {
      if (accept('*')) {
        t.factors.emplace_back(MulOp::Mul, parse_factor());
      } else if (accept('/')) {
        t.factors.emplace_back(MulOp::Div, parse_factor());
      } else {
        break;
      }
    }
    return t;
  }

  Factor parse_factor() {
    Factor f{parse_atom(), 1};
    if (accept('^')) {
      const bool neg = accept('-');
      const long v = small_integer();
      f.exponent = neg ? -v : v;
    }
    return f;
  }

  ThetaArg parse_arg() {
    ThetaArg arg;
    arg.negated = accept('-');
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != 'q') fail("expected q in theta argument");
    const std::size_t q_at = pos_;
    ++pos_;
    if (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
      pos_ = q_at;
      fail("theta argument must be a power of q");
    }
    if (accept('^')) {
      const std::size_t at = pos_;
      const long p = small_integer();
      if (p < 1) throw SyntaxError(at, "theta argument power must be positive");
      arg.power = static_cast<unsigned>(p);
    }
    return arg;
  }

  Atom parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return IntLit{integer()};
    if (c == '(') {
      ++pos_;
      auto inner = std::make_shared<const Expr>(parse_expr());
      expect(')');
      return Paren{std::move(inner)};
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("unexpected '" + std::string(1, c) + "'");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    if (name == "q") return QVar{};
    if (name.size() > 1 && name[0] == 'f' &&
        std::all_of(name.begin() + 1, name.end(), [](char d) { return std::isdigit(static_cast<unsigned char>(d)); })) {
      const long r = std::stol(name.substr(1));
      if (r < 1) throw UnknownSymbol(start, name);
      return EtaAtom{static_cast<unsigned>(r)};
    }
    static const std::map<std::string, ThetaKind> kThetas{{"phi", ThetaKind::Phi},
                                                           {"psi", ThetaKind::Psi},
                                                           {"P", ThetaKind::Pentagonal},
                                                           {"b", ThetaKind::BorweinB},
                                                           {"aB", ThetaKind::BorweinA}};
    const auto it = kThetas.find(name);
    if (it == kThetas.end()) throw UnknownSymbol(start, name);
    expect('(');
    ThetaArg arg = parse_arg();
    expect(')');
    return ThetaAtom{it->second, arg};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------- printing

const char* theta_name(ThetaKind k) {
  switch (k) {
    case ThetaKind::Phi: return "phi";
    case ThetaKind::Psi: return "psi";
    case ThetaKind::Pentagonal: return "P";
    case ThetaKind::BorweinB: return "b";
    case ThetaKind::BorweinA: return "aB";
  }
  return "?";
}

void print_expr(std::ostream& os, const Expr& e);

void print_atom(std::ostream& os, const Atom& atom) {
  std::visit(
      [&](const auto& a) {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, IntLit>) {
          os << a.value.get_str();
        } else if constexpr (std::is_same_v<T, QVar>) {
          os << 'q';
        } else if constexpr (std::is_same_v<T, EtaAtom>) {
          os << 'f' << a.scale;
        } else if constexpr (std::is_same_v<T, ThetaAtom>) {
          os << theta_name(a.kind) << '(' << (a.arg.negated ? "-q" : "q");
          if (a.arg.power != 1) os << '^' << a.arg.power;
          os << ')';
        } else {
          os << '(';
          print_expr(os, *a.inner);
          os << ')';
        }
      },
      atom);
}

void print_expr(std::ostream& os, const Expr& e) {
  for (std::size_t i = 0; i < e.terms.size(); ++i) {
    const auto& t = e.terms[i];
    if (i == 0) {
      if (t.sign < 0) os << '-';
    } else {
      os << (t.sign < 0 ? " - " : " + ");
    }
    for (std::size_t j = 0; j < t.factors.size(); ++j) {
      const auto& [op, f] = t.factors[j];
      if (j > 0) os << (op == MulOp::Mul ? '*' : '/');
      print_atom(os, f.atom);
      if (f.exponent != 1) os << '^' << f.exponent;
    }
  }
}

// ---------------------------------------------------------------- evaluation

/// q^val * s, where s knows `s.order()` coefficients.
struct QValue {
  long val = 0;
  Series s;
  long known_to() const { return val + static_cast<long>(s.order()); }
};

QValue normalized(QValue v) {
  if (auto k = v.s.valuation(); k && *k > 0) {
    v.s = unshift(v.s, *k);
    v.val += static_cast<long>(*k);
  }
  return v;
}

QValue multiply(const QValue& a, const QValue& b) { return {a.val + b.val, a.s * b.s}; }

QValue reciprocal(const QValue& v, const std::string& what) {
  const auto k = v.s.valuation();
  if (!k) throw DivisionByNonUnit("denominator " + what + " vanishes to the working order");
  Series unit = unshift(v.s, *k);
  if (!(unit[0] == 1 || unit[0] == -1)) {
    throw DivisionByNonUnit("denominator " + what + " has leading coefficient " + unit[0].get_str());
  }
  return {-(v.val + static_cast<long>(*k)), invert(unit)};
}

QValue power(const QValue& base, long e, const std::string& what) {
  QValue b = e < 0 ? reciprocal(base, what) : base;
  unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
  QValue result{0, Series::one(static_cast<std::size_t>(std::max(1L, b.known_to())))};
  result.s = truncate(result.s, b.s.order());
  while (n > 0) {
    if (n & 1UL) result = multiply(result, b);
    n >>= 1;
    if (n > 0) b = multiply(b, b);
  }
  return result;
}

class Evaluator {
 public:
  explicit Evaluator(std::size_t work) : work_(work) {}

  QValue expr(const Expr& e) {
    std::vector<QValue> parts;
    for (const auto& t : e.terms) parts.push_back(term(t));
    long lo = parts.front().val;
    long known = parts.front().known_to();
    for (const auto& p : parts) {
      lo = std::min(lo, p.val);
      known = std::min(known, p.known_to());
    }
    const auto width = static_cast<std::size_t>(std::max(0L, known - lo));
    Series total(width);
    for (const auto& p : parts) {
      total += truncate(shift(p.s, static_cast<std::size_t>(p.val - lo)), width);
    }
    return normalized({lo, std::move(total)});
  }

 private:
  QValue term(const Term& t) {
    // Pure f_r factors go through the sparse eta-quotient path in one go.
    std::map<unsigned, int> eta_exponents;
    QValue acc{0, Series::one(work_)};
    for (const auto& [op, f] : t.factors) {
      const long e = op == MulOp::Mul ? f.exponent : -f.exponent;
      if (const auto* eta_atom = std::get_if<EtaAtom>(&f.atom)) {
        eta_exponents[eta_atom->scale] += static_cast<int>(e);
        continue;
      }
      acc = multiply(acc, power(atom(f.atom), e, describe(f)));
    }
    std::vector<EtaFactor> factors;
    for (const auto& [r, e] : eta_exponents) {
      if (e != 0) factors.push_back({r, e});
    }
    if (!factors.empty()) acc = multiply(acc, {0, eta_quotient(EtaQuotientSpec(factors), work_)});
    if (t.sign < 0) acc.s = -acc.s;
    return normalized(std::move(acc));
  }

  static std::string describe(const Factor& f) {
    std::ostringstream os;
    print_atom(os, f.atom);
    return os.str();
  }

  QValue atom(const Atom& a) {
    return std::visit(
        [&](const auto& x) -> QValue {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, IntLit>) {
            return {0, Series::constant(x.value, work_)};
          } else if constexpr (std::is_same_v<T, QVar>) {
            return {1, Series::one(work_)};
          } else if constexpr (std::is_same_v<T, EtaAtom>) {
            return {0, eta(x.scale, work_)};
          } else if constexpr (std::is_same_v<T, ThetaAtom>) {
            return {0, theta(x)};
          } else {
            return expr(*x.inner);
          }
        },
        a);
  }

  Series theta(const ThetaAtom& t) {
    const std::size_t base_order = (work_ + t.arg.power - 1) / t.arg.power;
    Series base;
    switch (t.kind) {
      case ThetaKind::Phi: base = phi(base_order); break;
      case ThetaKind::Psi: base = psi(base_order); break;
      case ThetaKind::Pentagonal: base = pgen(base_order); break;
      case ThetaKind::BorweinB: base = borwein_b(base_order); break;
      case ThetaKind::BorweinA: base = borwein_a(base_order); break;
    }
    Series s = truncate(substitute_power(base, t.arg.power), work_);
    return t.arg.negated ? substitute_negq(s) : s;
  }

  std::size_t work_;
};

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

std::string to_string(const Expr& e) {
  std::ostringstream os;
  print_expr(os, e);
  return os.str();
}

Series eval(const Expr& e, std::size_t order) {
  if (order == 0) return Series(0);
  std::size_t work = order;
  // Division by q-divisible denominators costs precision; widen and retry.
  for (int attempt = 0; attempt < 8; ++attempt) {
    QValue v = Evaluator(work).expr(e);
    if (v.val < 0) {
      throw NegativeValuation("expression has a pole of order " + std::to_string(-v.val) + " at q = 0");
    }
    if (v.known_to() >= static_cast<long>(order)) {
      return truncate(shift(v.s, static_cast<std::size_t>(v.val)), order);
    }
    work += order - static_cast<std::size_t>(std::max(0L, v.known_to())) + 1;
  }
  throw std::runtime_error("could not reach the requested order " + std::to_string(order));
}

Series eval(std::string_view text, std::size_t order) { return eval(parse(text), order); }

FixtureReport check_fixture(const LemmaFixture& fx, std::size_t min_order) {
  FixtureReport report;
  report.name = fx.name;
  report.checked_to = std::max(fx.check_to, min_order);
  try {
    Series lhs;
    if (fx.dissect) {
      const auto [m, r] = *fx.dissect;
      lhs = dissect(eval(fx.lhs, m * report.checked_to + r), m, r);
    } else {
      lhs = eval(fx.lhs, report.checked_to);
    }
    const Series rhs = eval(fx.rhs, report.checked_to);
    report.first_mismatch = first_mismatch(truncate(lhs, report.checked_to), rhs);
    report.pass = !report.first_mismatch.has_value();
  } catch (const std::exception& ex) {
    report.pass = false;
    report.error = ex.what();
  }
  return report;
}

std::vector<LemmaFixture> parse_fixtures(std::string_view text) {
  std::vector<LemmaFixture> out;
  std::optional<LemmaFixture> cur;
  std::size_t line_no = 0;
  auto finish = [&]() {
    if (!cur) return;
    if (cur->name.empty() || cur->lhs.empty() || cur->rhs.empty() || cur->check_to == 0) {
      throw std::runtime_error("incomplete fixture block ending at line " + std::to_string(line_no));
    }
    out.push_back(std::move(*cur));
    cur.reset();
  };
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty()) {
      finish();
      continue;
    }
    if (line[0] == '#') continue;
    if (!cur) cur.emplace();
    const auto colon = line.find(':');
    const auto eq = line.find('=');
    if (line.rfind("name", 0) == 0 && colon != std::string::npos) {
      cur->name = trim(std::string_view(line).substr(colon + 1));
    } else if (eq != std::string::npos) {
      const std::string key = trim(std::string_view(line).substr(0, eq));
      const std::string value = trim(std::string_view(line).substr(eq + 1));
      if (key == "lhs") {
        cur->lhs = value;
      } else if (key == "rhs") {
        cur->rhs = value;
      } else if (key == "check_to") {
        cur->check_to = std::stoul(value);
      } else if (key == "dissect") {
        const auto comma = value.find(',');
        if (comma == std::string::npos) throw std::runtime_error("dissect needs 'm, r' at line " + std::to_string(line_no));
        cur->dissect = std::make_pair(std::stoul(value.substr(0, comma)), std::stoul(value.substr(comma + 1)));
      } else {
        throw std::runtime_error("unknown fixture key '" + key + "' at line " + std::to_string(line_no));
      }
    } else {
      throw std::runtime_error("malformed fixture line " + std::to_string(line_no));
    }
  }
  finish();
  return out;
}

std::vector<LemmaFixture> load_fixtures(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_fixtures(buf.str());
}

}  // namespace qlab::qexpr
