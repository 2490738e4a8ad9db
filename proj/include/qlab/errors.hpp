#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qlab {

/// Constant term of a series or polynomial that must be inverted is not +1/-1.
class NonUnitConstant : public std::domain_error {
 public:
  explicit NonUnitConstant(const std::string& what) : std::domain_error(what) {}
};

class BadResidue : public std::invalid_argument {
 public:
  explicit BadResidue(const std::string& what) : std::invalid_argument(what) {}
};

/// Coefficient requested at or beyond the truncation order.
class OutOfRange : public std::out_of_range {
 public:
  explicit OutOfRange(const std::string& what) : std::out_of_range(what) {}
};

class UnsupportedA : public std::invalid_argument {
 public:
  explicit UnsupportedA(int a)
      : std::invalid_argument("parameter a=" + std::to_string(a) + " not supported here"), a_(a) {}
  int a() const noexcept { return a_; }

 private:
  int a_;
};

class NonPrime : public std::invalid_argument {
 public:
  explicit NonPrime(long p) : std::invalid_argument(std::to_string(p) + " is not prime") {}
};

class ZeroArgument : public std::invalid_argument {
 public:
  explicit ZeroArgument(const std::string& what) : std::invalid_argument(what) {}
};

/// Parse failure in the q-expression language; `position` is a byte offset.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t position, const std::string& msg)
      : std::runtime_error("syntax error at offset " + std::to_string(position) + ": " + msg),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownSymbol : public std::runtime_error {
 public:
  UnknownSymbol(std::size_t position, const std::string& name)
      : std::runtime_error("unknown symbol '" + name + "' at offset " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class DivisionByNonUnit : public std::domain_error {
 public:
  explicit DivisionByNonUnit(const std::string& what) : std::domain_error(what) {}
};

class NegativeValuation : public std::domain_error {
 public:
  explicit NegativeValuation(const std::string& what) : std::domain_error(what) {}
};

class BudgetTooSmall : public std::invalid_argument {
 public:
  explicit BudgetTooSmall(const std::string& what) : std::invalid_argument(what) {}
};

class UnknownFamily : public std::out_of_range {
 public:
  explicit UnknownFamily(const std::string& id) : std::out_of_range("no congruence family '" + id + "'") {}
};

}  // namespace qlab
