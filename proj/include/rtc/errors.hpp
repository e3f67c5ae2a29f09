#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rtc {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& expectation)
      : Error("syntax error at offset " + std::to_string(offset) + ": expected " + expectation),
        offset_(offset),
        expectation_(expectation) {}

  std::size_t offset() const { return offset_; }
  const std::string& expectation() const { return expectation_; }

 private:
  std::size_t offset_;
  std::string expectation_;
};

class UnknownSymbol : public Error {
 public:
  explicit UnknownSymbol(const std::string& name) : Error("unknown symbol '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class ArityMismatch : public Error {
 public:
  ArityMismatch(const std::string& name, int expected, int got)
      : Error("arity mismatch for '" + name + "': expected " + std::to_string(expected) + ", got " +
              std::to_string(got)) {}
};

class UnboundVariable : public Error {
 public:
  explicit UnboundVariable(const std::string& name) : Error("unbound variable '" + name + "'") {}
};

class SignatureMismatch : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NotApplicable : public Error {
 public:
  using Error::Error;
};

class NotAnRtcFormula : public NotApplicable {
 public:
  explicit NotAnRtcFormula(const std::string& f) : NotApplicable("not an RTC formula: " + f) {}
};

class NoCounterexample : public Error {
 public:
  using Error::Error;
};

class MissingPairSymbol : public Error {
 public:
  MissingPairSymbol() : Error("signature has no pairing function") {}
};

class VariableClash : public Error {
 public:
  explicit VariableClash(const std::string& v) : Error("variable used twice: '" + v + "'") {}
};

class FreshnessViolation : public Error {
 public:
  explicit FreshnessViolation(const std::string& var)
      : Error("freshness violation: '" + var + "' occurs free in the context"), var_(var) {}
  const std::string& var() const { return var_; }

 private:
  std::string var_;
};

class SchemaMismatch : public Error {
 public:
  explicit SchemaMismatch(const std::string& detail) : Error("schema mismatch: " + detail) {}
};

class UnknownTheoryAxiom : public Error {
 public:
  explicit UnknownTheoryAxiom(const std::string& seq) : Error("not an instance of any theory axiom: " + seq) {}
};

class FormatError : public Error {
 public:
  FormatError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace rtc
