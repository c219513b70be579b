#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace contest {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed source text. Line and column are 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Valid Prolog that falls outside pure definite clauses (cut, negation,
/// arithmetic, built-ins, ...).
class UnsupportedFeature : public Error {
 public:
  UnsupportedFeature(std::size_t line, std::size_t column, const std::string& feature);
  const std::string& feature() const { return feature_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string feature_;
  std::size_t line_;
  std::size_t column_;
};

class NonAtomicGoal : public Error {
 public:
  using Error::Error;
};

class UnknownPredicate : public Error {
 public:
  using Error::Error;
};

class UnknownLabel : public Error {
 public:
  using Error::Error;
};

class UnknownFixture : public Error {
 public:
  using Error::Error;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

/// No rule applies to a RUNNING state. Indicates an engine bug.
class StuckState : public Error {
 public:
  using Error::Error;
};

/// A lockstep invariant between the concrete and symbolic sides failed.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace contest
