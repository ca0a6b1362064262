#pragma once

#include <stdexcept>
#include <string>

namespace pmca {

/// Base class of every error thrown by the toolkit.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid caller input: out-of-range vertices, sets that violate a documented
/// precondition, malformed parameters.
class InputError : public Error {
public:
  explicit InputError(const std::string& what) : Error(what) {}
};

/// Malformed text input. Carries the 1-based line number when one applies.
class ParseError : public InputError {
public:
  ParseError(int line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  explicit ParseError(const std::string& what) : InputError(what), line_(0) {}

  int line() const { return line_; }

private:
  int line_;
};

/// A configured resource limit was hit: subset-scan size, search nodes, or the
/// fixed bit width of vertex sets.
class BudgetError : public Error {
public:
  explicit BudgetError(const std::string& what) : Error(what) {}
};

/// A structural property the library treats as a guaranteed fact failed to
/// hold. Callers must not swallow this: it signals a counterexample to
/// something the test suite certifies.
class InvariantViolation : public Error {
public:
  explicit InvariantViolation(const std::string& what) : Error(what) {}
};

}  // namespace pmca
