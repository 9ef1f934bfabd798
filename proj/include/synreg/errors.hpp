#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace synreg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed program text. Line and column are 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class InvalidPosition : public Error {
 public:
  using Error::Error;
};

class InvalidPath : public Error {
 public:
  using Error::Error;
};

// Base of every refusal raised by an analysis (as opposed to bad input).
class AnalysisError : public Error {
 public:
  AnalysisError(const std::string& kind, const std::string& what)
      : Error(what), kind_(kind) {}

  // Short machine-readable tag, e.g. "non-conservative".
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

class NonConservative : public AnalysisError {
 public:
  explicit NonConservative(const std::string& subterm)
      : AnalysisError("non-conservative", "non-conservative at " + subterm),
        subterm_(subterm) {}

  const std::string& subterm() const { return subterm_; }

 private:
  std::string subterm_;
};

class UnboundedLoop : public AnalysisError {
 public:
  explicit UnboundedLoop(const std::string& what)
      : AnalysisError("unbounded-loop", what) {}
};

class NotFinitelyComplemented : public AnalysisError {
 public:
  explicit NotFinitelyComplemented(const std::string& what)
      : AnalysisError("not-finitely-complemented", what) {}
};

class UnsupportedShape : public AnalysisError {
 public:
  explicit UnsupportedShape(const std::string& what)
      : AnalysisError("unsupported-shape", what) {}
};

}  // namespace synreg
