#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wibsp {

/// Raised when graph construction input violates the simple-graph contract.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A node set or solution does not satisfy a structural precondition.
class InvalidSolution : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A brute-force engine was asked to enumerate an instance above its guard.
class SolverRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Instance file syntax or semantic error; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace wibsp
