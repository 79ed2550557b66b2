#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphcap {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Invalid graph construction (self-loop, duplicate edge, id out of range).
class GraphError : public Error {
 public:
  using Error::Error;
};

/// Capacity and decomposition entry points require graphs without isolated vertices.
class IsolatedVertexError : public Error {
 public:
  explicit IsolatedVertexError(std::size_t vertex)
      : Error("vertex " + std::to_string(vertex) + " is isolated"), vertex_(vertex) {}
  std::size_t vertex() const noexcept { return vertex_; }

 private:
  std::size_t vertex_;
};

/// Argument outside the mathematical domain of a kernel function.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A size guard of a brute-force routine or the power construction was exceeded.
class GuardError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition on the inputs does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace graphcap
