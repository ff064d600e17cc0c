#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shc {

/// Invalid model parameters or configuration (q >= p, unknown algorithm, ...).
class ParameterError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Graph construction failures: out-of-range endpoints and self-loops.
class GraphError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// An Instance that breaks one of its structural invariants.
class InstanceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// SBM sampling gave up after too many disconnected draws.
class GenerationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A local search that cannot drain its work set.
class SearchError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input. line() is 1-based, 0 when the error is not tied to a line.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

} // namespace shc
