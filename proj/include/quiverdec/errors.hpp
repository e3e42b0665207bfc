#pragma once

#include <stdexcept>
#include <string>

namespace quiverdec {

// Malformed input: file syntax, shape mismatches, bad flag values.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Inconsistent linear system handed to solve_lift.
struct NoSolutionError : std::domain_error {
  explicit NoSolutionError(const std::string& what) : std::domain_error(what) {}
};

// Internal consistency failure; signals a bug, never bad user input.
struct InvariantError : std::logic_error {
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

// Caller asked for a method outside its supported precondition range.
struct PreconditionError : std::invalid_argument {
  explicit PreconditionError(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace quiverdec
