#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace l2tree {

/// A required descriptor field is missing, so the requested quantity cannot be derived.
class InsufficientDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two available routes to the same quantity disagree.
class ConflictError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A theorem hypothesis fails on the supplied data.
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent computations of the same value disagree. Always a defect.
class InternalInconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Input rejected by a structural check (graph invariants, JSON schema).
class InvalidInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " at line " + std::to_string(line) + ", column " +
                           std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace l2tree
