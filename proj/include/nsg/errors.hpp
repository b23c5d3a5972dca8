#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nsg {

/// Base of every error the engine raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed cycle notation, generator files, or catalog names.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A configured guard (group order, search budget) was exceeded.
class ResourceLimitError : public Error {
 public:
  ResourceLimitError(std::string guard, std::size_t limit, const std::string& what)
      : Error(what), guard_(std::move(guard)), limit_(limit) {}

  const std::string& guard() const noexcept { return guard_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::string guard_;
  std::size_t limit_;
};

/// Bounded search ran out of budget before deciding. Distinct from "absent".
class SearchBudgetExceeded : public ResourceLimitError {
 public:
  using ResourceLimitError::ResourceLimitError;
};

/// Caller violated an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check failed. Always an engine bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace nsg
