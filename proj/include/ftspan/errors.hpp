#pragma once

#include <stdexcept>
#include <string>

namespace ftspan {

// Caller violated a documented precondition (bad ids, bad parameters).
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed input file.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A greedy trace that cannot have come from a complete run.
class CorruptTraceError : public std::runtime_error {
 public:
  explicit CorruptTraceError(const std::string& what)
      : std::runtime_error(what) {}
};

// An exhaustive computation would exceed its configured safety budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace ftspan
