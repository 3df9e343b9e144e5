#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace collagram {

// Malformed input text: bad token, unknown rule kind, garbage at end of line.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(size_t line, const std::string& reason)
      : std::runtime_error("line " + std::to_string(line) + ": " + reason),
        line_(line) {}
  size_t line() const { return line_; }

 private:
  size_t line_;
};

// Structurally well-formed but semantically invalid: forward reference,
// out-of-range cut, repeat power below 2, and similar.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(uint32_t rule_id, const std::string& reason)
      : std::runtime_error("X" + std::to_string(rule_id) + ": " + reason),
        rule_id_(rule_id) {}
  explicit ValidationError(const std::string& reason)
      : std::runtime_error(reason), rule_id_(0) {}
  uint32_t rule_id() const { return rule_id_; }

 private:
  uint32_t rule_id_;
};

// A derived length or counter left its representable range.
class OverflowError : public std::runtime_error {
 public:
  explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

// An expansion (or explicit tree) would exceed the caller's byte/node budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(uint64_t required, uint64_t budget,
                 const std::string& unit = "bytes")
      : std::runtime_error("expansion needs " + std::to_string(required) + " " +
                           unit + ", budget is " + std::to_string(budget)),
        required_(required),
        budget_(budget) {}
  uint64_t required() const { return required_; }
  uint64_t budget() const { return budget_; }

 private:
  uint64_t required_;
  uint64_t budget_;
};

// Raised by encoders that need at least one input byte.
class EmptyInput : public std::runtime_error {
 public:
  EmptyInput() : std::runtime_error("input is empty") {}
};

}  // namespace collagram
