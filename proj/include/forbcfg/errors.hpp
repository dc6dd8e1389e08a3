#pragma once

#include <stdexcept>
#include <string>

namespace forbcfg {

// Argument outside an operation's stated domain.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Instance too large for the requested mode.
struct SizeError : std::runtime_error {
  explicit SizeError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed matrix text; line/col are 1-based.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ", col " +
                           std::to_string(col) + ")"),
        line(line),
        col(col) {}
  int line;
  int col;
};

// A generated object failed its own self-check.
struct VerificationError : std::runtime_error {
  explicit VerificationError(const std::string& msg)
      : std::runtime_error(msg) {}
};

}  // namespace forbcfg
