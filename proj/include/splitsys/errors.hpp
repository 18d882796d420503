#pragma once

#include <stdexcept>
#include <string>

namespace splitsys {

// Thrown when an enumeration would exceed its configured budget
// (Buneman vertex budget, search node budget). Maps to CLI exit code 3.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what)
      : std::runtime_error(what) {}
};

// Malformed split-system text. `line` is 1-based, 0 if not line-specific.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace splitsys
