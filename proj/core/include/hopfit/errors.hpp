#pragma once

#include <stdexcept>
#include <string>

namespace hopfit {

// A structural invariant failed on input data (bad table, bad partition,
// missing precondition).  The message names the first offending entry.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration guard tripped.  `flag` names the CLI option that raises it.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what_exceeded, long long value, long long cap,
              std::string flag)
      : std::runtime_error(what_exceeded + " is " + std::to_string(value) +
                           ", cap is " + std::to_string(cap) + " (raise with " +
                           flag + ")"),
        flag_(std::move(flag)) {}

  const std::string& flag() const { return flag_; }

 private:
  std::string flag_;
};

// Malformed input text; `line` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, int line, const std::string& message)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " +
                           message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace hopfit
