#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dnacodes {

/// Malformed textual input. `line()` is 1-based, 0 when not line-oriented.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An instance exceeds the enumeration budget of an exhaustive routine.
class RefusedError : public std::runtime_error {
 public:
  RefusedError(const std::string& what, std::uint64_t required)
      : std::runtime_error(what), required_(required) {}

  /// Estimated work or item count that would have been needed.
  std::uint64_t required() const noexcept { return required_; }

 private:
  std::uint64_t required_;
};

}  // namespace dnacodes
