#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chipfire {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller broke a documented precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The graph is not connected; divisor theory is undefined on it.
class DisconnectedGraph : public Error {
 public:
  using Error::Error;
};

// Malformed graph or divisor text. line() is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline void require(bool condition, const std::string& message) {
  if (!condition) throw InvalidArgument(message);
}

}  // namespace detail

}  // namespace chipfire
