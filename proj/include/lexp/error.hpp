#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lexp {

// Base of every error raised by the library. The CLI maps subclasses to exit
// codes (see tools/lexp.cpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

class InvalidInputError : public Error {
 public:
  using Error::Error;
};

class SizeError : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

class NotLineExpansionError : public Error {
 public:
  using Error::Error;
};

class InconsistentInputError : public Error {
 public:
  using Error::Error;
};

}  // namespace lexp
