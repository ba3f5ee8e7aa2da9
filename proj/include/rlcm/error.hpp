#pragma once

#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string

namespace rlcm {

//! Base class for all exceptions thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

//! Two elements from different families were combined.
class FamilyMismatch : public Error {
 public:
  FamilyMismatch() : Error("elements belong to different semigroup families") {}
};

//! A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

//! The requested solver is not available for this family.
class NotImplemented : public Error {
 public:
  using Error::Error;
};

//! An exact integer computation left the representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

//! A bounded search could not settle a question that needs an exact answer.
class Undecided : public Error {
 public:
  using Error::Error;
};

//! Malformed element or expression text.
class ParseError : public Error {
 public:
  ParseError(std::string const& msg, std::size_t pos)
      : Error("parse error at position " + std::to_string(pos) + ": " + msg),
        _pos(pos) {}

  std::size_t position() const noexcept {
    return _pos;
  }

 private:
  std::size_t _pos;
};

//! Invalid configuration file contents.
class ConfigError : public Error {
 public:
  ConfigError(std::string const& msg, std::size_t line)
      : Error("config line " + std::to_string(line) + ": " + msg),
        _line(line) {}

  std::size_t line() const noexcept {
    return _line;
  }

 private:
  std::size_t _line;
};

}  // namespace rlcm
