#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mhc {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `offset` is a 0-based byte position in the parsed string.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error("parse error at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Structured input (a JSON file) that does not follow the expected schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace mhc
