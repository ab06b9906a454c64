#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cordial {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Family parameters or function arguments outside their valid domain.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A graph would exceed the representable order.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Labelling length or vertex index does not match the graph.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Graph order outside the exhaustive solver's range.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Input graph lacks a structural property the operation needs (e.g. not a tree).
class StructureError : public Error {
 public:
  using Error::Error;
};

/// An internal postcondition failed. Indicates a bug, not bad input.
class DefectError : public Error {
 public:
  using Error::Error;
};

/// Anything that went wrong while decoding text or bytes.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Byte outside the printable graph6 range, or an unexpected character.
class MalformedInputError : public ParseError {
 public:
  MalformedInputError(const std::string& what, std::size_t offset)
      : ParseError(what + " at byte offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Payload shorter or longer than the header promises.
class LengthError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Nonzero padding bits or a non-canonical size header.
class StrictnessError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Edge-list token that is not an integer where one is expected.
class SyntaxError : public ParseError {
 public:
  SyntaxError(const std::string& what, std::size_t line)
      : ParseError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Well-formed edge-list line that describes an illegal edge.
class ValidationError : public ParseError {
 public:
  ValidationError(const std::string& what, std::size_t line)
      : ParseError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace cordial
