#ifndef BINET_ERROR_HPP
#define BINET_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace binet {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `line()` is 1-based, 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A disassembly line shaped like an instruction whose address or opcode
/// cannot be parsed.
class MalformedLine : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Edge-list header declares fewer nodes than the edges reference.
class InconsistentHeader : public ParseError {
 public:
  using ParseError::ParseError;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class EndpointOutOfRange : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DegenerateSize : public Error {
 public:
  using Error::Error;
};

class EmptyGraph : public Error {
 public:
  using Error::Error;
};

class InsufficientData : public Error {
 public:
  using Error::Error;
};

class AllDegreesEqual : public Error {
 public:
  using Error::Error;
};

class UnknownCfgNode : public Error {
 public:
  using Error::Error;
};

class IncompleteMetrics : public Error {
 public:
  using Error::Error;
};

}  // namespace binet

#endif  // BINET_ERROR_HPP
