#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordalg {

enum class ErrorKind {
  Parse,            // malformed structure / literal / expression text
  Usage,            // bad command-line use or malformed input file
  Shape,            // value not well-shaped for its descriptor
  Capability,       // descriptor lacks the required algebraic capability
  Domain,           // operation undefined at this input (level(0), 1/0, ...)
  NotSummable,      // countable sum that cannot be evaluated in the structure
  NotRepresentable, // bounded set without a least upper bound, value outside P
  Validation,       // input data violates a documented invariant
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(ErrorKind::Parse, what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace ordalg
