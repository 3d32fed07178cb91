#pragma once

#include <stdexcept>
#include <string>

namespace svinv {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text that does not follow a grammar (rationals, basis elements, JSON).
class ParseError : public Error {
 public:
  using Error::Error;
};

// A basis element whose mode has the wrong parity for its family and sector.
class MalformedElementError : public Error {
 public:
  using Error::Error;
};

// Arguments that are well formed but outside an operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

class WindowError : public Error {
 public:
  using Error::Error;
};

// Raised when a result is requested from a truncated solve whose projected
// dimension changed between the bounds M and M+2.
class UnstabilizedError : public Error {
 public:
  using Error::Error;
};

}  // namespace svinv
