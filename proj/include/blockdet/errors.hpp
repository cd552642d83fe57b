#pragma once

#include <stdexcept>
#include <string>

namespace blockdet {

// Base class for everything this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph input: bad vertex, duplicate arc, zero weight, bad text.
class InvalidGraph : public Error {
 public:
  using Error::Error;
};

// Malformed textual input other than a graph (family descriptors, flags).
class ParseError : public Error {
 public:
  using Error::Error;
};

// A well-formed input that a method cannot handle (size bound, loop on a
// cut vertex, disconnected input, illegal family parameters, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace blockdet
