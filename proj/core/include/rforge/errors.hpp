#pragma once

#include <stdexcept>
#include <string>

namespace rforge {

// Every failure raised by the library derives from Error so callers (the CLI
// in particular) can map families of failures onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RingMismatch : public Error {
 public:
  using Error::Error;
};

class ZeroInput : public Error {
 public:
  using Error::Error;
};

class ParameterOutOfRange : public Error {
 public:
  using Error::Error;
};

class UnmappedVariable : public Error {
 public:
  using Error::Error;
};

class DegenerateInput : public Error {
 public:
  using Error::Error;
};

// A row selection whose walk leaves the n x (d+1) lattice; its minor is
// identically zero.
class ZeroMinor : public Error {
 public:
  using Error::Error;
};

// Raised when a Buchberger run crosses one of its configured limits. Never
// accompanied by a partial answer.
class ResourceExhausted : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace rforge
