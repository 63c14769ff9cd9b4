#pragma once

#include <stdexcept>
#include <string>

namespace zeta {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller violated an operation's precondition (mismatched primes,
// non-coprime tensor operands, unsupported coefficient ring, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A value would break a type invariant (e.g. a local factor whose
// numerator has vanishing constant term).
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace zeta
