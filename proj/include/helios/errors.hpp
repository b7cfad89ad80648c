#pragma once

#include <stdexcept>
#include <string>

namespace helios {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller supplied a value outside an operation's domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

// No exponent in [0, bound] maps to the decrypted group element. During a
// tally this is how a forged (non well-formed) ballot shows up.
class DlogOutOfRange : public Error {
 public:
  using Error::Error;
};

// The tally arithmetic produced an impossible outcome (negative frequency).
class TallyIntegrityError : public Error {
 public:
  using Error::Error;
};

// An attack construction that cannot exist under the configured scheme.
class ForgeryRefused : public Error {
 public:
  using Error::Error;
};

class DecodeError : public Error {
 public:
  using Error::Error;
};

}  // namespace helios
