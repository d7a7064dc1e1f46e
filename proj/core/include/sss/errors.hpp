#pragma once

#include <stdexcept>
#include <string>

namespace sss {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Letter out of range, unparsable token, unreduced word where a reduced
// one is required.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Rejection sampling exhausted its attempt budget.
class GenerationFailure : public Error {
 public:
  GenerationFailure(const std::string& what, int attempts)
      : Error(what), attempts_(attempts) {}
  int attempts() const { return attempts_; }

 private:
  int attempts_ = 0;
};

class PaddingFailure : public Error {
 public:
  using Error::Error;
};

class AccessDenied : public Error {
 public:
  using Error::Error;
};

class ProtocolCorruption : public Error {
 public:
  using Error::Error;
};

class UpdateAborted : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace sss
