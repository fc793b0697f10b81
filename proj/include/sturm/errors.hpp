#pragma once

#include <stdexcept>
#include <string>

namespace sturm {

// Base of every error raised by the library. Each subclass corresponds to one
// failure condition of a public operation.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroDivisor : public Error {
 public:
  using Error::Error;
};

class DegreeTooSmall : public Error {
 public:
  using Error::Error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

class BadInterval : public Error {
 public:
  using Error::Error;
};

class EndpointIsRoot : public Error {
 public:
  using Error::Error;
};

class NotSquarefree : public Error {
 public:
  using Error::Error;
};

class BadIndex : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class UndefinedEntry : public Error {
 public:
  using Error::Error;
};

class PoleInGamma : public Error {
 public:
  using Error::Error;
};

class SingularPair : public Error {
 public:
  using Error::Error;
};

// Two independent evaluation routes of the same quantity disagreed.
class RouteMismatch : public Error {
 public:
  using Error::Error;
};

class MissingGenerator : public Error {
 public:
  MissingGenerator(int j, int i)
      : Error("generator b(" + std::to_string(j) + ")_" + std::to_string(i) + " is not assigned"),
        j_(j),
        i_(i) {}

  int j() const noexcept { return j_; }
  int i() const noexcept { return i_; }

 private:
  int j_;
  int i_;
};

// Raised when a determinantal normalizer needs c(k) != 0 but c(k) vanishes.
// The witness is the offending determinant as a decimal string (always "0").
class DegenerateChain : public Error {
 public:
  DegenerateChain(int k, std::string witness)
      : Error("degenerate chain: c(" + std::to_string(k) + ") = " + witness),
        k_(k),
        witness_(std::move(witness)) {}

  int index() const noexcept { return k_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  int k_;
  std::string witness_;
};

}  // namespace sturm
