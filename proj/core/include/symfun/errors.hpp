#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symfun {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class PoleAtSpecialization : public Error {
 public:
  PoleAtSpecialization() : Error("denominator vanishes under the specialization") {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class NotDivisible : public Error {
 public:
  NotDivisible() : Error("polynomial division is not exact") {}
};

class InvalidPartition : public Error {
 public:
  using Error::Error;
};

class LengthExceedsN : public Error {
 public:
  LengthExceedsN(std::size_t length, int n)
      : Error("partition length " + std::to_string(length) + " exceeds N = " + std::to_string(n)) {}
};

class BasisMismatch : public Error {
 public:
  using Error::Error;
};

class SingularTransition : public Error {
 public:
  using Error::Error;
};

class NotSymmetric : public Error {
 public:
  using Error::Error;
};

class NotAlternating : public Error {
 public:
  using Error::Error;
};

class NotOneBox : public Error {
 public:
  using Error::Error;
};

class InvalidStep : public Error {
 public:
  using Error::Error;
};

class PoleAtSample : public Error {
 public:
  using Error::Error;
};

class SingularSampleSystem : public Error {
 public:
  SingularSampleSystem() : Error("sample system is singular") {}
};

}  // namespace symfun
