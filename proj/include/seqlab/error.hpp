#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seqlab {

// Mathematical failure: division by zero, a pole, too few terms, a
// non-invertible leading coefficient. The CLI maps these to exit status 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public DomainError {
 public:
  DivisionByZero() : DomainError("division by zero") {}
};

class InexactDivision : public DomainError {
 public:
  using DomainError::DomainError;
};

class InsufficientTerms : public DomainError {
 public:
  InsufficientTerms(std::size_t required, std::size_t available)
      : DomainError("insufficient terms: need " + std::to_string(required) +
                    ", have " + std::to_string(available)),
        required_(required),
        available_(available) {}

  std::size_t required() const { return required_; }
  std::size_t available() const { return available_; }

 private:
  std::size_t required_;
  std::size_t available_;
};

// Two values from different coefficient rings met in one computation.
class RingMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace seqlab
