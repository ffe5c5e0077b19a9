#pragma once

#include <stdexcept>
#include <string>

namespace nekrasov {

// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A factor with a negative exponent evaluated to zero.
class PoleError : public Error {
 public:
  using Error::Error;
};

// A torus weight is the zero linear form. At generic parameters every fixed
// point is isolated, so this always indicates a formula bug.
class VanishingWeight : public Error {
 public:
  using Error::Error;
};

// 2k + w1 is odd: no fixed point can carry this k.
class ParityError : public Error {
 public:
  using Error::Error;
};

// Requested grade 4n is not congruent to w1 mod 4.
class GradeError : public Error {
 public:
  using Error::Error;
};

class OutOfDiagram : public Error {
 public:
  using Error::Error;
};

class HalfDegreeError : public Error {
 public:
  using Error::Error;
};

class NonIntegralExponent : public Error {
 public:
  using Error::Error;
};

class ResampleExhausted : public Error {
 public:
  using Error::Error;
};

// Violated internal invariant (convention bug), never a user error.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nekrasov
