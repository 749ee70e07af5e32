#pragma once

#include <stdexcept>
#include <string>

namespace wsp {

// Base of every domain error raised by the library. Usage errors (bad
// arguments, malformed literals) use std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionOrderMismatch : public Error {
 public:
  using Error::Error;
};

class DegenerateDivisor : public Error {
 public:
  using Error::Error;
};

class PoleProximity : public Error {
 public:
  using Error::Error;
};

class DegenerateDenominator : public Error {
 public:
  using Error::Error;
};

class EmptyWindow : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class EmptySpan : public Error {
 public:
  using Error::Error;
};

}  // namespace wsp
