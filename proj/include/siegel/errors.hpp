#pragma once

#include <stdexcept>
#include <string>

namespace siegel {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class WeightMismatch : public Error {
 public:
  using Error::Error;
};

class DomainMismatch : public Error {
 public:
  using Error::Error;
};

// A coefficient has a denominator divisible by the reduction prime.
class NotPIntegral : public Error {
 public:
  using Error::Error;
};

// The truncation bound does not cover what the caller asked for.
class InsufficientBound : public Error {
 public:
  using Error::Error;
};

// An internal consistency check of a construction failed.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace siegel
