#pragma once

#include <stdexcept>
#include <string>

namespace bjop {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivideByZeroError : Error {
  DivideByZeroError() : Error("division by zero") {}
};

struct DimensionMismatchError : Error {
  DimensionMismatchError(int a, int b)
      : Error("dimension mismatch: " + std::to_string(a) + " vs " +
              std::to_string(b)) {}
};

struct IndexOutOfRangeError : Error {
  IndexOutOfRangeError(int j, int dim)
      : Error("variable index " + std::to_string(j) +
              " out of range for dimension " + std::to_string(dim)) {}
};

struct GridError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

// Carries the byte offset of the offending token in the source string.
struct ParseError : Error {
  std::size_t offset;
  ParseError(const std::string& msg, std::size_t off)
      : Error(msg + " at byte " + std::to_string(off)), offset(off) {}
};

}  // namespace bjop
