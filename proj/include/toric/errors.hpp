#pragma once

#include <stdexcept>
#include <string>

namespace toric {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit together (non-square determinant, length mismatch).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// The object lacks a structural property the operation needs
/// (pointedness, full rank, full dimension).
class StructureError : public Error {
 public:
  using Error::Error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent external input.
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace toric
