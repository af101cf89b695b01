#pragma once

#include <stdexcept>
#include <string>

namespace cobsig {

// Base of every error raised by the library. Operation errors are distinct
// from I/O errors so front ends can map them to different exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violated by a caller-supplied argument.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Combinatorial structure is not a valid labeled cobordism.
class StructureError : public Error {
 public:
  using Error::Error;
};

// Edge lengths do not describe a nondegenerate Euclidean simplex.
class MetricError : public Error {
 public:
  using Error::Error;
};

// File missing, unreadable, or not in the expected format.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace cobsig
