#pragma once

#include <stdexcept>
#include <string>

namespace m0n {

// Base of everything the library throws for bad input or a failed internal
// consistency check. Catch this at the CLI boundary.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A subset or index set whose cardinality is outside the admissible range.
class SizeError : public Error {
 public:
  using Error::Error;
};

// A marking label outside 1..n, a repeated label, or a label that is
// forbidden in this position (e.g. the omitted label of a model).
class LabelError : public Error {
 public:
  using Error::Error;
};

// A vital span that is not a proper linear subspace.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Values built for different n (or different models) were mixed.
class ArityError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An arithmetic identity that must hold failed; the inputs are inconsistent.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

// A toric functional whose support is not the expected two-ray shape.
class ShapeViolation : public Error {
 public:
  using Error::Error;
};

class NotSimplicialError : public Error {
 public:
  using Error::Error;
};

}  // namespace m0n
