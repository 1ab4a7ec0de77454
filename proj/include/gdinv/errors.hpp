#pragma once

#include <stdexcept>
#include <string>

namespace gdinv {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& what) : Error("shape error: " + what) {}
};

class SingularMatrixError : public Error {
 public:
  explicit SingularMatrixError(const std::string& what = "matrix is singular") : Error(what) {}
};

class NotComplementaryError : public Error {
 public:
  explicit NotComplementaryError(const std::string& what = "subspaces are not complementary")
      : Error(what) {}
};

class NotAGDrazinInverseError : public Error {
 public:
  explicit NotAGDrazinInverseError(const std::string& what = "matrix is not a G-Drazin inverse")
      : Error(what) {}
};

class NotAnInnerInverseError : public Error {
 public:
  explicit NotAnInnerInverseError(const std::string& what = "matrix is not an inner inverse")
      : Error(what) {}
};

class AuxMissingError : public Error {
 public:
  explicit AuxMissingError(const std::string& what = "composite kind requires an auxiliary inverse")
      : Error(what) {}
};

class AuxNotInnerError : public Error {
 public:
  explicit AuxNotInnerError(const std::string& what = "auxiliary matrix is not an inner inverse")
      : Error(what) {}
};

class AuxNotOuterError : public Error {
 public:
  explicit AuxNotOuterError(const std::string& what = "auxiliary matrix is not an outer inverse")
      : Error(what) {}
};

class WitnessRequiredError : public Error {
 public:
  explicit WitnessRequiredError(const std::string& what = "order relation requires a witness")
      : Error(what) {}
};

class IndexTooLargeError : public Error {
 public:
  explicit IndexTooLargeError(const std::string& what = "sharp orders require index at most 1")
      : Error(what) {}
};

class InfeasibleSpecError : public Error {
 public:
  explicit InfeasibleSpecError(const std::string& what) : Error("infeasible spec: " + what) {}
};

class GenerationError : public Error {
 public:
  explicit GenerationError(const std::string& what) : Error("generation failed: " + what) {}
};

/// Raised when a mathematically guaranteed condition fails; always indicates a kernel bug.
class InternalInconsistencyError : public Error {
 public:
  explicit InternalInconsistencyError(const std::string& what)
      : Error("internal inconsistency: " + what) {}
};

class InvalidArgumentError : public Error {
 public:
  explicit InvalidArgumentError(const std::string& what) : Error("invalid argument: " + what) {}
};

}  // namespace gdinv
