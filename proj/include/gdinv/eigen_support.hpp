#pragma once

#include <Eigen/Core>

#include "gdinv/rational.hpp"

// Registers GaussianRational as an Eigen scalar. IsComplex routes adjoint()
// through conj() (found by ADL), so M.adjoint() is the exact conjugate
// transpose. epsilon is genuinely zero: the field is exact.
namespace Eigen {

template <>
struct NumTraits<gdinv::GaussianRational> : GenericNumTraits<gdinv::GaussianRational> {
  using Real = gdinv::GaussianRational;
  using NonInteger = gdinv::GaussianRational;
  using Literal = gdinv::GaussianRational;
  using Nested = gdinv::GaussianRational;

  enum {
    IsComplex = 1,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 120,
  };

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

// With Real identical to the scalar and IsComplex set, Eigen's generic
// ScalarBinaryOpTraits partial specializations tie; this one is more
// specialized than all of them and breaks the tie.
template <class BinaryOp>
struct ScalarBinaryOpTraits<gdinv::GaussianRational, gdinv::GaussianRational, BinaryOp> {
  using ReturnType = gdinv::GaussianRational;
};

}  // namespace Eigen
