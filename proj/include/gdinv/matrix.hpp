#pragma once

#include <initializer_list>
#include <vector>

#include "gdinv/eigen_support.hpp"
#include "gdinv/errors.hpp"
#include "gdinv/rational.hpp"

namespace gdinv {

using Index = Eigen::Index;

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// The one instantiation the project uses: dense matrices over Q(i).
using GqMatrix = DenseMatrix<GaussianRational>;
using GqVector = DenseVector<GaussianRational>;

template <class Scalar>
bool matrix_equal(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

template <class Scalar>
bool is_zero_matrix(const DenseMatrix<Scalar>& a) {
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (!(a(i, j) == Scalar(0))) return false;
  return true;
}

/// Exact conjugate transpose.
template <class Scalar>
DenseMatrix<Scalar> ctranspose(const DenseMatrix<Scalar>& m) {
  return m.adjoint();
}

template <class Scalar>
DenseMatrix<Scalar> pow_of(const DenseMatrix<Scalar>& m, Index exponent) {
  if (m.rows() != m.cols()) throw ShapeError("matrix power needs a square matrix");
  DenseMatrix<Scalar> acc = DenseMatrix<Scalar>::Identity(m.rows(), m.rows());
  for (Index e = 0; e < exponent; ++e) acc = acc * m;
  return acc;
}

template <class Scalar>
DenseMatrix<Scalar> assemble_blocks(const DenseMatrix<Scalar>& tl, const DenseMatrix<Scalar>& tr,
                                    const DenseMatrix<Scalar>& bl, const DenseMatrix<Scalar>& br) {
  if (tl.rows() != tr.rows() || bl.rows() != br.rows() || tl.cols() != bl.cols() ||
      tr.cols() != br.cols())
    throw ShapeError("block dimensions do not agree");
  DenseMatrix<Scalar> out(tl.rows() + bl.rows(), tl.cols() + tr.cols());
  out.topLeftCorner(tl.rows(), tl.cols()) = tl;
  out.topRightCorner(tr.rows(), tr.cols()) = tr;
  out.bottomLeftCorner(bl.rows(), bl.cols()) = bl;
  out.bottomRightCorner(br.rows(), br.cols()) = br;
  return out;
}

template <class Scalar>
DenseMatrix<Scalar> block_diag(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  return assemble_blocks<Scalar>(a, DenseMatrix<Scalar>::Zero(a.rows(), b.cols()),
                                 DenseMatrix<Scalar>::Zero(b.rows(), a.cols()), b);
}

/// Column-major vectorization; the layout the equation solver stacks against.
template <class Scalar>
DenseVector<Scalar> vec_of(const DenseMatrix<Scalar>& m) {
  DenseVector<Scalar> v(m.rows() * m.cols());
  Index t = 0;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) v(t++) = m(i, j);
  return v;
}

template <class Scalar>
DenseMatrix<Scalar> unvec(const DenseVector<Scalar>& v, Index rows, Index cols) {
  if (v.size() != rows * cols) throw ShapeError("unvec size mismatch");
  DenseMatrix<Scalar> m(rows, cols);
  Index t = 0;
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = v(t++);
  return m;
}

/// Test/fixture helper: build a matrix from integer rows.
inline GqMatrix from_ints(std::initializer_list<std::initializer_list<long>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  GqMatrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != c) throw ShapeError("ragged row in matrix literal");
    Index j = 0;
    for (long v : row) m(i, j++) = GaussianRational(v);
    ++i;
  }
  return m;
}

/// Set of linearly independent vectors spanning a subspace of Q(i)^ambient.
/// The zero subspace is an ambient x 0 matrix.
template <class Scalar>
struct SubspaceBasis {
  DenseMatrix<Scalar> vectors;  // columns are the basis vectors

  Index ambient_dim() const { return vectors.rows(); }
  Index count() const { return vectors.cols(); }
};

using GqSubspace = SubspaceBasis<GaussianRational>;

}  // namespace gdinv
