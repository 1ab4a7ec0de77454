#pragma once

#include <vector>

#include "gdinv/matrix.hpp"

namespace gdinv {

/// Gauss-Jordan elimination over an exact field.
///
/// Pivot rule: first nonzero entry in column order, no magnitude pivoting
/// (pointless over an exact field, and this keeps every output deterministic).
/// If `transform` is non-null it must come in as the identity and leaves as
/// the invertible T with T * (input) = (reduced output).
template <class Scalar>
std::vector<Index> rref_in_place(DenseMatrix<Scalar>& m, DenseMatrix<Scalar>* transform) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  std::vector<Index> pivot_cols;
  Index lead = 0;
  for (Index col = 0; col < cols && lead < rows; ++col) {
    Index piv = -1;
    for (Index i = lead; i < rows; ++i) {
      if (!(m(i, col) == Scalar(0))) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != lead) {
      m.row(piv).swap(m.row(lead));
      if (transform) transform->row(piv).swap(transform->row(lead));
    }
    const Scalar inv = Scalar(1) / m(lead, col);
    m.row(lead) *= inv;
    if (transform) transform->row(lead) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == lead) continue;
      const Scalar f = m(i, col);
      if (f == Scalar(0)) continue;
      m.row(i) -= f * m.row(lead);
      if (transform) transform->row(i) -= f * transform->row(lead);
    }
    pivot_cols.push_back(col);
    ++lead;
  }
  return pivot_cols;
}

template <class Scalar>
struct RrefResult {
  DenseMatrix<Scalar> reduced;    // the unique RREF
  DenseMatrix<Scalar> transform;  // invertible T with T * input = reduced
  std::vector<Index> pivot_cols;
  Index rank{0};
};

template <class Scalar>
RrefResult<Scalar> rref(const DenseMatrix<Scalar>& m) {
  RrefResult<Scalar> out;
  out.reduced = m;
  out.transform = DenseMatrix<Scalar>::Identity(m.rows(), m.rows());
  out.pivot_cols = rref_in_place(out.reduced, &out.transform);
  out.rank = static_cast<Index>(out.pivot_cols.size());
  return out;
}

/// Rank by forward elimination only (no transform bookkeeping).
template <class Scalar>
Index rank_of(DenseMatrix<Scalar> m) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  Index lead = 0;
  for (Index col = 0; col < cols && lead < rows; ++col) {
    Index piv = -1;
    for (Index i = lead; i < rows; ++i) {
      if (!(m(i, col) == Scalar(0))) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != lead) m.row(piv).swap(m.row(lead));
    for (Index i = lead + 1; i < rows; ++i) {
      if (m(i, col) == Scalar(0)) continue;
      const Scalar f = m(i, col) / m(lead, col);
      m.row(i) -= f * m.row(lead);
    }
    ++lead;
  }
  return lead;
}

/// Basis of {x : Mx = 0}. Deterministic: free columns in ascending index
/// order, free variable set to 1.
template <class Scalar>
SubspaceBasis<Scalar> nullspace_basis(const DenseMatrix<Scalar>& m) {
  DenseMatrix<Scalar> r = m;
  const std::vector<Index> pivots = rref_in_place(r, static_cast<DenseMatrix<Scalar>*>(nullptr));
  const Index cols = m.cols();
  const Index rank = static_cast<Index>(pivots.size());

  std::vector<Index> free_cols;
  {
    std::size_t p = 0;
    for (Index c = 0; c < cols; ++c) {
      if (p < pivots.size() && pivots[p] == c)
        ++p;
      else
        free_cols.push_back(c);
    }
  }

  DenseMatrix<Scalar> basis = DenseMatrix<Scalar>::Zero(cols, cols - rank);
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    const Index f = free_cols[t];
    basis(f, static_cast<Index>(t)) = Scalar(1);
    for (Index p = 0; p < rank; ++p) basis(pivots[static_cast<std::size_t>(p)], static_cast<Index>(t)) = -r(p, f);
  }
  return {basis};
}

/// Basis of R(M): the pivot columns of M itself, in RREF pivot order.
template <class Scalar>
SubspaceBasis<Scalar> column_space_basis(const DenseMatrix<Scalar>& m) {
  DenseMatrix<Scalar> r = m;
  const std::vector<Index> pivots = rref_in_place(r, static_cast<DenseMatrix<Scalar>*>(nullptr));
  DenseMatrix<Scalar> basis(m.rows(), static_cast<Index>(pivots.size()));
  for (std::size_t t = 0; t < pivots.size(); ++t)
    basis.col(static_cast<Index>(t)) = m.col(pivots[t]);
  return {basis};
}

enum class SubspaceRelation { Equal, FirstInSecond, SecondInFirst, Incomparable };

/// Exact containment test by ranks: U is in V iff rank([V|U]) = rank(V).
template <class Scalar>
SubspaceRelation subspace_relation(const SubspaceBasis<Scalar>& u, const SubspaceBasis<Scalar>& v) {
  if (u.ambient_dim() != v.ambient_dim())
    throw ShapeError("subspace comparison needs a common ambient dimension");
  const Index ru = rank_of(u.vectors);
  const Index rv = rank_of(v.vectors);
  DenseMatrix<Scalar> joint(u.ambient_dim(), u.count() + v.count());
  joint.leftCols(v.count()) = v.vectors;
  joint.rightCols(u.count()) = u.vectors;
  const Index rj = rank_of(joint);
  const bool first_in_second = rj == rv;
  const bool second_in_first = rj == ru;
  if (first_in_second && second_in_first) return SubspaceRelation::Equal;
  if (first_in_second) return SubspaceRelation::FirstInSecond;
  if (second_in_first) return SubspaceRelation::SecondInFirst;
  return SubspaceRelation::Incomparable;
}

template <class Scalar>
bool subspace_contained(const SubspaceBasis<Scalar>& u, const SubspaceBasis<Scalar>& v) {
  const SubspaceRelation rel = subspace_relation(u, v);
  return rel == SubspaceRelation::Equal || rel == SubspaceRelation::FirstInSecond;
}

template <class Scalar>
bool subspace_equal(const SubspaceBasis<Scalar>& u, const SubspaceBasis<Scalar>& v) {
  return subspace_relation(u, v) == SubspaceRelation::Equal;
}

/// Exact inverse via Gauss-Jordan; the transform of a full-rank RREF run.
template <class Scalar>
DenseMatrix<Scalar> inverse(const DenseMatrix<Scalar>& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse needs a square matrix");
  RrefResult<Scalar> r = rref(m);
  if (r.rank != m.rows()) throw SingularMatrixError();
  return r.transform;
}

}  // namespace gdinv
