#pragma once

#include <optional>
#include <vector>

#include "gdinv/rref.hpp"

namespace gdinv {

/// One linear constraint on an unknown matrix X: a sum of left*X*right terms
/// equals rhs. Plain L*X*R = C constraints are the single-term case;
/// multi-term constraints come up when solving for the free parameter of an
/// inverse family (e.g. Z - G A Z A G = C).
template <class Scalar>
struct MatrixEquation {
  struct Term {
    DenseMatrix<Scalar> left;
    DenseMatrix<Scalar> right;
  };
  std::vector<Term> terms;
  DenseMatrix<Scalar> rhs;
};

template <class Scalar>
MatrixEquation<Scalar> equation(DenseMatrix<Scalar> left, DenseMatrix<Scalar> right,
                                DenseMatrix<Scalar> rhs) {
  MatrixEquation<Scalar> eq;
  eq.terms.push_back({std::move(left), std::move(right)});
  eq.rhs = std::move(rhs);
  return eq;
}

template <class Scalar>
struct MatrixEquationSystem {
  Index unknown_rows{0};
  Index unknown_cols{0};
  std::vector<MatrixEquation<Scalar>> constraints;
};

template <class Scalar>
struct GeneralSolution {
  DenseMatrix<Scalar> particular;
  std::vector<DenseMatrix<Scalar>> homogeneous_basis;  // deterministic order

  bool unique() const { return homogeneous_basis.empty(); }
};

/// Stacks every constraint into one linear system over vec(X) via the
/// Kronecker identity vec(L X R) = (R^T (x) L) vec(X), runs exact
/// Gauss-Jordan on the augmented system, and reads off one particular
/// solution (free variables zero) plus a basis of the homogeneous space.
/// Returns nullopt exactly when the stacked system is inconsistent.
template <class Scalar>
std::optional<GeneralSolution<Scalar>> solve_matrix_equations(
    const MatrixEquationSystem<Scalar>& sys) {
  const Index ur = sys.unknown_rows;
  const Index uc = sys.unknown_cols;
  const Index unknowns = ur * uc;

  Index total_rows = 0;
  for (const auto& c : sys.constraints) {
    for (const auto& t : c.terms) {
      if (t.left.cols() != ur || t.right.rows() != uc)
        throw ShapeError("constraint term does not fit the unknown's shape");
      if (t.left.rows() != c.rhs.rows() || t.right.cols() != c.rhs.cols())
        throw ShapeError("constraint term does not fit its right-hand side");
    }
    if (c.terms.empty()) throw ShapeError("constraint with no terms");
    total_rows += c.rhs.rows() * c.rhs.cols();
  }

  DenseMatrix<Scalar> aug = DenseMatrix<Scalar>::Zero(total_rows, unknowns + 1);
  Index offset = 0;
  for (const auto& c : sys.constraints) {
    const Index cr = c.rhs.rows();
    for (const auto& t : c.terms) {
      for (Index j = 0; j < c.rhs.cols(); ++j) {
        for (Index i = 0; i < cr; ++i) {
          const Index row = offset + j * cr + i;
          for (Index p = 0; p < ur; ++p) {
            if (t.left(i, p) == Scalar(0)) continue;
            for (Index q = 0; q < uc; ++q) {
              if (t.right(q, j) == Scalar(0)) continue;
              aug(row, q * ur + p) += t.left(i, p) * t.right(q, j);
            }
          }
        }
      }
    }
    for (Index j = 0; j < c.rhs.cols(); ++j)
      for (Index i = 0; i < cr; ++i) aug(offset + j * cr + i, unknowns) += c.rhs(i, j);
    offset += cr * c.rhs.cols();
  }

  const std::vector<Index> pivots =
      rref_in_place(aug, static_cast<DenseMatrix<Scalar>*>(nullptr));
  if (!pivots.empty() && pivots.back() == unknowns) return std::nullopt;  // 0 = nonzero row

  GeneralSolution<Scalar> sol;
  DenseVector<Scalar> part = DenseVector<Scalar>::Zero(unknowns);
  for (std::size_t p = 0; p < pivots.size(); ++p)
    part(pivots[p]) = aug(static_cast<Index>(p), unknowns);
  sol.particular = unvec(part, ur, uc);

  std::size_t p = 0;
  for (Index f = 0; f < unknowns; ++f) {
    if (p < pivots.size() && pivots[p] == f) {
      ++p;
      continue;
    }
    DenseVector<Scalar> h = DenseVector<Scalar>::Zero(unknowns);
    h(f) = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      h(pivots[r]) = -aug(static_cast<Index>(r), f);
    sol.homogeneous_basis.push_back(unvec(h, ur, uc));
  }
  return sol;
}

/// The unique idempotent with the given column space and null space,
/// P = [U W] diag(I, 0) [U W]^{-1} for basis matrices U, W.
template <class Scalar>
DenseMatrix<Scalar> oblique_projector(const SubspaceBasis<Scalar>& range,
                                      const SubspaceBasis<Scalar>& null_space) {
  const Index n = range.ambient_dim();
  if (null_space.ambient_dim() != n)
    throw ShapeError("projector subspaces need a common ambient dimension");
  const Index r = range.count();
  if (r + null_space.count() != n)
    throw NotComplementaryError("subspace dimensions do not sum to the ambient dimension");
  DenseMatrix<Scalar> w(n, n);
  w.leftCols(r) = range.vectors;
  w.rightCols(n - r) = null_space.vectors;
  RrefResult<Scalar> rr = rref(w);
  if (rr.rank != n) throw NotComplementaryError("subspaces intersect nontrivially");
  return range.vectors * rr.transform.topRows(r);
}

}  // namespace gdinv
