#include "gdinv/spectral.hpp"

#include "gdinv/rref.hpp"

namespace gdinv {

IndexedMatrix matrix_index(const GqMatrix& a) {
  if (a.rows() != a.cols()) throw ShapeError("matrix index needs a square matrix");
  const Index n = a.rows();
  IndexedMatrix out;
  out.a = a;
  out.rank_chain.push_back(n);  // rank(A^0) = rank(I)
  GqMatrix power = GqMatrix::Identity(n, n);
  for (Index m = 1;; ++m) {
    power = power * a;
    out.rank_chain.push_back(rank_of(power));
    const std::size_t last = out.rank_chain.size() - 1;
    if (out.rank_chain[last] == out.rank_chain[last - 1]) {
      out.k = m - 1;
      return out;
    }
    // ranks strictly decrease until they stabilize, so m never exceeds n
  }
}

FullRankFactorization full_rank_factorization(const GqMatrix& a) {
  RrefResult<GaussianRational> rr = rref(a);
  FullRankFactorization out;
  out.f.resize(a.rows(), rr.rank);
  for (Index t = 0; t < rr.rank; ++t) out.f.col(t) = a.col(rr.pivot_cols[static_cast<std::size_t>(t)]);
  out.g = rr.reduced.topRows(rr.rank);
  return out;
}

CoreNilpotentDecomposition core_nilpotent(const GqMatrix& a) {
  if (a.rows() != a.cols()) throw ShapeError("core-nilpotent decomposition needs a square matrix");
  const Index n = a.rows();
  const IndexedMatrix im = matrix_index(a);
  const GqMatrix ak = pow_of(a, im.k);

  const GqSubspace range = column_space_basis(ak);
  const GqSubspace null = nullspace_basis(ak);
  const Index s = range.count();

  CoreNilpotentDecomposition out;
  out.s = s;
  out.k = im.k;
  out.p.resize(n, n);
  out.p.leftCols(s) = range.vectors;
  out.p.rightCols(n - s) = null.vectors;
  out.p_inv = inverse(out.p);

  const GqMatrix b = out.p_inv * a * out.p;
  out.c = b.topLeftCorner(s, s);
  out.n = b.bottomRightCorner(n - s, n - s);
  if (!is_zero_matrix<GaussianRational>(b.topRightCorner(s, n - s)) ||
      !is_zero_matrix<GaussianRational>(b.bottomLeftCorner(n - s, s)))
    throw InternalInconsistencyError("core-nilpotent off-diagonal blocks are nonzero");
  return out;
}

}  // namespace gdinv
