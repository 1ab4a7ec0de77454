#pragma once

#include <vector>

#include "gdinv/matrix.hpp"

namespace gdinv {

/// A matrix together with its index k = least k >= 0 with
/// rank(A^k) = rank(A^{k+1}), and the rank chain rank(A^0) .. rank(A^{k+1}).
struct IndexedMatrix {
  GqMatrix a;
  Index k{0};
  std::vector<Index> rank_chain;
};

IndexedMatrix matrix_index(const GqMatrix& a);

/// A = F * G with F the pivot columns of A (full column rank) and G the first
/// rank(A) rows of RREF(A). Rank 0 yields empty factors with A = 0.
struct FullRankFactorization {
  GqMatrix f;  // n x r
  GqMatrix g;  // r x m
};

FullRankFactorization full_rank_factorization(const GqMatrix& a);

/// A = P * blockdiag(C, N) * P^{-1} with C invertible (s x s, s = rank(A^k))
/// and N nilpotent of index k. Columns of P: pivot-column basis of A^k, then
/// nullspace basis of A^k, both from the deterministic exact-core kernels.
struct CoreNilpotentDecomposition {
  GqMatrix p;
  GqMatrix p_inv;
  GqMatrix c;  // s x s, invertible
  GqMatrix n;  // (n-s) x (n-s), nilpotent
  Index s{0};
  Index k{0};

  GqMatrix reassemble() const { return p * block_diag(c, n) * p_inv; }
};

CoreNilpotentDecomposition core_nilpotent(const GqMatrix& a);

}  // namespace gdinv
