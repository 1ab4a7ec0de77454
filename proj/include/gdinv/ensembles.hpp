#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gdinv/inverses.hpp"
#include "gdinv/rng.hpp"

namespace gdinv {

/// A request for a random n x n matrix with rank(A^k) = r and ind(A) = k.
struct EnsembleSpec {
  Index n{2};
  Index r{1};
  Index k{1};
  std::uint64_t seed{0};
  long entry_bound{3};
  bool complex_entries{false};
};

void validate_spec(const EnsembleSpec& spec);

/// Feasible (r, k) pairs for dimension n: (n, 0) plus every r < n with
/// 1 <= k <= n - r.
std::vector<std::pair<Index, Index>> feasible_rank_index_combos(Index n);

/// Reverse-assembles A = P blockdiag(C, N) P^{-1} from random invertible
/// integer P and C and a nilpotent N of exact index k (a shift chain of
/// length k conjugated by a random invertible integer matrix). The result is
/// checked against its own postcondition (index and core rank) before being
/// returned.
GqMatrix random_matrix_with_index(const EnsembleSpec& spec);

/// Random integer matrix with entries in [-bound, bound] (plus an imaginary
/// integer part when complex_entries).
GqMatrix random_int_matrix(SplitMix64& rng, Index rows, Index cols, long bound,
                           bool complex_entries = false);

/// Invertible integer matrix by rejection sampling (cap 64 resamples).
GqMatrix random_invertible(SplitMix64& rng, Index dim, long bound, bool complex_entries = false);

InnerParam random_inner_param(const GqMatrix& a, std::uint64_t seed, long bound = 3,
                              bool complex_entries = false);

/// A random member of A{GD} built from the given decomposition and a random
/// inner parameter for the nilpotent block.
GqMatrix random_g_drazin(const GqMatrix& a, const CoreNilpotentDecomposition& cnd,
                         std::uint64_t seed, long bound = 3, bool complex_entries = false);

enum class SharpSide { Left, Right };

/// A = S blockdiag(D, 0, 0) S^{-1}, B = S blockdiag(D, E, 0) S^{-1} with
/// invertible D (d x d) and E (e x e). Such a pair satisfies both sharp
/// orders; the returned pair is postcondition-checked for the requested side.
std::pair<GqMatrix, GqMatrix> sharp_pair_with_blocks(Index n, Index d, Index e, SharpSide side,
                                                     std::uint64_t seed, long bound = 3,
                                                     bool complex_entries = false);

/// sharp_pair_with_blocks with block sizes sampled from the seed.
std::pair<GqMatrix, GqMatrix> random_ordered_pair_sharp(Index n, SharpSide side,
                                                        std::uint64_t seed, long bound = 3,
                                                        bool complex_entries = false);

}  // namespace gdinv
