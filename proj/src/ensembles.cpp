#include "gdinv/ensembles.hpp"

#include "gdinv/orders.hpp"
#include "gdinv/rref.hpp"
#include "gdinv/spectral.hpp"

namespace gdinv {

namespace {
constexpr int kResampleCap = 64;
}

void validate_spec(const EnsembleSpec& spec) {
  if (spec.n < 1) throw InfeasibleSpecError("dimension must be at least 1");
  if (spec.r < 0 || spec.r > spec.n) throw InfeasibleSpecError("rank must lie in [0, n]");
  if (spec.k < 0 || spec.k > spec.n) throw InfeasibleSpecError("index must lie in [0, n]");
  if (spec.r == spec.n && spec.k != 0)
    throw InfeasibleSpecError("full core rank forces index 0");
  if (spec.r < spec.n && spec.k < 1)
    throw InfeasibleSpecError("a nontrivial nilpotent part needs index >= 1");
  if (spec.k >= 1 && spec.n - spec.r < spec.k)
    throw InfeasibleSpecError("no (n-r) x (n-r) nilpotent of index k exists");
  if (spec.entry_bound < 1) throw InfeasibleSpecError("entry bound must be at least 1");
}

std::vector<std::pair<Index, Index>> feasible_rank_index_combos(Index n) {
  std::vector<std::pair<Index, Index>> combos;
  combos.emplace_back(n, 0);
  for (Index r = 0; r < n; ++r)
    for (Index k = 1; k <= n - r; ++k) combos.emplace_back(r, k);
  return combos;
}

GqMatrix random_int_matrix(SplitMix64& rng, Index rows, Index cols, long bound,
                           bool complex_entries) {
  GqMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      const long re = rng.next_int(-bound, bound);
      if (complex_entries) {
        const long im = rng.next_int(-bound, bound);
        m(i, j) = GaussianRational(Rational(re), Rational(im));
      } else {
        m(i, j) = GaussianRational(re);
      }
    }
  }
  return m;
}

GqMatrix random_invertible(SplitMix64& rng, Index dim, long bound, bool complex_entries) {
  for (int attempt = 0; attempt < kResampleCap; ++attempt) {
    GqMatrix m = random_int_matrix(rng, dim, dim, bound, complex_entries);
    if (rank_of(m) == dim) return m;
  }
  throw GenerationError("no invertible sample within the resample cap");
}

GqMatrix random_matrix_with_index(const EnsembleSpec& spec) {
  validate_spec(spec);
  SplitMix64 rng(spec.seed);
  const Index n = spec.n;
  const Index r = spec.r;
  const Index k = spec.k;
  const Index m = n - r;

  const GqMatrix p = random_invertible(rng, n, spec.entry_bound, spec.complex_entries);
  const GqMatrix c = random_invertible(rng, r, spec.entry_bound, spec.complex_entries);

  // Shift chain of length k in the top-left corner: J^k = 0, J^{k-1} != 0.
  GqMatrix shift = GqMatrix::Zero(m, m);
  for (Index i = 0; i + 1 < k; ++i) shift(i, i + 1) = GaussianRational(1);
  GqMatrix nil;
  if (m > 0) {
    const GqMatrix s = random_invertible(rng, m, spec.entry_bound, spec.complex_entries);
    nil = s * shift * inverse<GaussianRational>(s);
  } else {
    nil = shift;
  }

  const GqMatrix a = p * block_diag(c, nil) * inverse<GaussianRational>(p);

  const IndexedMatrix im = matrix_index(a);
  if (im.k != k || rank_of(pow_of(a, k)) != r)
    throw InternalInconsistencyError("generated matrix misses its (rank, index) target");
  return a;
}

InnerParam random_inner_param(const GqMatrix& a, std::uint64_t seed, long bound,
                              bool complex_entries) {
  SplitMix64 rng(seed);
  return InnerParam{random_int_matrix(rng, a.cols(), a.rows(), bound, complex_entries)};
}

GqMatrix random_g_drazin(const GqMatrix& a, const CoreNilpotentDecomposition& cnd,
                         std::uint64_t seed, long bound, bool complex_entries) {
  SplitMix64 rng(seed);
  const Index m = cnd.n.rows();
  GDrazinParam p{cnd, InnerParam{random_int_matrix(rng, m, m, bound, complex_entries)}};
  return g_drazin(a, p);
}

std::pair<GqMatrix, GqMatrix> sharp_pair_with_blocks(Index n, Index d, Index e, SharpSide side,
                                                     std::uint64_t seed, long bound,
                                                     bool complex_entries) {
  if (d < 0 || e < 0 || d + e > n) throw InfeasibleSpecError("sharp pair blocks exceed dimension");
  SplitMix64 rng(seed);
  const GqMatrix s = random_invertible(rng, n, bound, complex_entries);
  const GqMatrix s_inv = inverse<GaussianRational>(s);
  const GqMatrix dd = random_invertible(rng, d, bound, complex_entries);
  const GqMatrix ee = random_invertible(rng, e, bound, complex_entries);
  const GqMatrix rest_zero = GqMatrix::Zero(n - d, n - d);
  const GqMatrix rest_e =
      block_diag(ee, GqMatrix(GqMatrix::Zero(n - d - e, n - d - e)));

  const GqMatrix a = s * block_diag(dd, rest_zero) * s_inv;
  const GqMatrix b = s * block_diag(dd, rest_e) * s_inv;

  const OrderKind kind = side == SharpSide::Right ? OrderKind::RightSharp : OrderKind::LeftSharp;
  if (!relation_holds(a, b, kind))
    throw InternalInconsistencyError("constructed pair fails its sharp relation");
  return {a, b};
}

std::pair<GqMatrix, GqMatrix> random_ordered_pair_sharp(Index n, SharpSide side,
                                                        std::uint64_t seed, long bound,
                                                        bool complex_entries) {
  if (n < 1) throw InfeasibleSpecError("dimension must be at least 1");
  SplitMix64 rng(seed);
  const Index d = rng.next_int(0, n);
  const Index e = rng.next_int(0, n - d);
  return sharp_pair_with_blocks(n, d, e, side, rng.next(), bound, complex_entries);
}

}  // namespace gdinv
