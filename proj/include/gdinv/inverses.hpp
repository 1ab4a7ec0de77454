#pragma once

#include <optional>

#include "gdinv/spectral.hpp"

namespace gdinv {

/// Free parameter selecting one member of the inner-inverse family
/// A^- = G + Z - G*A*Z*A*G with G = moore_penrose(A). Z = 0 gives G itself,
/// and Z = W reproduces any W in A{1}, so the family is onto A{1}.
struct InnerParam {
  GqMatrix z;  // cols(A) x rows(A)
};

/// Parameters of the block G-Drazin family: the decomposition plus an inner
/// parameter for the nilpotent block N.
struct GDrazinParam {
  CoreNilpotentDecomposition cnd;
  InnerParam zn;  // selects N^- in N{1}
};

/// Free parameters of the explicit block formulas for GD1/1GD inverses.
/// For the GD1 form V is s x (n-s); for the 1GD form V is (n-s) x s.
/// L is (n-s) x (n-s) in both.
struct Gd1BlockParam {
  GqMatrix v;
  GqMatrix l;
  InnerParam zn;
};

/// Exact Moore-Penrose inverse via full-rank factorization:
/// A^dagger = G* (G G*)^{-1} (F* F)^{-1} F*.
GqMatrix moore_penrose(const GqMatrix& a);

GqMatrix inner_inverse(const GqMatrix& a, const InnerParam& p);

bool is_inner_inverse(const GqMatrix& a, const GqMatrix& x);
bool is_outer_inverse(const GqMatrix& a, const GqMatrix& x);

/// A^D = P blockdiag(C^{-1}, 0) P^{-1}.
GqMatrix drazin(const GqMatrix& a);

/// P blockdiag(C^{-1}, N^-) P^{-1} with N^- = inner_inverse(N, p.zn).
GqMatrix g_drazin(const GqMatrix& a, const GDrazinParam& p);

/// The two equivalent G-Drazin membership tests. `three_eq` checks
/// AXA = A, XA^{k+1} = A^k, A^{k+1}X = A^k; `two_eq` checks
/// AXA = A, A^k X = X A^k. They agree on every input; both are computed
/// rather than one being assumed.
struct GDrazinCheck {
  bool three_eq{false};
  bool two_eq{false};
};

GDrazinCheck is_g_drazin(const GqMatrix& a, const GqMatrix& x);

/// A^{GD1} = A^{GD} A A^-. Both inverse arguments are validated.
GqMatrix gd1(const GqMatrix& a, const GqMatrix& a_gd, const GqMatrix& a_inner);

/// A^{1GD} = A^- A A^{GD}. Both inverse arguments are validated.
GqMatrix one_gd(const GqMatrix& a, const GqMatrix& a_inner, const GqMatrix& a_gd);

enum class CompositeKind { Dmp, Mpd, D1, OneD, OneMp, Mp1, Cmp, TwoMp, Mp2, C2Mp };

/// The ten definitional composite products. `aux` is required and validated
/// as an inner inverse for D1/OneD/OneMp/Mp1 and as an outer inverse for
/// TwoMp/Mp2/C2Mp; it is ignored for the parameter-free kinds.
GqMatrix composite_inverse(const GqMatrix& a, CompositeKind kind,
                           const std::optional<GqMatrix>& aux = std::nullopt);

/// Explicit GD1 block formula: X = P [[C^{-1}, Y], [0, Z]] P^{-1} with
/// Y = V(I - N N^-) and Z = N^- N N^- + W (I - N N^-),
/// W = L - (I - N^- N) L (I - N N^-).
GqMatrix gd1_from_decomposition(const CoreNilpotentDecomposition& cnd, const Gd1BlockParam& p);

/// Dual block formula: X = P [[C^{-1}, 0], [(I - N^- N) V, Z]] P^{-1} with
/// Z = N^- N N^- + (I - N^- N) L N N^-.
GqMatrix one_gd_from_decomposition(const CoreNilpotentDecomposition& cnd, const Gd1BlockParam& p);

}  // namespace gdinv
