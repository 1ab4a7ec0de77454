#include "gdinv/inverses.hpp"

#include "gdinv/rref.hpp"

namespace gdinv {

namespace {

void require_square_same(const GqMatrix& a, const GqMatrix& x, const char* what) {
  if (a.rows() != a.cols()) throw ShapeError(std::string(what) + ": matrix must be square");
  if (x.rows() != a.rows() || x.cols() != a.cols())
    throw ShapeError(std::string(what) + ": sizes do not match");
}

void validate_cnd(const GqMatrix& a, const CoreNilpotentDecomposition& cnd, const char* what) {
  if (cnd.p.rows() != a.rows() || cnd.p.cols() != a.cols())
    throw ShapeError(std::string(what) + ": decomposition size does not match the matrix");
  if (!matrix_equal(cnd.reassemble(), a))
    throw InvalidArgumentError(std::string(what) + ": decomposition does not reassemble the matrix");
}

}  // namespace

GqMatrix moore_penrose(const GqMatrix& a) {
  const FullRankFactorization fr = full_rank_factorization(a);
  const GqMatrix fs = ctranspose(fr.f);
  const GqMatrix gs = ctranspose(fr.g);
  // G G* and F* F are r x r and invertible exactly because F, G have full rank.
  return gs * inverse<GaussianRational>(fr.g * gs) * inverse<GaussianRational>(fs * fr.f) * fs;
}

GqMatrix inner_inverse(const GqMatrix& a, const InnerParam& p) {
  if (p.z.rows() != a.cols() || p.z.cols() != a.rows())
    throw ShapeError("inner parameter Z must have the transposed shape of A");
  const GqMatrix g = moore_penrose(a);
  return g + p.z - g * a * p.z * a * g;
}

bool is_inner_inverse(const GqMatrix& a, const GqMatrix& x) {
  if (x.rows() != a.cols() || x.cols() != a.rows()) return false;
  return matrix_equal<GaussianRational>(a * x * a, a);
}

bool is_outer_inverse(const GqMatrix& a, const GqMatrix& x) {
  if (x.rows() != a.cols() || x.cols() != a.rows()) return false;
  return matrix_equal<GaussianRational>(x * a * x, x);
}

GqMatrix drazin(const GqMatrix& a) {
  const CoreNilpotentDecomposition cnd = core_nilpotent(a);
  const Index rest = a.rows() - cnd.s;
  const GqMatrix core = block_diag(inverse<GaussianRational>(cnd.c),
                                   GqMatrix(GqMatrix::Zero(rest, rest)));
  return cnd.p * core * cnd.p_inv;
}

GqMatrix g_drazin(const GqMatrix& a, const GDrazinParam& p) {
  validate_cnd(a, p.cnd, "g_drazin");
  const GqMatrix n_inner = inner_inverse(p.cnd.n, p.zn);
  return p.cnd.p * block_diag(inverse<GaussianRational>(p.cnd.c), n_inner) * p.cnd.p_inv;
}

GDrazinCheck is_g_drazin(const GqMatrix& a, const GqMatrix& x) {
  require_square_same(a, x, "is_g_drazin");
  const Index k = matrix_index(a).k;
  const GqMatrix ak = pow_of(a, k);
  const GqMatrix ak1 = ak * a;
  GDrazinCheck out;
  const bool inner = matrix_equal<GaussianRational>(a * x * a, a);
  out.three_eq = inner && matrix_equal<GaussianRational>(x * ak1, ak) &&
                 matrix_equal<GaussianRational>(ak1 * x, ak);
  out.two_eq = inner && matrix_equal<GaussianRational>(ak * x, x * ak);
  return out;
}

GqMatrix gd1(const GqMatrix& a, const GqMatrix& a_gd, const GqMatrix& a_inner) {
  require_square_same(a, a_gd, "gd1");
  require_square_same(a, a_inner, "gd1");
  if (!is_g_drazin(a, a_gd).three_eq) throw NotAGDrazinInverseError();
  if (!is_inner_inverse(a, a_inner)) throw NotAnInnerInverseError();
  return a_gd * a * a_inner;
}

GqMatrix one_gd(const GqMatrix& a, const GqMatrix& a_inner, const GqMatrix& a_gd) {
  require_square_same(a, a_gd, "one_gd");
  require_square_same(a, a_inner, "one_gd");
  if (!is_g_drazin(a, a_gd).three_eq) throw NotAGDrazinInverseError();
  if (!is_inner_inverse(a, a_inner)) throw NotAnInnerInverseError();
  return a_inner * a * a_gd;
}

GqMatrix composite_inverse(const GqMatrix& a, CompositeKind kind,
                           const std::optional<GqMatrix>& aux) {
  if (a.rows() != a.cols()) throw ShapeError("composite inverses need a square matrix");

  const bool needs_inner = kind == CompositeKind::D1 || kind == CompositeKind::OneD ||
                           kind == CompositeKind::OneMp || kind == CompositeKind::Mp1;
  const bool needs_outer =
      kind == CompositeKind::TwoMp || kind == CompositeKind::Mp2 || kind == CompositeKind::C2Mp;
  if ((needs_inner || needs_outer) && !aux.has_value()) throw AuxMissingError();
  if (needs_inner && !is_inner_inverse(a, *aux)) throw AuxNotInnerError();
  if (needs_outer && !is_outer_inverse(a, *aux)) throw AuxNotOuterError();

  switch (kind) {
    case CompositeKind::Dmp:
      return drazin(a) * a * moore_penrose(a);
    case CompositeKind::Mpd:
      return moore_penrose(a) * a * drazin(a);
    case CompositeKind::D1:
      return drazin(a) * a * (*aux);
    case CompositeKind::OneD:
      return (*aux) * a * drazin(a);
    case CompositeKind::OneMp:
      return (*aux) * a * moore_penrose(a);
    case CompositeKind::Mp1:
      return moore_penrose(a) * a * (*aux);
    case CompositeKind::Cmp: {
      const GqMatrix mp = moore_penrose(a);
      return mp * a * drazin(a) * a * mp;
    }
    case CompositeKind::TwoMp:
      return (*aux) * a * moore_penrose(a);
    case CompositeKind::Mp2:
      return moore_penrose(a) * a * (*aux);
    case CompositeKind::C2Mp: {
      const GqMatrix mp = moore_penrose(a);
      return mp * a * (*aux) * a * mp;
    }
  }
  throw InvalidArgumentError("unknown composite kind");
}

GqMatrix gd1_from_decomposition(const CoreNilpotentDecomposition& cnd, const Gd1BlockParam& p) {
  const Index s = cnd.s;
  const Index m = cnd.n.rows();  // n - s
  if (p.v.rows() != s || p.v.cols() != m) throw ShapeError("gd1 block parameter V must be s x (n-s)");
  if (p.l.rows() != m || p.l.cols() != m)
    throw ShapeError("gd1 block parameter L must be (n-s) x (n-s)");

  const GqMatrix n_inner = inner_inverse(cnd.n, p.zn);
  const GqMatrix eye = GqMatrix::Identity(m, m);
  const GqMatrix n_l = eye - n_inner * cnd.n;  // idempotent
  const GqMatrix n_r = eye - cnd.n * n_inner;  // idempotent
  const GqMatrix y = p.v * n_r;
  const GqMatrix w = p.l - n_l * p.l * n_r;
  const GqMatrix z = n_inner * cnd.n * n_inner + w * n_r;
  const GqMatrix inner_block = assemble_blocks<GaussianRational>(
      inverse<GaussianRational>(cnd.c), y, GqMatrix::Zero(m, s), z);
  return cnd.p * inner_block * cnd.p_inv;
}

GqMatrix one_gd_from_decomposition(const CoreNilpotentDecomposition& cnd, const Gd1BlockParam& p) {
  const Index s = cnd.s;
  const Index m = cnd.n.rows();
  if (p.v.rows() != m || p.v.cols() != s) throw ShapeError("1gd block parameter V must be (n-s) x s");
  if (p.l.rows() != m || p.l.cols() != m)
    throw ShapeError("1gd block parameter L must be (n-s) x (n-s)");

  const GqMatrix n_inner = inner_inverse(cnd.n, p.zn);
  const GqMatrix eye = GqMatrix::Identity(m, m);
  const GqMatrix n_l = eye - n_inner * cnd.n;
  const GqMatrix y_low = n_l * p.v;
  const GqMatrix z = n_inner * cnd.n * n_inner + n_l * p.l * cnd.n * n_inner;
  const GqMatrix inner_block = assemble_blocks<GaussianRational>(
      inverse<GaussianRational>(cnd.c), GqMatrix::Zero(s, m), y_low, z);
  return cnd.p * inner_block * cnd.p_inv;
}

}  // namespace gdinv
