#include "gdinv/orders.hpp"

#include "gdinv/rref.hpp"
#include "gdinv/solve.hpp"

namespace gdinv {

namespace {

bool eq(const GqMatrix& a, const GqMatrix& b) { return matrix_equal(a, b); }

void require_same_square(const GqMatrix& a, const GqMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw ShapeError("order relations need square matrices of one size");
}

// Two-sided absorption through X: A X = B X and X A = X B.
bool absorbs(const GqMatrix& a, const GqMatrix& b, const GqMatrix& x) {
  return eq(a * x, b * x) && eq(x * a, x * b);
}

}  // namespace

bool relation_holds(const GqMatrix& a, const GqMatrix& b, OrderKind kind,
                    const std::optional<OrderWitness>& witness) {
  require_same_square(a, b);
  switch (kind) {
    case OrderKind::Gd1Order: {
      if (!witness) throw WitnessRequiredError("<=GD1 needs a witness (A^-, A^GD)");
      const GqMatrix x = gd1(a, witness->gd, witness->inner);
      return absorbs(a, b, x);
    }
    case OrderKind::OneGdOrder: {
      if (!witness) throw WitnessRequiredError("<=1GD needs a witness (A^-, A^GD)");
      const GqMatrix x = one_gd(a, witness->inner, witness->gd);
      return absorbs(a, b, x);
    }
    case OrderKind::DMinus: {
      if (!witness) throw WitnessRequiredError("<=D,- needs a witness inner inverse");
      if (!is_inner_inverse(a, witness->inner)) throw NotAnInnerInverseError();
      const GqMatrix x = drazin(a) * a * witness->inner;
      return absorbs(a, b, x);
    }
    case OrderKind::MinusD: {
      if (!witness) throw WitnessRequiredError("<=-,D needs a witness inner inverse");
      if (!is_inner_inverse(a, witness->inner)) throw NotAnInnerInverseError();
      const GqMatrix x = witness->inner * a * drazin(a);
      return absorbs(a, b, x);
    }
    case OrderKind::LeftSharp: {
      if (matrix_index(a).k > 1) throw IndexTooLargeError();
      return eq(a * a, a * b) && subspace_contained(column_space_basis(a), column_space_basis(b));
    }
    case OrderKind::RightSharp: {
      if (matrix_index(a).k > 1) throw IndexTooLargeError();
      const GqMatrix as = ctranspose(a);
      const GqMatrix bs = ctranspose(b);
      return eq(a * a, b * a) && subspace_contained(column_space_basis(as), column_space_basis(bs));
    }
  }
  throw InvalidArgumentError("unknown order kind");
}

OrderReport order_characterization_report(const GqMatrix& a, const GqMatrix& b, Side side,
                                          const OrderWitness& witness) {
  require_same_square(a, b);
  const GqMatrix x =
      side == Side::Gd1 ? gd1(a, witness.gd, witness.inner) : one_gd(a, witness.inner, witness.gd);

  OrderReport rep;
  rep.side = side;
  auto clause = [&rep](const char* name, bool v) { rep.clauses.emplace_back(name, v); };
  auto statement = [&rep](const char* name, bool v) { rep.statements.emplace_back(name, v); };

  statement("i", absorbs(a, b, x));

  // (ii): A = A A^- B = B A^{GD} A on the GD1 side; A = B A^- A = A A^{GD} B on the 1GD side.
  bool absorb_a;
  bool absorb_b;
  if (side == Side::Gd1) {
    absorb_a = eq(a * witness.inner * b, a);
    absorb_b = eq(b * witness.gd * a, a);
  } else {
    absorb_a = eq(b * witness.inner * a, a);
    absorb_b = eq(a * witness.gd * b, a);
  }
  clause("ii.left", absorb_a);
  clause("ii.right", absorb_b);
  statement("ii", absorb_a && absorb_b);

  // (iii): the same absorptions mediated by the composite inverse itself.
  bool med_a;
  bool med_b;
  if (side == Side::Gd1) {
    med_a = eq(a * x * b, a);
    med_b = eq(b * x * a, a);
  } else {
    med_a = eq(b * x * a, a);
    med_b = eq(a * x * b, a);
  }
  clause("iii.left", med_a);
  clause("iii.right", med_b);
  statement("iii", med_a && med_b);

  // (iv)/(v): idempotent factorizations, realized with P = A X, Q = X A.
  const GqMatrix p = a * x;
  const GqMatrix q = x * a;
  const GqMatrix left_anchor =
      side == Side::Gd1 ? GqMatrix(a * witness.inner) : GqMatrix(a * witness.gd);
  const GqMatrix right_anchor =
      side == Side::Gd1 ? GqMatrix(witness.gd * a) : GqMatrix(witness.inner * a);

  const bool p_idem = eq(p * p, p);
  const bool q_idem = eq(q * q, q);
  const bool p_range = subspace_equal(column_space_basis(p), column_space_basis(a));
  const bool q_null = subspace_equal(nullspace_basis(q), nullspace_basis(a));
  const bool factor_left = eq(p * b, a);
  const bool factor_right = eq(b * q, a);

  const bool p_null_iv = subspace_equal(nullspace_basis(p), nullspace_basis(left_anchor));
  const bool q_range_iv = subspace_equal(column_space_basis(q), column_space_basis(right_anchor));
  clause("iv.p.idem", p_idem);
  clause("iv.q.idem", q_idem);
  clause("iv.p.range", p_range);
  clause("iv.p.null", p_null_iv);
  clause("iv.q.range", q_range_iv);
  clause("iv.q.null", q_null);
  clause("iv.factor.left", factor_left);
  clause("iv.factor.right", factor_right);
  statement("iv", p_idem && q_idem && p_range && p_null_iv && q_range_iv && q_null &&
                      factor_left && factor_right);

  const bool p_null_v = subspace_equal(nullspace_basis(p), nullspace_basis(x));
  const bool q_range_v = subspace_equal(column_space_basis(q), column_space_basis(x));
  clause("v.p.null", p_null_v);
  clause("v.q.range", q_range_v);
  statement("v", p_idem && q_idem && p_range && p_null_v && q_range_v && q_null && factor_left &&
                     factor_right);

  bool all_same = true;
  for (const auto& s : rep.statements)
    if (s.second != rep.statements.front().second) all_same = false;
  rep.all_agree = all_same;
  return rep;
}

std::optional<OrderWitness> sharp_to_gd1_witness(const GqMatrix& a, const GqMatrix& b) {
  require_same_square(a, b);
  const CoreNilpotentDecomposition cnd = core_nilpotent(a);
  if (cnd.k > 1) throw IndexTooLargeError("sharp_to_gd1_witness needs ind(A) <= 1");
  const Index n = a.rows();
  const GqMatrix eye = GqMatrix::Identity(n, n);
  const GqMatrix diff = a - b;

  MatrixEquationSystem<GaussianRational> sys;
  sys.unknown_rows = n;
  sys.unknown_cols = n;
  sys.constraints.push_back(equation<GaussianRational>(a, a, a));
  sys.constraints.push_back(equation<GaussianRational>(diff, eye, GqMatrix::Zero(n, n)));
  sys.constraints.push_back(equation<GaussianRational>(eye, diff, GqMatrix::Zero(n, n)));
  const auto sol = solve_matrix_equations(sys);
  if (!sol) return std::nullopt;

  OrderWitness w;
  w.inner = sol->particular;
  const Index rest = n - cnd.s;
  GDrazinParam gp{cnd, InnerParam{GqMatrix::Zero(rest, rest)}};
  w.gd = g_drazin(a, gp);
  return w;
}

}  // namespace gdinv
