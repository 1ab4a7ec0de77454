#include "doctest.h"

#include "gdinv/fixtures.hpp"
#include "gdinv/orders.hpp"
#include "gdinv/rref.hpp"
#include "test_support.hpp"

using namespace gdinv;
namespace fx = gdinv::fixtures;

namespace {

OrderWitness canonical_witness(const GqMatrix& a) {
  const auto cnd = core_nilpotent(a);
  const Index rest = a.rows() - cnd.s;
  OrderWitness w;
  w.inner = moore_penrose(a);
  w.gd = g_drazin(a, GDrazinParam{cnd, InnerParam{GqMatrix::Zero(rest, rest)}});
  return w;
}

}  // namespace

TEST_CASE("every kind is reflexive with a valid witness") {
  SplitMix64 rng(61);
  for (int t = 0; t < 8; ++t) {
    const Index n = rng.next_int(2, 4);
    EnsembleSpec spec{n, n - 1, 1, rng.next()};  // index 1 so sharp kinds apply
    const GqMatrix a = random_matrix_with_index(spec);
    const OrderWitness w = canonical_witness(a);
    for (const OrderKind kind : {OrderKind::Gd1Order, OrderKind::OneGdOrder, OrderKind::DMinus,
                                 OrderKind::MinusD, OrderKind::LeftSharp, OrderKind::RightSharp}) {
      CHECK(relation_holds(a, a, kind, w));
    }
  }
}

TEST_CASE("right sharp order on small examples") {
  const GqMatrix a = from_ints({{1, 0}, {0, 0}});
  const GqMatrix eye = GqMatrix::Identity(2, 2);
  CHECK(relation_holds(a, eye, OrderKind::RightSharp));
  CHECK_FALSE(relation_holds(a, from_ints({{0, 1}, {0, 0}}), OrderKind::RightSharp));
}

TEST_CASE("sharp kinds reject a left argument of index two") {
  const GqMatrix n2 = from_ints({{0, 1}, {0, 0}});  // index 2
  const GqMatrix a = from_ints({{1, 0}, {0, 0}});
  CHECK_THROWS_AS(relation_holds(n2, a, OrderKind::RightSharp), IndexTooLargeError);
  CHECK_THROWS_AS(relation_holds(n2, a, OrderKind::LeftSharp), IndexTooLargeError);
}

TEST_CASE("witness-dependent kinds demand a witness") {
  const GqMatrix a = from_ints({{1, 0}, {0, 0}});
  CHECK_THROWS_AS(relation_holds(a, a, OrderKind::Gd1Order), WitnessRequiredError);
  CHECK_THROWS_AS(relation_holds(a, a, OrderKind::DMinus), WitnessRequiredError);
}

TEST_CASE("order characterization report") {
  SUBCASE("reflexive pair: all five statements true") {
    const GqMatrix a = fx::a1();
    const auto cnd = core_nilpotent(a);
    OrderWitness w;
    w.inner = fx::g1();
    w.gd = fx::d1();
    const OrderReport rep = order_characterization_report(a, a, Side::Gd1, w);
    CHECK(rep.all_agree);
    CHECK(rep.all_statements_true());
  }
  SUBCASE("unrelated pair: statement (ii) false, all statements agree") {
    const GqMatrix a = from_ints({{1, 0}, {0, 0}});
    const GqMatrix b = from_ints({{0, 1}, {0, 0}});
    OrderWitness w;
    w.inner = a;  // A is idempotent: a valid inner and G-Drazin inverse of itself
    w.gd = a;
    const OrderReport rep = order_characterization_report(a, b, Side::Gd1, w);
    bool ii = true;
    for (const auto& [name, value] : rep.statements)
      if (name == "ii") ii = value;
    CHECK_FALSE(ii);
    CHECK(rep.all_agree);
    CHECK_FALSE(rep.statements.front().second);
  }
}

TEST_CASE("sharp order to GD1 witness") {
  SUBCASE("reflexive pair always solvable") {
    const GqMatrix a = from_ints({{1, 0}, {0, 0}});
    const auto w = sharp_to_gd1_witness(a, a);
    REQUIRE(w);
    CHECK(relation_holds(a, a, OrderKind::Gd1Order, *w));
  }
  SUBCASE("the projector below the identity") {
    const GqMatrix a = from_ints({{1, 0}, {0, 0}});
    const GqMatrix eye = GqMatrix::Identity(2, 2);
    const auto w = sharp_to_gd1_witness(a, eye);
    REQUIRE(w);
    CHECK_MAT_EQ(w->inner, a);  // the solver's deterministic particular solution
    CHECK(relation_holds(a, eye, OrderKind::Gd1Order, *w));
  }
  SUBCASE("unrelated pair is infeasible") {
    const GqMatrix a = from_ints({{1, 0}, {0, 0}});
    const GqMatrix b = from_ints({{0, 1}, {0, 0}});
    CHECK_FALSE(sharp_to_gd1_witness(a, b));
  }
  SUBCASE("index restriction") {
    const GqMatrix n2 = from_ints({{0, 1}, {0, 0}});
    CHECK_THROWS_AS(sharp_to_gd1_witness(n2, n2), IndexTooLargeError);
  }
}

TEST_CASE("equivalence and implication chains on generated pairs") {
  SplitMix64 rng(62);
  for (int t = 0; t < 16; ++t) {
    const bool right = t % 2 == 0;
    const Index n = 2 + static_cast<Index>(t % 4);
    const auto [a, b] = random_ordered_pair_sharp(
        n, right ? SharpSide::Right : SharpSide::Left, rng.next());
    const OrderKind sharp = right ? OrderKind::RightSharp : OrderKind::LeftSharp;
    const OrderKind order = right ? OrderKind::Gd1Order : OrderKind::OneGdOrder;
    const OrderKind composite = right ? OrderKind::DMinus : OrderKind::MinusD;

    CHECK(relation_holds(a, b, sharp));
    const auto w = sharp_to_gd1_witness(a, b);
    REQUIRE(w);
    CHECK(relation_holds(a, b, order, *w));
    CHECK(relation_holds(a, b, composite, *w));
    const OrderReport rep =
        order_characterization_report(a, b, right ? Side::Gd1 : Side::OneGd, *w);
    CHECK(rep.all_agree);
    CHECK(rep.all_statements_true());
  }
}

// For related pairs, B expressed in A's decomposition basis is block
// triangular with the core block equal to C, the coupling block tied to the
// composite inverse's off-diagonal block, and B4 absorbing Z on both sides.
TEST_CASE("B in decomposition coordinates for related pairs") {
  SplitMix64 rng(63);
  for (int t = 0; t < 20; ++t) {
    const bool right = t % 2 == 0;
    const Index n = 2 + static_cast<Index>(t % 4);
    const auto [a, b] = random_ordered_pair_sharp(
        n, right ? SharpSide::Right : SharpSide::Left, rng.next());
    const auto w = sharp_to_gd1_witness(a, b);
    REQUIRE(w);
    const auto cnd = core_nilpotent(a);
    const Index s = cnd.s;
    const Index m = n - s;
    const GqMatrix b_coords = cnd.p_inv * b * cnd.p;
    const GqMatrix b4 = b_coords.bottomRightCorner(m, m);
    CHECK_MAT_EQ(GqMatrix(b_coords.topLeftCorner(s, s)), cnd.c);

    const GqMatrix x = right ? gd1(a, w->gd, w->inner) : one_gd(a, w->inner, w->gd);
    const GqMatrix x_coords = cnd.p_inv * x * cnd.p;
    const GqMatrix z = x_coords.bottomRightCorner(m, m);
    // ind(A) <= 1 pairs: N = 0, so both B4 absorption identities degenerate
    // to annihilation against Z.
    CHECK(is_zero_matrix<GaussianRational>(GqMatrix(z * b4)));
    CHECK(is_zero_matrix<GaussianRational>(GqMatrix(b4 * z)));
    if (right) {
      CHECK(is_zero_matrix<GaussianRational>(GqMatrix(b_coords.bottomLeftCorner(m, s))));
      const GqMatrix y = x_coords.topRightCorner(s, m);
      CHECK_MAT_EQ(GqMatrix(b_coords.topRightCorner(s, m)), GqMatrix(-cnd.c * y * b4));
    } else {
      CHECK(is_zero_matrix<GaussianRational>(GqMatrix(b_coords.topRightCorner(s, m))));
      const GqMatrix y = x_coords.bottomLeftCorner(m, s);
      CHECK_MAT_EQ(GqMatrix(b_coords.bottomLeftCorner(m, s)), GqMatrix(-b4 * y * cnd.c));
    }
  }
}

// Transitivity is inherited from the sharp orders: nested block chains give
// A below B below C, and the witness solver must then relate A to C directly.
TEST_CASE("transitivity through the sharp equivalence") {
  SplitMix64 rng(65);
  for (int t = 0; t < 12; ++t) {
    const bool right = t % 2 == 0;
    const OrderKind sharp = right ? OrderKind::RightSharp : OrderKind::LeftSharp;
    const OrderKind order = right ? OrderKind::Gd1Order : OrderKind::OneGdOrder;
    const Index n = 3 + static_cast<Index>(t % 3);
    const Index d = rng.next_int(0, n - 2);
    const Index e = rng.next_int(1, n - d - 1);
    const Index f = rng.next_int(1, n - d - e);

    // One conjugation, three nested invertible blocks; the smaller matrices
    // reuse the larger one's leading blocks.
    SplitMix64 gen(rng.next());
    const GqMatrix s = random_invertible(gen, n, 3);
    const GqMatrix s_inv = inverse(s);
    GqMatrix big_core = GqMatrix::Zero(n, n);
    big_core.topLeftCorner(d, d) = random_invertible(gen, d, 3);
    big_core.block(d, d, e, e) = random_invertible(gen, e, 3);
    big_core.block(d + e, d + e, f, f) = random_invertible(gen, f, 3);
    GqMatrix mid_core = big_core;
    mid_core.block(d + e, d + e, f, f) = GqMatrix::Zero(f, f);
    GqMatrix small_core = mid_core;
    small_core.block(d, d, e, e) = GqMatrix::Zero(e, e);
    const GqMatrix a = s * small_core * s_inv;
    const GqMatrix b = s * mid_core * s_inv;
    const GqMatrix c = s * big_core * s_inv;

    CHECK(relation_holds(a, b, sharp));
    CHECK(relation_holds(b, c, sharp));
    CHECK(relation_holds(a, c, sharp));  // sharp orders are transitive

    const auto w_ab = sharp_to_gd1_witness(a, b);
    const auto w_bc = sharp_to_gd1_witness(b, c);
    const auto w_ac = sharp_to_gd1_witness(a, c);
    REQUIRE(w_ab);
    REQUIRE(w_bc);
    REQUIRE(w_ac);
    CHECK(relation_holds(a, b, order, *w_ab));
    CHECK(relation_holds(b, c, order, *w_bc));
    CHECK(relation_holds(a, c, order, *w_ac));
  }
}

// Related pairs of arbitrary index, built from the block form of B: with X
// from the explicit formula and Z its lower-right block, any B4 = N + K with
// Z K = K Z = 0 yields A below B under the GD1 (resp. 1GD) relation with
// witness inner inverse X. This exercises the order relations and the
// implication chain beyond the index-1 world of the sharp generators.
TEST_CASE("higher-index related pairs from the block corollary") {
  SplitMix64 rng(66);
  int nontrivial = 0;
  for (int t = 0; t < 16; ++t) {
    const bool right = t % 2 == 0;
    const Index n = 3 + static_cast<Index>(t % 3);
    const Index k = 2 + static_cast<Index>(t % 2);
    const Index r = rng.next_int(0, n - k);
    EnsembleSpec spec{n, r, k, rng.next()};
    const GqMatrix a = random_matrix_with_index(spec);
    const auto cnd = core_nilpotent(a);
    const Index s = cnd.s;
    const Index m = cnd.n.rows();
    SplitMix64 gen(rng.next());
    const InnerParam zn{random_int_matrix(gen, m, m, 3)};
    const GqMatrix a_gd = g_drazin(a, GDrazinParam{cnd, zn});
    const Gd1BlockParam p{right ? random_int_matrix(gen, s, m, 3)
                                : random_int_matrix(gen, m, s, 3),
                          random_int_matrix(gen, m, m, 3), zn};
    const GqMatrix x =
        right ? gd1_from_decomposition(cnd, p) : one_gd_from_decomposition(cnd, p);
    const GqMatrix x_coords = cnd.p_inv * x * cnd.p;
    const GqMatrix z = x_coords.bottomRightCorner(m, m);

    // K annihilated by Z on both sides; nontrivial whenever Z is singular.
    const GqMatrix z_mp = moore_penrose(z);
    const GqMatrix eye_m = GqMatrix::Identity(m, m);
    const GqMatrix kmat = (eye_m - z_mp * z) * random_int_matrix(gen, m, m, 3) *
                          (eye_m - z * z_mp);
    const GqMatrix b4 = cnd.n + kmat;
    if (!is_zero_matrix<GaussianRational>(kmat)) ++nontrivial;

    GqMatrix b_core;
    if (right) {
      const GqMatrix y = x_coords.topRightCorner(s, m);
      b_core = assemble_blocks<GaussianRational>(cnd.c, GqMatrix(-cnd.c * y * b4),
                                                 GqMatrix::Zero(m, s), b4);
    } else {
      const GqMatrix y = x_coords.bottomLeftCorner(m, s);
      b_core = assemble_blocks<GaussianRational>(cnd.c, GqMatrix::Zero(s, m),
                                                 GqMatrix(-b4 * y * cnd.c), b4);
    }
    const GqMatrix b = cnd.p * b_core * cnd.p_inv;

    // X is its own witness inner inverse: X = A^GD A X for the same A^GD.
    OrderWitness w{x, a_gd};
    const OrderKind kind = right ? OrderKind::Gd1Order : OrderKind::OneGdOrder;
    CHECK(relation_holds(a, b, kind, w));
    CHECK(relation_holds(a, b, right ? OrderKind::DMinus : OrderKind::MinusD, w));
    const OrderReport rep =
        order_characterization_report(a, b, right ? Side::Gd1 : Side::OneGd, w);
    CHECK(rep.all_agree);
    CHECK(rep.all_statements_true());
  }
  CHECK(nontrivial > 0);  // B differed from A in most trials
}

TEST_CASE("antisymmetry through the sharp equivalence") {
  SplitMix64 rng(64);
  for (int t = 0; t < 20; ++t) {
    const bool right = t % 2 == 0;
    const SharpSide side = right ? SharpSide::Right : SharpSide::Left;
    const OrderKind kind = right ? OrderKind::RightSharp : OrderKind::LeftSharp;
    const Index n = 2 + static_cast<Index>(t % 4);
    const bool reflexive = t % 4 < 2;
    const Index d = reflexive ? static_cast<Index>(rng.next_int(0, n))
                              : static_cast<Index>(rng.next_int(0, n - 1));
    const Index e = reflexive ? 0 : static_cast<Index>(rng.next_int(1, n - d));
    const auto [a, b] = sharp_pair_with_blocks(n, d, e, side, rng.next());
    const bool fwd = relation_holds(a, b, kind);
    const bool bwd = relation_holds(b, a, kind);
    CHECK(fwd);
    if (fwd && bwd) CHECK_MAT_EQ(a, b);
    if (reflexive) {
      CHECK(bwd);
      CHECK_MAT_EQ(a, b);
    } else {
      CHECK_FALSE(bwd);
    }
  }
}
