#include "doctest.h"

#include "gdinv/fixtures.hpp"
#include "gdinv/inverses.hpp"
#include "gdinv/solve.hpp"
#include "test_support.hpp"

using namespace gdinv;
namespace fx = gdinv::fixtures;

namespace {

MatrixEquationSystem<GaussianRational> system_of(Index rows, Index cols,
                                                 std::vector<MatrixEquation<GaussianRational>> eqs) {
  MatrixEquationSystem<GaussianRational> sys;
  sys.unknown_rows = rows;
  sys.unknown_cols = cols;
  sys.constraints = std::move(eqs);
  return sys;
}

}  // namespace

TEST_CASE("fully determined system") {
  const GqMatrix eye = GqMatrix::Identity(2, 2);
  const GqMatrix b = from_ints({{1, 0}, {0, 0}});
  const auto sol = solve_matrix_equations(system_of(2, 2, {equation(eye, eye, b)}));
  REQUIRE(sol);
  CHECK(sol->unique());
  CHECK_MAT_EQ(sol->particular, b);
}

TEST_CASE("inner-inverse equation of a rank-1 projector") {
  const GqMatrix a = from_ints({{1, 0}, {0, 0}});
  const auto sol = solve_matrix_equations(system_of(2, 2, {equation(a, a, a)}));
  REQUIRE(sol);
  CHECK_MAT_EQ(sol->particular, a);  // free variables pinned to zero
  REQUIRE(sol->homogeneous_basis.size() == 3);
  // Free unknowns in column-major order: x21, x12, x22.
  CHECK_MAT_EQ(sol->homogeneous_basis[0], from_ints({{0, 0}, {1, 0}}));
  CHECK_MAT_EQ(sol->homogeneous_basis[1], from_ints({{0, 1}, {0, 0}}));
  CHECK_MAT_EQ(sol->homogeneous_basis[2], from_ints({{0, 0}, {0, 1}}));

  SUBCASE("vacuous extra constraints change nothing") {
    const GqMatrix zero = GqMatrix::Zero(2, 2);
    const GqMatrix eye = GqMatrix::Identity(2, 2);
    const auto sol2 = solve_matrix_equations(system_of(
        2, 2,
        {equation(a, a, a), equation(zero, eye, zero), equation(eye, zero, zero)}));
    REQUIRE(sol2);
    CHECK_MAT_EQ(sol2->particular, sol->particular);
    CHECK(sol2->homogeneous_basis.size() == sol->homogeneous_basis.size());
  }
}

TEST_CASE("inconsistent systems report no solution") {
  const GqMatrix zero = GqMatrix::Zero(2, 2);
  const GqMatrix eye = GqMatrix::Identity(2, 2);
  CHECK_FALSE(solve_matrix_equations(system_of(2, 2, {equation(zero, zero, eye)})));

  const GqMatrix a = from_ints({{1, 0}, {0, 0}});
  const GqMatrix c = from_ints({{0, 0}, {0, 1}});
  CHECK_FALSE(solve_matrix_equations(system_of(2, 2, {equation(a, a, c)})));
}

TEST_CASE("multi-term constraint reaches a chosen inner inverse") {
  // Solve G + Z - G A Z A G = G1 for Z, i.e. Z - (GA) Z (AG) = G1 - G.
  const GqMatrix a = fx::a1();
  const GqMatrix g = moore_penrose(a);
  const GqMatrix g1 = fx::g1();
  const GqMatrix eye = GqMatrix::Identity(4, 4);

  MatrixEquation<GaussianRational> eq;
  eq.terms.push_back({eye, eye});
  eq.terms.push_back({GqMatrix(-(g * a)), GqMatrix(a * g)});
  eq.rhs = g1 - g;
  const auto sol = solve_matrix_equations(system_of(4, 4, {eq}));
  REQUIRE(sol);
  CHECK_MAT_EQ(inner_inverse(a, InnerParam{sol->particular}), g1);
}

TEST_CASE("every member of the returned solution set satisfies the constraints") {
  SplitMix64 rng(21);
  for (int t = 0; t < 25; ++t) {
    const Index ur = rng.next_int(1, 3);
    const Index uc = rng.next_int(1, 3);
    const GqMatrix x0 = testing::random_rational_matrix(rng, ur, uc, t % 2 == 0);
    std::vector<MatrixEquation<GaussianRational>> eqs;
    const int n_constraints = static_cast<int>(rng.next_int(1, 3));
    for (int c = 0; c < n_constraints; ++c) {
      const GqMatrix l = testing::random_rational_matrix(rng, rng.next_int(1, 3), ur);
      const GqMatrix r = testing::random_rational_matrix(rng, uc, rng.next_int(1, 3));
      eqs.push_back(equation(l, r, GqMatrix(l * x0 * r)));
    }
    const auto sol = solve_matrix_equations(system_of(ur, uc, eqs));
    REQUIRE(sol);

    GqMatrix x = sol->particular;
    // Mix in an exact rational combination of the homogeneous basis.
    for (const auto& h : sol->homogeneous_basis) x = x + testing::random_scalar(rng) * h;
    for (const auto& eq : eqs) {
      GqMatrix lhs = GqMatrix::Zero(eq.rhs.rows(), eq.rhs.cols());
      for (const auto& term : eq.terms) lhs = lhs + term.left * x * term.right;
      CHECK_MAT_EQ(lhs, eq.rhs);
    }
  }
}

TEST_CASE("oblique projectors") {
  const GqMatrix e1 = testing::col({1, 0});
  const GqMatrix e2 = testing::col({0, 1});
  const GqMatrix diag10 = from_ints({{1, 0}, {0, 0}});

  CHECK_MAT_EQ(oblique_projector<GaussianRational>({e1}, {e2}), diag10);
  CHECK_MAT_EQ(oblique_projector<GaussianRational>({testing::col({1, 1})}, {e2}),
               from_ints({{1, 0}, {1, 0}}));
  CHECK_MAT_EQ(oblique_projector<GaussianRational>({GqMatrix(GqMatrix::Identity(2, 2))},
                                                   {GqMatrix(GqMatrix::Zero(2, 0))}),
               GqMatrix::Identity(2, 2));

  CHECK_THROWS_AS(oblique_projector<GaussianRational>({e1}, {e1}), NotComplementaryError);
  CHECK_THROWS_AS(
      oblique_projector<GaussianRational>({e1}, {GqMatrix(GqMatrix::Zero(2, 0))}),
      NotComplementaryError);
}

TEST_CASE("projector laws on random complementary pairs") {
  SplitMix64 rng(22);
  for (int t = 0; t < 25; ++t) {
    const Index n = rng.next_int(1, 5);
    const Index r = rng.next_int(0, n);
    const GqMatrix w = random_invertible(rng, n, 3, t % 2 == 0);
    const SubspaceBasis<GaussianRational> range{GqMatrix(w.leftCols(r))};
    const SubspaceBasis<GaussianRational> null{GqMatrix(w.rightCols(n - r))};
    const GqMatrix p = oblique_projector(range, null);
    CHECK_MAT_EQ(p * p, p);
    CHECK(subspace_equal(column_space_basis(p), range));
    CHECK(subspace_equal(nullspace_basis(p), null));
  }
}
