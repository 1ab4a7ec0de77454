#include "doctest.h"

#include "gdinv/ensembles.hpp"
#include "gdinv/matrix_io.hpp"
#include "gdinv/orders.hpp"
#include "gdinv/rref.hpp"
#include "gdinv/spectral.hpp"
#include "test_support.hpp"

using namespace gdinv;

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(random_matrix_with_index({2, 0, 0, 1}), InfeasibleSpecError);   // r<n, k=0
  CHECK_THROWS_AS(random_matrix_with_index({2, 2, 1, 1}), InfeasibleSpecError);   // r=n, k>0
  CHECK_THROWS_AS(random_matrix_with_index({3, 2, 2, 1}), InfeasibleSpecError);   // n-r < k
  CHECK_THROWS_AS(random_matrix_with_index({0, 0, 0, 1}), InfeasibleSpecError);   // n=0
  CHECK_THROWS_AS(random_matrix_with_index({2, 2, 0, 1, 0}), InfeasibleSpecError);  // bound=0
}

TEST_CASE("generated matrices hit their rank and index targets") {
  SUBCASE("invertible request") {
    const GqMatrix a = random_matrix_with_index({3, 3, 0, 99});
    CHECK(matrix_index(a).k == 0);
    CHECK(rank_of(a) == 3);
  }
  SUBCASE("pure nilpotent of index two") {
    const GqMatrix a = random_matrix_with_index({2, 0, 2, 7});
    CHECK(matrix_index(a).k == 2);
    CHECK(rank_of(a) == 1);  // conjugate of the 2x2 shift
    CHECK(is_zero_matrix<GaussianRational>(GqMatrix(a * a)));
  }
  SUBCASE("the (4, 1, 2) request from the documentation") {
    const GqMatrix a = random_matrix_with_index({4, 1, 2, 42});
    const IndexedMatrix im = matrix_index(a);
    CHECK(im.k == 2);
    CHECK(im.rank_chain[2] == 1);
    CHECK(im.rank_chain[3] == 1);
  }
  SUBCASE("every feasible combo for n up to 5, includes complex entries") {
    SplitMix64 rng(71);
    int trial = 0;
    for (Index n = 1; n <= 5; ++n) {
      for (const auto& [r, k] : feasible_rank_index_combos(n)) {
        EnsembleSpec spec{n, r, k, rng.next()};
        spec.complex_entries = (trial++ % 5) == 0;
        const GqMatrix a = random_matrix_with_index(spec);
        CHECK(matrix_index(a).k == k);
        CHECK(rank_of(pow_of(a, k)) == r);
      }
    }
  }
}

TEST_CASE("generation is reproducible bit for bit") {
  const EnsembleSpec spec{4, 2, 2, 12345};
  const GqMatrix a = random_matrix_with_index(spec);
  const GqMatrix b = random_matrix_with_index(spec);
  CHECK(matrix_to_string(a) == matrix_to_string(b));

  EnsembleSpec other = spec;
  other.seed = 12346;
  CHECK(matrix_to_string(random_matrix_with_index(other)) != matrix_to_string(a));

  const auto p1 = random_ordered_pair_sharp(3, SharpSide::Right, 5);
  const auto p2 = random_ordered_pair_sharp(3, SharpSide::Right, 5);
  CHECK(matrix_to_string(p1.first) == matrix_to_string(p2.first));
  CHECK(matrix_to_string(p1.second) == matrix_to_string(p2.second));
}

TEST_CASE("random inner parameters always give inner inverses") {
  SplitMix64 rng(72);
  for (int t = 0; t < 15; ++t) {
    const Index n = rng.next_int(1, 4);
    const auto combos = feasible_rank_index_combos(n);
    const auto [r, k] = combos[rng.next() % combos.size()];
    const GqMatrix a = random_matrix_with_index({n, r, k, rng.next()});
    const GqMatrix x = inner_inverse(a, random_inner_param(a, rng.next()));
    CHECK_MAT_EQ(a * x * a, a);
  }
  const GqMatrix inv_a = from_ints({{1, 1}, {0, 1}});
  CHECK_MAT_EQ(inner_inverse(inv_a, random_inner_param(inv_a, 9)), inverse(inv_a));
}

TEST_CASE("sharp pairs") {
  SUBCASE("documented example dimensions") {
    const auto [a, b] = random_ordered_pair_sharp(3, SharpSide::Right, 11);
    CHECK(relation_holds(a, b, OrderKind::RightSharp));
    const auto [al, bl] = random_ordered_pair_sharp(3, SharpSide::Left, 11);
    CHECK(relation_holds(al, bl, OrderKind::LeftSharp));
  }
  SUBCASE("empty D block: the zero matrix below anything of the form") {
    const auto [a, b] = sharp_pair_with_blocks(3, 0, 2, SharpSide::Right, 13);
    CHECK(is_zero_matrix<GaussianRational>(a));
    CHECK(relation_holds(a, b, OrderKind::RightSharp));
  }
  SUBCASE("empty E block: a reflexive pair") {
    const auto [a, b] = sharp_pair_with_blocks(3, 2, 0, SharpSide::Left, 17);
    CHECK_MAT_EQ(a, b);
  }
  SUBCASE("both indices stay at most one") {
    SplitMix64 rng(73);
    for (int t = 0; t < 10; ++t) {
      const auto [a, b] =
          random_ordered_pair_sharp(2 + t % 4, t % 2 ? SharpSide::Left : SharpSide::Right,
                                    rng.next());
      CHECK(matrix_index(a).k <= 1);
      CHECK(matrix_index(b).k <= 1);
    }
  }
}
