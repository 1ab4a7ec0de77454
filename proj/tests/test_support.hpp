#pragma once

#include "doctest.h"

#include "gdinv/ensembles.hpp"
#include "gdinv/matrix.hpp"
#include "gdinv/rng.hpp"

namespace gdinv::testing {

inline GaussianRational random_scalar(SplitMix64& rng, long bound = 9, bool complex_entries = true) {
  const long num_re = rng.next_int(-bound, bound);
  const long den_re = rng.next_int(1, bound);
  Rational re(num_re);
  re /= den_re;
  if (!complex_entries) return GaussianRational(re);
  const long num_im = rng.next_int(-bound, bound);
  const long den_im = rng.next_int(1, bound);
  Rational im(num_im);
  im /= den_im;
  return {re, im};
}

inline GqMatrix random_rational_matrix(SplitMix64& rng, Index rows, Index cols,
                                       bool complex_entries = false) {
  GqMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = random_scalar(rng, 3, complex_entries);
  return m;
}

inline GqMatrix col(std::initializer_list<long> values) {
  GqMatrix m(static_cast<Index>(values.size()), 1);
  Index i = 0;
  for (long v : values) m(i++, 0) = GaussianRational(v);
  return m;
}

}  // namespace gdinv::testing

#define CHECK_MAT_EQ(a, b) CHECK(gdinv::matrix_equal<gdinv::GaussianRational>((a), (b)))
