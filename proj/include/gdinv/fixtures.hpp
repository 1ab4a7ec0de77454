#pragma once

#include "gdinv/matrix.hpp"

// The worked 4x4 examples shipped as fixtures, both in code and as JSON files
// under fixtures/. a1/g1/d1/x1 belong to the GD1 example, a2/g2/d2/x2 to the
// 1GD example; the *_moore_penrose/_drazin values are the companion displays.
namespace gdinv::fixtures {

GqMatrix a1();
GqMatrix g1();  // a fixed inner inverse of a1
GqMatrix d1();  // a fixed G-Drazin inverse of a1
GqMatrix x1();  // the GD1 inverse d1 * a1 * g1
GqMatrix a1_moore_penrose();
GqMatrix a1_drazin();

GqMatrix a2();
GqMatrix g2();  // a fixed inner inverse of a2
GqMatrix d2();  // a fixed G-Drazin inverse of a2
GqMatrix x2();  // the 1GD inverse g2 * a2 * d2

}  // namespace gdinv::fixtures
