#include "gdinv/fixtures.hpp"

namespace gdinv::fixtures {

GqMatrix a1() {
  return from_ints({{1, 0, 0, 0},  //
                    {0, 0, 0, 1},
                    {0, 0, 0, 0},
                    {0, 0, 0, 0}});
}

GqMatrix g1() {
  return from_ints({{1, 0, 1, 1},  //
                    {0, -1, -1, 0},
                    {0, 1, 1, -1},
                    {0, 1, -1, -1}});
}

GqMatrix d1() {
  return from_ints({{1, 0, 0, 0},  //
                    {0, 0, 0, 1},
                    {0, 1, 0, 0},
                    {0, 1, 0, 1}});
}

GqMatrix x1() {
  return from_ints({{1, 0, 1, 1},  //
                    {0, 0, 0, 0},
                    {0, 1, -1, -1},
                    {0, 1, -1, -1}});
}

GqMatrix a1_moore_penrose() {
  return from_ints({{1, 0, 0, 0},  //
                    {0, 0, 0, 0},
                    {0, 0, 0, 0},
                    {0, 1, 0, 0}});
}

GqMatrix a1_drazin() {
  return from_ints({{1, 0, 0, 0},  //
                    {0, 0, 0, 0},
                    {0, 0, 0, 0},
                    {0, 0, 0, 0}});
}

GqMatrix a2() {
  return from_ints({{1, 1, 1, 1},  //
                    {0, 0, 0, 1},
                    {0, 0, 1, 0},
                    {0, 0, 0, 0}});
}

GqMatrix g2() {
  return from_ints({{1, -1, -1, 0},  //
                    {0, 0, 0, 0},
                    {0, 0, 1, 0},
                    {0, 1, 0, 0}});
}

GqMatrix d2() {
  return from_ints({{1, -1, -1, 2},  //
                    {0, 0, 0, 0},
                    {0, 0, 1, 0},
                    {0, 1, 0, 0}});
}

// g2 * a2 * d2 evaluated exactly. It coincides with d2: for this witness
// pair the 1GD inverse and the G-Drazin inverse agree.
GqMatrix x2() {
  return from_ints({{1, -1, -1, 2},  //
                    {0, 0, 0, 0},
                    {0, 0, 1, 0},
                    {0, 1, 0, 0}});
}

}  // namespace gdinv::fixtures
