#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gdinv/inverses.hpp"

namespace gdinv {

enum class Side { Gd1, OneGd };

/// Named boolean clauses, in a fixed order so serialized reports are stable.
struct ClauseReport {
  std::vector<std::pair<std::string, bool>> clauses;

  bool all_true() const {
    for (const auto& c : clauses)
      if (!c.second) return false;
    return true;
  }
  void add(std::string name, bool value) { clauses.emplace_back(std::move(name), value); }
};

/// Elemental-property checks for one side: {1,2}-membership, the power-shift
/// identities for m in {1,2,3}, and both projector equalities.
ClauseReport check_basic(const GqMatrix& a, const GqMatrix& a_inner, const GqMatrix& a_gd,
                         Side side);

/// GD1 side of check_basic.
inline ClauseReport check_gd1_basic(const GqMatrix& a, const GqMatrix& a_inner,
                                    const GqMatrix& a_gd) {
  return check_basic(a, a_inner, a_gd, Side::Gd1);
}

/// The geometric uniqueness construction: solves AX = P_{R(A),N(A A^-)} with
/// R(X) contained in R(A^{GD} A) (GD1 side; the 1GD side is the mirror) as a
/// linear system and insists on a unique solution. Existence or uniqueness
/// failures indicate a kernel bug, never a property of valid inputs.
GqMatrix geometric_solve(const GqMatrix& a, const GqMatrix& a_inner, const GqMatrix& a_gd,
                         Side side);

inline GqMatrix gd1_geometric_solve(const GqMatrix& a, const GqMatrix& a_inner,
                                    const GqMatrix& a_gd) {
  return geometric_solve(a, a_inner, a_gd, Side::Gd1);
}

/// Per-statement evaluation of the four characterization theorems for one
/// side. `statements` carries one bool per theorem statement item;
/// `clauses` the atomic conditions (names like "thm4.ii.range").
/// all_equivalent is true iff every statement got the same truth value.
struct CharacterizationReport {
  Side side{Side::Gd1};
  std::vector<std::pair<std::string, bool>> statements;
  std::vector<std::pair<std::string, bool>> clauses;
  bool all_equivalent{false};

  bool all_statements_true() const {
    for (const auto& s : statements)
      if (!s.second) return false;
    return true;
  }
};

CharacterizationReport characterization_report(const GqMatrix& a, const GqMatrix& x,
                                               const GqMatrix& a_inner, const GqMatrix& a_gd,
                                               Side side);

/// The rank-equation witness M = I - A X, N = I - X A together with the four
/// annihilation identities and the 2n x 2n block-rank equality.
struct RankEquationWitness {
  GqMatrix m;
  GqMatrix n;
  GqMatrix x;
  Index block_rank{0};
  Index rank_a{0};
  ClauseReport clauses;

  bool all_true() const { return clauses.all_true(); }
};

RankEquationWitness rank_equation_witness(const GqMatrix& a, const GqMatrix& a_inner,
                                          const GqMatrix& a_gd, Side side);

struct BCSpec {
  GqMatrix b;
  GqMatrix c;
};

/// XAB = B, CAX = C, N(C) in N(X), R(X) in R(B).
bool is_bc_inverse(const GqMatrix& a, const BCSpec& spec, const GqMatrix& x);

/// Solves the four (B,C)-inverse conditions as a linear system. nullopt means
/// no (B,C)-inverse exists (a valid outcome); a non-unique solution set would
/// contradict the uniqueness of (B,C)-inverses and raises
/// InternalInconsistencyError.
std::optional<GqMatrix> bc_inverse_solve(const GqMatrix& a, const BCSpec& spec);

}  // namespace gdinv
