#pragma once

#include <optional>

#include "gdinv/oracles.hpp"

namespace gdinv {

enum class OrderKind { Gd1Order, OneGdOrder, DMinus, MinusD, LeftSharp, RightSharp };

/// Pins the non-unique inverses a witness-dependent relation is evaluated
/// with. The relations quantify existentially over A^- and A^{GD}; callers
/// either supply a witness or obtain one from sharp_to_gd1_witness.
struct OrderWitness {
  GqMatrix inner;
  GqMatrix gd;
};

/// Evaluates the defining identities of the relation exactly. Witness
/// required for Gd1Order/OneGdOrder/DMinus/MinusD; sharp kinds require
/// index <= 1 of both arguments and check the range inclusion side through
/// exact rank tests.
bool relation_holds(const GqMatrix& a, const GqMatrix& b, OrderKind kind,
                    const std::optional<OrderWitness>& witness = std::nullopt);

/// The five-statement idempotent characterization of <=^{GD1} (and its 1GD
/// dual), evaluated constructively with P = A X, Q = X A for the witness's
/// composite inverse X. all_agree reports whether (i)..(v) got one common
/// truth value.
struct OrderReport {
  Side side{Side::Gd1};
  std::vector<std::pair<std::string, bool>> statements;
  std::vector<std::pair<std::string, bool>> clauses;
  bool all_agree{false};

  bool all_statements_true() const {
    for (const auto& s : statements)
      if (!s.second) return false;
    return true;
  }
};

OrderReport order_characterization_report(const GqMatrix& a, const GqMatrix& b, Side side,
                                          const OrderWitness& witness);

/// Solves {A X A = A, (A-B) X = 0, X (A-B) = 0} for an inner inverse of A
/// absorbing B on both sides, and pairs it with a G-Drazin inverse of A into
/// an order witness. nullopt iff the linear system is infeasible. Requires
/// ind(A) <= 1. Serves both the right-sharp/GD1 and left-sharp/1GD
/// equivalence theorems (the system is side-symmetric).
std::optional<OrderWitness> sharp_to_gd1_witness(const GqMatrix& a, const GqMatrix& b);

}  // namespace gdinv
