#pragma once

#include <string>

#include "json.hpp"

#include "gdinv/matrix.hpp"
#include "gdinv/oracles.hpp"
#include "gdinv/orders.hpp"
#include "gdinv/spectral.hpp"

namespace gdinv {

using Json = nlohmann::ordered_json;

/// Shared matrix text format:
///   {"rows": r, "cols": c, "entries": [["p/q", "..."], ...]}
/// Entries are scalar strings ("p", "p/q", "p/q+r/t i", ...; integer JSON
/// numbers are also accepted on input). Round-trips bit-exactly.
Json matrix_to_json(const GqMatrix& m);
std::string matrix_to_string(const GqMatrix& m);
GqMatrix matrix_from_json(const nlohmann::json& j);
GqMatrix matrix_from_string(const std::string& text);
GqMatrix load_matrix_file(const std::string& path);

Json report_to_json(const ClauseReport& rep);
Json report_to_json(const CharacterizationReport& rep);
Json report_to_json(const OrderReport& rep);
Json decomposition_to_json(const CoreNilpotentDecomposition& cnd);
Json index_to_json(const IndexedMatrix& im);

}  // namespace gdinv
