#include "gdinv/matrix_io.hpp"

#include <fstream>

namespace gdinv {

Json matrix_to_json(const GqMatrix& m) {
  Json entries = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    entries.push_back(std::move(row));
  }
  Json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["entries"] = std::move(entries);
  return out;
}

std::string matrix_to_string(const GqMatrix& m) { return matrix_to_json(m).dump(); }

GqMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("matrix JSON must be an object");
  if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw ParseError("matrix JSON needs rows, cols, entries");
  if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer())
    throw ParseError("rows and cols must be integers");
  const auto rows = j["rows"].get<long long>();
  const auto cols = j["cols"].get<long long>();
  if (rows < 0 || cols < 0) throw ParseError("rows and cols must be nonnegative");
  const auto& entries = j["entries"];
  if (!entries.is_array() || static_cast<long long>(entries.size()) != rows)
    throw ParseError("entries must hold one array per row");

  GqMatrix m(static_cast<Index>(rows), static_cast<Index>(cols));
  for (long long i = 0; i < rows; ++i) {
    const auto& row = entries[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<long long>(row.size()) != cols)
      throw ParseError("row " + std::to_string(i) + " has the wrong length");
    for (long long k = 0; k < cols; ++k) {
      const auto& cell = row[static_cast<std::size_t>(k)];
      if (cell.is_string())
        m(static_cast<Index>(i), static_cast<Index>(k)) = parse_scalar(cell.get<std::string>());
      else if (cell.is_number_integer())
        m(static_cast<Index>(i), static_cast<Index>(k)) =
            GaussianRational(static_cast<long>(cell.get<long long>()));
      else
        throw ParseError("entries must be scalar strings or integers");
    }
  }
  return m;
}

GqMatrix matrix_from_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return matrix_from_json(j);
}

GqMatrix load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return matrix_from_string(text);
}

namespace {

Json clauses_to_json(const std::vector<std::pair<std::string, bool>>& clauses) {
  Json out;
  for (const auto& [name, value] : clauses) out[name] = value;
  return out;
}

}  // namespace

Json report_to_json(const ClauseReport& rep) { return clauses_to_json(rep.clauses); }

Json report_to_json(const CharacterizationReport& rep) {
  Json out = clauses_to_json(rep.clauses);
  for (const auto& [name, value] : rep.statements) out["stmt." + name] = value;
  out["allEquivalent"] = rep.all_equivalent;
  return out;
}

Json report_to_json(const OrderReport& rep) {
  Json out = clauses_to_json(rep.clauses);
  for (const auto& [name, value] : rep.statements) out["stmt." + name] = value;
  out["allAgree"] = rep.all_agree;
  return out;
}

Json decomposition_to_json(const CoreNilpotentDecomposition& cnd) {
  Json out;
  out["k"] = cnd.k;
  out["s"] = cnd.s;
  out["P"] = matrix_to_json(cnd.p);
  out["Pinv"] = matrix_to_json(cnd.p_inv);
  out["C"] = matrix_to_json(cnd.c);
  out["N"] = matrix_to_json(cnd.n);
  return out;
}

Json index_to_json(const IndexedMatrix& im) {
  Json out;
  out["index"] = im.k;
  out["rankChain"] = im.rank_chain;
  return out;
}

}  // namespace gdinv
