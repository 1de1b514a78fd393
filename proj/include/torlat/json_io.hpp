#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "torlat/catalog.hpp"
#include "torlat/classification.hpp"
#include "torlat/int_matrix.hpp"
#include "torlat/lattice.hpp"

namespace torlat {

namespace detail {

inline Int json_int(const nlohmann::json& v) {
  if (!v.is_number_integer())
    throw std::invalid_argument("matrix entries must be JSON integers");
  return Int(static_cast<long>(v.get<std::int64_t>()));
}

inline IntMatrix json_entries(const nlohmann::json& rows, std::size_t nrows,
                              std::size_t ncols) {
  if (!rows.is_array() || rows.size() != nrows)
    throw std::invalid_argument("matrix row count mismatch");
  IntMatrix m(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != ncols)
      throw std::invalid_argument("matrix column count mismatch");
    for (std::size_t j = 0; j < ncols; ++j) m(i, j) = json_int(row[j]);
  }
  return m;
}

inline std::int64_t to_int64(const Int& v) {
  if (!v.fits_slong_p())
    throw std::domain_error("matrix entry does not fit in a JSON integer");
  return v.get_si();
}

}  // namespace detail

// Accepts {"rank": n, "gram": [[...]]} or
// {"rows": r, "cols": c, "entries": [[...]]}.
inline IntMatrix matrix_from_json(const nlohmann::json& j) {
  if (j.contains("gram")) {
    if (!j.contains("rank") || !j["rank"].is_number_integer())
      throw std::invalid_argument("gram document needs an integer rank");
    std::size_t n = j["rank"].get<std::size_t>();
    return detail::json_entries(j["gram"], n, n);
  }
  if (j.contains("entries")) {
    if (!j.contains("rows") || !j.contains("cols"))
      throw std::invalid_argument("entries document needs rows and cols");
    return detail::json_entries(j["entries"], j["rows"].get<std::size_t>(),
                                j["cols"].get<std::size_t>());
  }
  throw std::invalid_argument("expected a gram or entries matrix document");
}

inline nlohmann::json matrix_to_json(const IntMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(detail::to_int64(m(i, j)));
    entries.push_back(row);
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

inline nlohmann::json gram_to_json(const Lattice& l) {
  nlohmann::json gram = nlohmann::json::array();
  for (std::size_t i = 0; i < l.rank(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < l.rank(); ++j)
      row.push_back(detail::to_int64(l.gram(i, j)));
    gram.push_back(row);
  }
  return {{"rank", l.rank()}, {"gram", gram}};
}

inline nlohmann::json row_to_json(const ClassificationRow& row) {
  nlohmann::json j = {{"p", row.p},
                      {"r", row.r},
                      {"dim", row.dim},
                      {"a", row.a},
                      {"lattice", row.lattice_name}};
  if (row.delta)
    j["delta"] = *row.delta;
  else
    j["delta"] = nullptr;
  return j;
}

inline ClassificationRow row_from_json(const nlohmann::json& j) {
  ClassificationRow row;
  row.p = j.at("p").get<int>();
  row.r = j.at("r").get<int>();
  row.dim = j.at("dim").get<int>();
  row.a = j.at("a").get<int>();
  if (!j.at("delta").is_null()) row.delta = j.at("delta").get<int>();
  row.lattice_name = j.at("lattice").get<std::string>();
  return row;
}

inline nlohmann::json report_to_json(const VerificationReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"check", c.check},
                      {"expected", c.expected},
                      {"computed", c.computed},
                      {"pass", c.pass}});
  return {{"example", report.example},
          {"overall", report.overall},
          {"checks", checks}};
}

}  // namespace torlat
