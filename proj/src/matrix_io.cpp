#include "spinstat/matrix_io.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace spinstat {

using nlohmann::json;

std::string matrix_to_text(const ExactMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows.dump();
}

ExactMatrix matrix_from_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("matrix file is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw FormatError("matrix must be an array of rows");
  const std::size_t rows = doc.size();
  if (rows == 0) return {};
  if (!doc[0].is_array()) throw FormatError("matrix row 1 is not an array");
  const std::size_t cols = doc[0].size();
  ExactMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = doc[r];
    if (!row.is_array()) throw FormatError("matrix row " + std::to_string(r + 1) + " is not an array");
    if (row.size() != cols) throw FormatError("matrix row " + std::to_string(r + 1) + " has wrong length");
    for (std::size_t c = 0; c < cols; ++c) {
      const json& cell = row[c];
      if (cell.is_string()) {
        m(r, c) = Scalar::parse(cell.get<std::string>());
      } else if (cell.is_number_integer()) {
        m(r, c) = Scalar(cell.get<long long>());
      } else {
        throw FormatError("matrix entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                          ") must be a scalar string");
      }
    }
  }
  return m;
}

ExactMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open matrix file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return matrix_from_text(buf.str());
}

}  // namespace spinstat
