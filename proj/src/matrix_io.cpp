#include "meyer/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace meyer {

namespace {

using nlohmann::json;

Int entry_from_json(const json& e) {
  if (e.is_number_integer()) return Int(e.get<long long>());
  if (e.is_number_unsigned()) return Int(e.get<unsigned long long>());
  if (e.is_string()) {
    const std::string s = e.get<std::string>();
    std::size_t k = s.size() > 0 && (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (k == s.size())
      throw InvalidDocument("matrix entry string is not a decimal integer");
    for (; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9')
        throw InvalidDocument("matrix entry string is not a decimal integer");
    return Int(s);
  }
  throw InvalidDocument("matrix entries must be integers or decimal strings");
}

IntMat matrix_from_json(const json& j, std::size_t rows, std::size_t cols,
                        const std::string& name) {
  if (!j.is_array() || j.size() != rows)
    throw InvalidDocument(name + " must be an array of " +
                          std::to_string(rows) + " rows");
  IntMat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = j[i];
    if (!row.is_array() || row.size() != cols)
      throw InvalidDocument(name + " rows must have " + std::to_string(cols) +
                            " entries");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = entry_from_json(row[c]);
  }
  return m;
}

json entry_to_json(const Int& v) {
  static const Int lo = Int(std::numeric_limits<long long>::min());
  static const Int hi = Int(std::numeric_limits<long long>::max());
  if (v >= lo && v <= hi) return json(static_cast<long long>(v));
  return json(v.str());
}

json matrix_to_json(const IntMat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(entry_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json parse_document(const std::string& text, std::size_t& g_out) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidDocument(std::string("document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidDocument("document must be a JSON object");
  if (!doc.contains("g") || !doc["g"].is_number_integer() ||
      doc["g"].get<long long>() < 1)
    throw InvalidDocument("document needs a positive integer field \"g\"");
  g_out = static_cast<std::size_t>(doc["g"].get<long long>());
  return doc;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidDocument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

SpElement sp_from_json(const std::string& json_text) {
  std::size_t g = 0;
  const json doc = parse_document(json_text, g);
  if (doc.contains("matrix"))
    return SpElement(g, matrix_from_json(doc["matrix"], 2 * g, 2 * g, "matrix"));
  if (doc.contains("P") && doc.contains("Q") && doc.contains("S"))
    return UrSpElement(g, matrix_from_json(doc["P"], g, g, "P"),
                       matrix_from_json(doc["Q"], g, g, "Q"),
                       matrix_from_json(doc["S"], g, g, "S"))
        .assemble();
  throw InvalidDocument("document needs either \"matrix\" or \"P\"/\"Q\"/\"S\"");
}

SpElement load_sp_element(const std::string& path) {
  return sp_from_json(slurp(path));
}

UrSpElement ursp_from_json(const std::string& json_text) {
  std::size_t g = 0;
  const json doc = parse_document(json_text, g);
  if (doc.contains("P") && doc.contains("Q") && doc.contains("S"))
    return UrSpElement(g, matrix_from_json(doc["P"], g, g, "P"),
                       matrix_from_json(doc["Q"], g, g, "Q"),
                       matrix_from_json(doc["S"], g, g, "S"));
  if (doc.contains("matrix"))
    return split_ursp(
        SpElement(g, matrix_from_json(doc["matrix"], 2 * g, 2 * g, "matrix")));
  throw InvalidDocument("document needs either \"matrix\" or \"P\"/\"Q\"/\"S\"");
}

UrSpElement load_ursp_element(const std::string& path) {
  return ursp_from_json(slurp(path));
}

std::string to_json(const SpElement& a) {
  json doc;
  doc["g"] = a.genus();
  doc["matrix"] = matrix_to_json(a.matrix());
  return doc.dump();
}

std::string to_json(const UrSpElement& a) {
  json doc;
  doc["g"] = a.genus();
  doc["P"] = matrix_to_json(a.p());
  doc["Q"] = matrix_to_json(a.q());
  doc["S"] = matrix_to_json(a.s());
  return doc.dump();
}

}  // namespace meyer
