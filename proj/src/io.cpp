#include "gonil/io.hpp"

#include "gonil/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace gonil {

namespace {

using json = nlohmann::ordered_json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& err) {
    throw InputError(std::string("malformed JSON: ") + err.what());
  }
}

Rational rational_field(const json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& err) {
      throw InputError(where + ": " + err.what());
    }
  }
  if (v.is_number_integer()) return Rational(v.dump());
  throw InputError(where + ": expected a rational string \"p\" or \"p/q\"");
}

std::size_t index_field(const std::string& text, std::size_t dim, const std::string& where) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw InputError(where + ": bad index '" + text + "'");
  std::size_t value = 0;
  try {
    value = std::stoul(text);
  } catch (const std::exception&) {
    throw InputError(where + ": bad index '" + text + "'");
  }
  if (value >= dim)
    throw InputError(where + ": index " + text + " out of range for dim " + std::to_string(dim));
  return value;
}

MatrixQ matrix_field(const json& v, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!v.is_array() || v.size() != rows)
    throw InputError(where + ": expected " + std::to_string(rows) + " rows");
  MatrixQ out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!v[r].is_array() || v[r].size() != cols)
      throw InputError(where + ": row " + std::to_string(r) + " must have " +
                       std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c)
      out(r, c) = rational_field(v[r][c], where + "[" + std::to_string(r) + "][" +
                                              std::to_string(c) + "]");
  }
  return out;
}

json matrix_json(const MatrixQ& a) {
  json rows = json::array();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(to_string(a(r, c)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

AlgebraFile parse_algebra_file(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw InputError("algebra file: top level must be an object");
  if (!doc.contains("dim") || !doc["dim"].is_number_unsigned())
    throw InputError("algebra file: 'dim' must be a non-negative integer");
  const std::size_t n = doc["dim"].get<std::size_t>();

  AlgebraFile out;
  if (doc.contains("basis_names")) {
    const json& names = doc["basis_names"];
    if (!names.is_array() || names.size() != n)
      throw InputError("algebra file: 'basis_names' must list " + std::to_string(n) + " names");
    for (const auto& nm : names) {
      if (!nm.is_string()) throw InputError("algebra file: basis names must be strings");
      out.basis_names.push_back(nm.get<std::string>());
    }
  }

  BracketTable table(n);
  if (doc.contains("brackets")) {
    const json& br = doc["brackets"];
    if (!br.is_object()) throw InputError("algebra file: 'brackets' must be an object");
    for (const auto& [key, value] : br.items()) {
      const std::string where = "brackets[\"" + key + "\"]";
      const auto comma = key.find(',');
      if (comma == std::string::npos) throw InputError(where + ": key must be \"i,j\"");
      const std::size_t i = index_field(key.substr(0, comma), n, where);
      const std::size_t j = index_field(key.substr(comma + 1), n, where);
      if (i >= j) throw InputError(where + ": key must satisfy i < j");
      if (!value.is_object()) throw InputError(where + ": value must map target index to rational");
      SparseVector sv;
      for (const auto& [target, coeff] : value.items()) {
        const std::size_t k = index_field(target, n, where);
        sv[k] = rational_field(coeff, where + "[\"" + target + "\"]");
      }
      table.set(i, j, sv);
    }
  }

  if (!doc.contains("form")) throw InputError("algebra file: missing 'form'");
  MatrixQ gram = matrix_field(doc["form"], n, n, "form");

  const auto violations = jacobi_defect(table);
  if (!violations.empty()) {
    const auto& v = violations.front();
    throw InputError("algebra file: Jacobi identity fails at (" + std::to_string(v.i) + "," +
                     std::to_string(v.j) + "," + std::to_string(v.k) + "), defect " +
                     to_string(v.defect));
  }
  out.algebra = MetricLieAlgebra(LieAlgebra(std::move(table)), SymForm(std::move(gram)));
  return out;
}

std::string serialize_algebra_file(const MetricLieAlgebra& m,
                                   const std::vector<std::string>& basis_names) {
  json doc;
  doc["dim"] = m.dim();
  if (!basis_names.empty()) doc["basis_names"] = basis_names;
  json br = json::object();
  for (const auto& [key, value] : m.algebra().table().entries()) {
    json target = json::object();
    for (const auto& [k, c] : value) target[std::to_string(k)] = to_string(c);
    br[std::to_string(key.first) + "," + std::to_string(key.second)] = target;
  }
  doc["brackets"] = br;
  doc["form"] = matrix_json(m.form().gram());
  return doc.dump(2) + "\n";
}

ExtensionData parse_extension_data(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw InputError("extension file: top level must be an object");
  for (const char* key : {"D", "phi", "omega"})
    if (!doc.contains(key)) throw InputError(std::string("extension file: missing '") + key + "'");
  const json& phi = doc["phi"];
  if (!phi.is_array()) throw InputError("extension file: 'phi' must be an array");
  const std::size_t n0 = phi.size();
  ExtensionData data;
  data.d = matrix_field(doc["D"], n0, n0, "D");
  data.phi.resize(n0);
  for (std::size_t i = 0; i < n0; ++i)
    data.phi[i] = rational_field(phi[i], "phi[" + std::to_string(i) + "]");
  data.omega = matrix_field(doc["omega"], n0, n0, "omega");
  data.mu = doc.contains("mu") ? rational_field(doc["mu"], "mu") : Rational(0);
  return data;
}

std::string serialize_extension_data(const ExtensionData& data) {
  json doc;
  doc["D"] = matrix_json(data.d);
  json phi = json::array();
  for (const auto& x : data.phi) phi.push_back(to_string(x));
  doc["phi"] = phi;
  doc["omega"] = matrix_json(data.omega);
  doc["mu"] = to_string(data.mu);
  return doc.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace gonil
