#include "qmeur/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qmeur/error.hpp"

namespace qmeur {

namespace {

using nlohmann::json;

json parse_json(std::string_view text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, what + ": " + e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const json& field(const json& obj, const char* name, const std::string& what) {
  if (!obj.is_object()) throw Error(ErrorKind::ParseError, what + ": top level must be a JSON object");
  const auto it = obj.find(name);
  if (it == obj.end()) throw Error(ErrorKind::ParseError, what + ": missing field '" + name + "'");
  return *it;
}

Complex parse_complex(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw Error(ErrorKind::ParseError, where + ": expected [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

// rows[r][c] -> (r, c)
ComplexMatrix parse_rows(const json& rows, const std::string& name) {
  if (!rows.is_array() || rows.empty()) throw Error(ErrorKind::ParseError, name + ": expected a nonempty array");
  const std::size_t n_rows = rows.size();
  std::size_t n_cols = 0;
  std::vector<Complex> entries;
  for (std::size_t r = 0; r < n_rows; ++r) {
    const std::string row_name = name + "[" + std::to_string(r) + "]";
    if (!rows[r].is_array()) throw Error(ErrorKind::ParseError, row_name + ": expected an array");
    if (r == 0) n_cols = rows[r].size();
    if (rows[r].size() != n_cols) {
      throw Error(ErrorKind::ParseError, row_name + ": has " + std::to_string(rows[r].size()) +
                                             " entries, expected " + std::to_string(n_cols));
    }
    for (std::size_t c = 0; c < n_cols; ++c) {
      entries.push_back(parse_complex(rows[r][c], row_name + "[" + std::to_string(c) + "]"));
    }
  }
  return ComplexMatrix(n_rows, n_cols, std::move(entries));
}

json complex_rows(const ComplexMatrix& m, bool transpose) {
  json rows = json::array();
  const std::size_t outer = transpose ? m.cols() : m.rows();
  const std::size_t inner = transpose ? m.rows() : m.cols();
  for (std::size_t a = 0; a < outer; ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < inner; ++b) {
      const Complex z = transpose ? m(b, a) : m(a, b);
      row.push_back({z.real(), z.imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

DensityMatrix parse_state_json(std::string_view text) {
  const json doc = parse_json(text, "state");
  const json& dims_json = field(doc, "dims", "state");
  if (!dims_json.is_array()) throw Error(ErrorKind::ParseError, "dims: expected an array of integers");
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i < dims_json.size(); ++i) {
    if (!dims_json[i].is_number_integer() || dims_json[i].get<long long>() < 0) {
      throw Error(ErrorKind::ParseError, "dims[" + std::to_string(i) + "]: expected a nonnegative integer");
    }
    dims.push_back(dims_json[i].get<std::size_t>());
  }
  ComplexMatrix m = parse_rows(field(doc, "matrix", "state"), "matrix");
  return DensityMatrix(Register(std::move(dims)), std::move(m));
}

DensityMatrix load_state(const std::filesystem::path& path) { return parse_state_json(read_file(path)); }

std::string state_to_json(const DensityMatrix& rho) {
  json doc;
  doc["dims"] = rho.reg().dims();
  doc["matrix"] = complex_rows(rho.matrix(), false);
  return doc.dump();
}

MeasurementBasis parse_basis_json(std::string_view text) {
  const json doc = parse_json(text, "basis");
  const json& label = field(doc, "label", "basis");
  if (!label.is_string()) throw Error(ErrorKind::ParseError, "label: expected a string");
  // vectors[k] is the k-th basis vector, i.e. column k.
  const ComplexMatrix rows = parse_rows(field(doc, "vectors", "basis"), "vectors");
  ComplexMatrix columns(rows.cols(), rows.rows());
  for (std::size_t k = 0; k < rows.rows(); ++k) {
    for (std::size_t i = 0; i < rows.cols(); ++i) columns(i, k) = rows(k, i);
  }
  return MeasurementBasis(label.get<std::string>(), std::move(columns));
}

MeasurementBasis load_basis(const std::filesystem::path& path) { return parse_basis_json(read_file(path)); }

std::string basis_to_json(const MeasurementBasis& basis) {
  json doc;
  doc["label"] = basis.label();
  doc["vectors"] = complex_rows(basis.vectors(), true);
  return doc.dump();
}

MeasurementBasis resolve_basis(const std::string& name_or_path) {
  if (name_or_path == "pauli-x" || name_or_path == "pauli-y" || name_or_path == "pauli-z" ||
      name_or_path == "computational") {
    return builtin_basis(name_or_path);
  }
  if (!std::filesystem::exists(name_or_path)) {
    throw Error(ErrorKind::ValidationError, "bases: '" + name_or_path + "' is neither a built-in basis nor a file");
  }
  return load_basis(name_or_path);
}

MeasurementSet parse_bases_list(std::string_view list) {
  std::vector<MeasurementBasis> bases;
  std::size_t start = 0;
  while (start <= list.size()) {
    const auto pos = list.find(',', start);
    std::string_view item = list.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    if (item.empty()) throw Error(ErrorKind::ParseError, "bases: empty entry in '" + std::string(list) + "'");
    bases.push_back(resolve_basis(std::string(item)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return MeasurementSet(std::move(bases));
}

void write_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::ValidationError, "out: cannot write '" + tmp.string() + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error(ErrorKind::ValidationError, "out: write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error(ErrorKind::ValidationError, "out: cannot rename into '" + path.string() + "': " + ec.message());
  }
}

}  // namespace qmeur
