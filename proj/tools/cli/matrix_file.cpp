#include "cli/matrix_file.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace trineq::cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(std::string_view origin, const std::string& msg) {
  throw ParseError(std::string(origin) + ": " + msg);
}

double number(const json& v, std::string_view origin, const std::string& where) {
  if (!v.is_number()) fail(origin, where + " is not a number");
  return v.get<double>();
}

}  // namespace

MatrixFile parse_matrix_json(std::string_view text, std::string_view origin) {
  json doc;
  try {
    doc = json::parse(text, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    fail(origin, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail(origin, "top level must be an object");
  for (const char* key : {"rows", "cols", "data"}) {
    if (!doc.contains(key)) fail(origin, std::string("missing field '") + key + "'");
  }
  if (!doc["rows"].is_number_integer() || !doc["cols"].is_number_integer()) {
    fail(origin, "rows and cols must be integers");
  }
  const long rows = doc["rows"].get<long>();
  const long cols = doc["cols"].get<long>();
  if (rows < 1 || cols < 1) fail(origin, "rows and cols must be positive");
  if (rows != cols) {
    fail(origin, "matrix must be square, got " + std::to_string(rows) + "x" + std::to_string(cols));
  }
  const json& data = doc["data"];
  if (!data.is_array() || static_cast<long>(data.size()) != rows) {
    fail(origin, "data must be an array of " + std::to_string(rows) + " rows");
  }

  MatrixFile out;
  if (!doc.contains("name") || !doc["name"].is_string()) fail(origin, "name must be a string");
  out.name = doc["name"].get<std::string>();
  out.data.resize(rows, cols);
  for (long j = 0; j < rows; ++j) {
    const json& row = data[static_cast<std::size_t>(j)];
    if (!row.is_array() || static_cast<long>(row.size()) != cols) {
      fail(origin, "row " + std::to_string(j) + " must have " + std::to_string(cols) + " entries");
    }
    for (long k = 0; k < cols; ++k) {
      const json& entry = row[static_cast<std::size_t>(k)];
      const std::string where = "entry (" + std::to_string(j) + "," + std::to_string(k) + ")";
      if (!entry.is_array() || entry.size() != 2) fail(origin, where + " must be a [re, im] pair");
      out.data(j, k) = Complex(number(entry[0], origin, where), number(entry[1], origin, where));
    }
  }
  return out;
}

MatrixFile read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_json(buf.str(), path.string());
}

std::string to_json(const MatrixFile& file) {
  json data = json::array();
  for (Index j = 0; j < file.data.rows(); ++j) {
    json row = json::array();
    for (Index k = 0; k < file.data.cols(); ++k) {
      row.push_back({file.data(j, k).real(), file.data(j, k).imag()});
    }
    data.push_back(std::move(row));
  }
  json doc = {{"name", file.name}, {"rows", file.data.rows()}, {"cols", file.data.cols()}, {"data", data}};
  return doc.dump() + "\n";
}

void write_matrix_file(const std::filesystem::path& path, const MatrixFile& file) {
  std::ofstream out(path);
  if (!out) throw Error(path.string() + ": cannot write file");
  out << to_json(file);
}

HermMatrix read_hermitian(const std::filesystem::path& path) {
  const MatrixFile f = read_matrix_file(path);
  try {
    return HermMatrix(f.data);
  } catch (const Error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace trineq::cli
