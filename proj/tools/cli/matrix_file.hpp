#pragma once

// Matrix files: UTF-8 JSON {name, rows, cols, data: [[[re, im], ...], ...]}.
// Line and block comments are accepted on read.

#include <filesystem>
#include <string>
#include <string_view>

#include "trineq/matrix.hpp"

namespace trineq::cli {

class ParseError : public Error {
 public:
  using Error::Error;
};

struct MatrixFile {
  std::string name;
  Matrix data;
};

MatrixFile parse_matrix_json(std::string_view text, std::string_view origin = "<string>");
MatrixFile read_matrix_file(const std::filesystem::path& path);
// Shortest round-trip decimal form, so read(write(m)) is bit-identical.
std::string to_json(const MatrixFile& file);
void write_matrix_file(const std::filesystem::path& path, const MatrixFile& file);

// Reads and validates as Hermitian.
HermMatrix read_hermitian(const std::filesystem::path& path);

}  // namespace trineq::cli
