#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "admeans/matrix.hpp"

namespace admeans {

// On-disk formats:
//   JSON: {"rows": n, "cols": n, "data": [[re, im], ...]} row-major
//   CSV:  n^2 lines of "re,im", dimension inferred from the line count
// Format selection is by extension (.json / .csv); load falls back to
// sniffing the first non-space byte ('{' means JSON).

CMatrix load_matrix(const std::string& path);
void save_matrix(const CMatrix& m, const std::string& path);

CMatrix parse_matrix_json(const std::string& text);
std::string to_matrix_json(const CMatrix& m);

// The same schema as JSON values, for embedding matrices in reports.
nlohmann::json matrix_to_json_value(const CMatrix& m);
CMatrix matrix_from_json_value(const nlohmann::json& j);

CMatrix parse_matrix_csv(const std::string& text);
std::string to_matrix_csv(const CMatrix& m);

// "re+imi" rendering used by the CLI, e.g. "6.708204+5.656854i".
std::string format_complex(const Complex& z, int precision = 6);
void print_matrix(std::ostream& os, const CMatrix& m, int precision = 6);

} // namespace admeans
