#include "admeans/matrix_io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace admeans {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

} // namespace

CMatrix matrix_from_json_value(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
        throw InvalidInput("matrix JSON must have rows, cols, data");
    const auto rows = j["rows"].get<Eigen::Index>();
    const auto cols = j["cols"].get<Eigen::Index>();
    if (rows <= 0 || rows != cols)
        throw InvalidInput("matrix JSON: rows and cols must be equal and positive");
    const auto& data = j["data"];
    if (!data.is_array() || data.size() != static_cast<std::size_t>(rows * cols))
        throw InvalidInput("matrix JSON: data length must be rows*cols");

    CMatrix m(rows, cols);
    std::size_t idx = 0;
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j2 = 0; j2 < cols; ++j2, ++idx) {
            const auto& entry = data[idx];
            if (!entry.is_array() || entry.size() != 2)
                throw InvalidInput("matrix JSON: each entry must be [re, im]");
            m(i, j2) = Complex(entry[0].get<double>(), entry[1].get<double>());
        }
    if (!all_finite(m)) throw InvalidInput("matrix JSON: non-finite entry");
    return m;
}

nlohmann::json matrix_to_json_value(const CMatrix& m) {
    json data = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            data.push_back({m(i, j).real(), m(i, j).imag()});
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

CMatrix parse_matrix_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("matrix JSON parse error: ") + e.what());
    }
    return matrix_from_json_value(j);
}

std::string to_matrix_json(const CMatrix& m) {
    return matrix_to_json_value(m).dump(2) + "\n";
}

CMatrix parse_matrix_csv(const std::string& text) {
    std::vector<Complex> entries;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream row(line);
        double re = 0.0, im = 0.0;
        char comma = 0;
        if (!(row >> re >> comma >> im) || comma != ',')
            throw InvalidInput("matrix CSV: expected 're,im' per line, got: " + line);
        entries.emplace_back(re, im);
    }
    const auto count = entries.size();
    const auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(count))));
    if (count == 0 || static_cast<std::size_t>(n * n) != count)
        throw InvalidInput("matrix CSV: entry count must be a perfect square");
    CMatrix m(n, n);
    std::size_t idx = 0;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j, ++idx) m(i, j) = entries[idx];
    if (!all_finite(m)) throw InvalidInput("matrix CSV: non-finite entry");
    return m;
}

std::string to_matrix_csv(const CMatrix& m) {
    std::ostringstream out;
    out << std::setprecision(17);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            out << m(i, j).real() << "," << m(i, j).imag() << "\n";
    return out.str();
}

CMatrix load_matrix(const std::string& path) {
    const std::string text = read_file(path);
    if (ends_with(path, ".json")) return parse_matrix_json(text);
    if (ends_with(path, ".csv")) return parse_matrix_csv(text);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_matrix_json(text);
    return parse_matrix_csv(text);
}

void save_matrix(const CMatrix& m, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write file: " + path);
    out << (ends_with(path, ".csv") ? to_matrix_csv(m) : to_matrix_json(m));
}

std::string format_complex(const Complex& z, int precision) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(precision) << z.real()
        << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return out.str();
}

void print_matrix(std::ostream& os, const CMatrix& m, int precision) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) os << "  ";
            os << format_complex(m(i, j), precision);
        }
        os << "\n";
    }
}

} // namespace admeans
