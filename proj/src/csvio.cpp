#include "ccorder/csvio.hpp"
#include "ccorder/errors.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace ccorder {

namespace {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& text) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc() || res.ptr != end) {
        throw ArgumentError("malformed number: '" + text + "'");
    }
    return value;
}

} // namespace

std::complex<double> parse_complex(const std::string& token) {
    std::string t;
    t.reserve(token.size());
    for (char c : token) {
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    }
    if (t.empty()) {
        throw ArgumentError("empty matrix entry");
    }

    const bool has_i = (t.back() == 'i' || t.back() == 'I');
    if (!has_i) {
        return {parse_double(t), 0.0};
    }
    t.pop_back();  // drop the trailing i
    if (t.empty() || t == "+" || t == "-") {
        // bare "i", "+i", "-i"
        return {0.0, t == "-" ? -1.0 : 1.0};
    }

    // Find the sign separating real and imaginary parts: the last '+'/'-'
    // that is not an exponent sign and not the leading sign.
    std::size_t split = std::string::npos;
    for (std::size_t idx = t.size(); idx-- > 1;) {
        const char c = t[idx];
        if ((c == '+' || c == '-') && t[idx - 1] != 'e' && t[idx - 1] != 'E') {
            split = idx;
            break;
        }
    }
    if (split == std::string::npos) {
        return {0.0, parse_double(t)};  // pure imaginary, e.g. "2.5i"
    }
    const double re = parse_double(t.substr(0, split));
    std::string imag_part = t.substr(split);
    if (imag_part == "+") {
        return {re, 1.0};
    }
    if (imag_part == "-") {
        return {re, -1.0};
    }
    if (imag_part[0] == '+') imag_part.erase(0, 1);
    return {re, parse_double(imag_part)};
}

std::string format_complex(const std::complex<double>& z) {
    const double im = z.imag();
    return format_double(z.real()) + (im < 0.0 || (im == 0.0 && std::signbit(im)) ? "-" : "+") +
           format_double(std::abs(im)) + "i";
}

CMatrix read_matrix_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ArgumentError("cannot open matrix CSV file: " + path);
    }
    std::vector<std::vector<std::complex<double>>> rows;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::complex<double>> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                row.push_back(parse_complex(cell));
            } catch (const ArgumentError& e) {
                throw ArgumentError(path + ":" + std::to_string(line_number) + ": " + e.what());
            }
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw ArgumentError(path + ":" + std::to_string(line_number) +
                                ": row has " + std::to_string(row.size()) +
                                " entries, expected " + std::to_string(rows.front().size()));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty() || rows.front().empty()) {
        throw ArgumentError("matrix CSV file is empty: " + path);
    }
    CMatrix mat(Eigen::Index(rows.size()), Eigen::Index(rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows.front().size(); ++j) {
            mat(Eigen::Index(i), Eigen::Index(j)) = rows[i][j];
        }
    }
    return mat;
}

void write_matrix_csv(const CMatrix& mat, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ArgumentError("cannot open matrix CSV file for writing: " + path);
    }
    for (Eigen::Index i = 0; i < mat.rows(); ++i) {
        for (Eigen::Index j = 0; j < mat.cols(); ++j) {
            if (j) out << ',';
            out << format_complex(mat(i, j));
        }
        out << '\n';
    }
    if (!out.good()) {
        throw ArgumentError("error while writing matrix CSV file: " + path);
    }
}

} // namespace ccorder
