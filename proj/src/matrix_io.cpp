#include "numrad/matrix_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>

namespace numrad {

namespace {

using nlohmann::json;

// Parses a decimal literal (with optional sign/exponent) out of [pos, end);
// empty or sign-only text means an implicit coefficient of 1.
double parse_coefficient(const std::string& s, std::size_t pos, std::size_t end, bool* implicit) {
    double sign = 1.0;
    if (pos < end && (s[pos] == '+' || s[pos] == '-')) {
        if (s[pos] == '-') sign = -1.0;
        ++pos;
    }
    if (pos == end) {
        *implicit = true;
        return sign;
    }
    *implicit = false;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + end, value);
    if (ec != std::errc{} || ptr != s.data() + end) {
        throw MatrixParseError("malformed number '" + s.substr(pos, end - pos) + "'");
    }
    return sign * value;
}

// Index of the sign that splits real from imaginary part, or npos. Skips the
// leading sign and signs that belong to an exponent.
std::size_t split_sign(const std::string& s) {
    for (std::size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') return i;
    }
    return std::string::npos;
}

Complex entry_from_json(const json& e) {
    if (e.is_array()) {
        if (e.size() != 2 || !e[0].is_number() || !e[1].is_number())
            throw MatrixParseError("entry array must be two numbers [re, im]");
        return Complex{e[0].get<double>(), e[1].get<double>()};
    }
    if (e.is_string()) return parse_complex_literal(e.get<std::string>());
    throw MatrixParseError("entry must be an [re, im] pair or a complex string");
}

} // namespace

Complex parse_complex_literal(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw MatrixParseError("empty complex literal");

    bool implicit = false;
    if (s.back() == 'i' || s.back() == 'I') {
        const std::size_t split = split_sign(s);
        if (split == std::string::npos) {
            const double im = parse_coefficient(s, 0, s.size() - 1, &implicit);
            return Complex{0.0, im};
        }
        const double re = parse_coefficient(s, 0, split, &implicit);
        if (implicit) throw MatrixParseError("malformed complex literal '" + text + "'");
        const double im = parse_coefficient(s, split, s.size() - 1, &implicit);
        return Complex{re, im};
    }
    const double re = parse_coefficient(s, 0, s.size(), &implicit);
    if (implicit) throw MatrixParseError("malformed complex literal '" + text + "'");
    return Complex{re, 0.0};
}

ComplexMatrix parse_matrix(std::istream& in, const std::string& source_name) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw MatrixParseError(source_name + ": invalid document: " + e.what());
    }
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("entries"))
        throw MatrixParseError(source_name + ": document needs \"dim\" and \"entries\"");
    if (!doc["dim"].is_number_unsigned() || doc["dim"].get<std::size_t>() == 0)
        throw MatrixParseError(source_name + ": \"dim\" must be a positive integer");
    const std::size_t n = doc["dim"].get<std::size_t>();

    const json& rows = doc["entries"];
    if (!rows.is_array() || rows.size() != n)
        throw MatrixParseError(source_name + ": non-square: expected " + std::to_string(n) +
                               " rows");
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        const json& row = rows[i];
        if (!row.is_array() || row.size() != n)
            throw MatrixParseError(source_name + ": non-square: row " + std::to_string(i) +
                                   " does not have " + std::to_string(n) + " entries");
        for (std::size_t j = 0; j < n; ++j) {
            Complex v;
            try {
                v = entry_from_json(row[j]);
            } catch (const MatrixParseError& e) {
                throw MatrixParseError(source_name + ": row " + std::to_string(i) + ", col " +
                                       std::to_string(j) + ": " + e.what());
            }
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw MatrixParseError(source_name + ": row " + std::to_string(i) + ", col " +
                                       std::to_string(j) + ": non-finite entry");
            m.set(i, j, v);
        }
    }
    return m;
}

ComplexMatrix parse_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MatrixParseError("cannot open " + path);
    return parse_matrix(in, path);
}

nlohmann::ordered_json serialize_matrix(const ComplexMatrix& a) {
    nlohmann::ordered_json doc;
    doc["dim"] = a.dim();
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < a.dim(); ++j)
            row.push_back({a(i, j).real(), a(i, j).imag()});
        rows.push_back(std::move(row));
    }
    doc["entries"] = std::move(rows);
    return doc;
}

std::string matrix_to_string(const ComplexMatrix& a) {
    return serialize_matrix(a).dump();
}

} // namespace numrad
