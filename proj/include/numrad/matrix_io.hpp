#pragma once

#include "numrad/complex_matrix.hpp"

#include <json.hpp>

#include <istream>
#include <stdexcept>
#include <string>

namespace numrad {

// Malformed matrix document; the message carries row/column context.
class MatrixParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Accepts "a", "bi", "a+bi", "a-bi" with optional real/imaginary parts and
// decimal or exponent notation. Throws MatrixParseError.
Complex parse_complex_literal(const std::string& text);

// Document format: {"dim": n, "entries": [[e, ...], ...]} where each entry is
// a two-number [re, im] pair or a complex literal string.
ComplexMatrix parse_matrix(std::istream& in, const std::string& source_name = "<stream>");
ComplexMatrix parse_matrix(const std::string& path);

// Serializes with entries as [re, im] pairs; parse(serialize(A)) == A.
nlohmann::ordered_json serialize_matrix(const ComplexMatrix& a);
std::string matrix_to_string(const ComplexMatrix& a);

} // namespace numrad
