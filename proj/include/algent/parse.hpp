#pragma once

#include <functional>
#include <string>
#include <vector>

#include "algent/rat_matrix.hpp"
#include "algent/rat_polynomial.hpp"
#include "algent/trajectory.hpp"

namespace algent {

// Input-format errors; what() carries the position (column or line).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One line of whitespace-separated coefficients, ascending degree, each an
// integer or p/q. Trailing zero coefficients are trimmed; a zero polynomial
// is rejected. Errors carry the 1-based column of the offending token.
RatPolynomial parse_polynomial(const std::string& text);

// Same grammar restricted to integer tokens.
IntPolynomial parse_int_polynomial(const std::string& text);

// One row per line, whitespace-separated rational entries, square overall.
// Errors name the offending line.
RatMatrix parse_matrix(const std::string& text);

// Action grammar:
//   scalar(R, DIM) | shift(M) | matrix(ROWS) | matrix(@PATH) | product(A, B)
// where ROWS are ';'-separated matrix rows and @PATH defers to read_file.
EndoAction parse_action(const std::string& text,
                        const std::function<std::string(const std::string&)>& read_file);

// ';'-separated elements matching the action's shape:
//   vector shapes: "(a, b, ...)" or a bare rational when the dimension is 1,
//                  "0", and "box:K" for the full cube {-K..K}^dim
//   shift shapes:  "0", "eI" (unit at index I), "eI:V"
std::vector<Element> parse_element_set(const std::string& text, const EndoAction& action);

std::string format_polynomial(const IntPolynomial& f);
std::string format_polynomial(const RatPolynomial& f);
std::string format_matrix(const RatMatrix& a);

}  // namespace algent
