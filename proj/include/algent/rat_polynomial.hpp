#pragma once

#include <string>
#include <utility>
#include <vector>

#include "algent/int_polynomial.hpp"
#include "algent/rational.hpp"

namespace algent {

// Dense rational polynomial, coefficients ascending.
struct RatPolynomial {
    std::vector<Rational> c;

    RatPolynomial() = default;
    explicit RatPolynomial(std::vector<Rational> coeffs) : c(std::move(coeffs)) { trim(); }

    void trim();

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const Rational& leading() const { return c.back(); }
    bool is_monic() const { return !c.empty() && c.back() == 1; }

    bool operator==(const RatPolynomial& o) const { return c == o.c; }

    std::string str(const std::string& var = "t") const;
};

RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b);
RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b);
RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b);

RatPolynomial to_rat(const IntPolynomial& f);
// f / leading(f); rejects the zero polynomial.
RatPolynomial monic_normalization(const IntPolynomial& f);

// s * g for a monic g, with s the least common multiple of the coefficient
// denominators. s * g is automatically primitive (checked).
struct ClearedPolynomial {
    Integer s;               // least positive integer with s*g integral
    IntPolynomial primitive; // equals s * source
};

ClearedPolynomial clear_denominators(const RatPolynomial& g);

}  // namespace algent
