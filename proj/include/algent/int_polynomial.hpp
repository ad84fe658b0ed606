#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "algent/rational.hpp"

namespace algent {

// Dense integer polynomial, coefficients ascending (c[i] is the coefficient
// of t^i). The zero polynomial is the empty vector; otherwise the last entry
// is nonzero.
struct IntPolynomial {
    std::vector<Integer> c;

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coeffs) : c(std::move(coeffs)) { trim(); }

    // Drops trailing zeros so degree() stays honest.
    void trim();

    bool is_zero() const { return c.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const Integer& leading() const { return c.back(); }
    const Integer& constant() const { return c.front(); }
    bool is_monic() const { return !c.empty() && c.back() == 1; }

    bool operator==(const IntPolynomial& o) const { return c == o.c; }

    std::string str(const std::string& var = "t") const;
};

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a);

IntPolynomial derivative(const IntPolynomial& f);

// Splits f as content * primitive with content > 0 and the primitive part's
// leading coefficient positive, so content * primitive = +/- f exactly.
// Rejects the zero polynomial.
std::pair<Integer, IntPolynomial> content_and_primitive(const IntPolynomial& f);

// Res(f, g): determinant of the Sylvester matrix, computed exactly by
// fraction-free (Bareiss) elimination over the integers. Rejects zero input.
Integer resultant(const IntPolynomial& f, const IntPolynomial& g);

// Primitive part of f / gcd(f, f'); no repeated complex roots, leading
// coefficient positive.
IntPolynomial squarefree_part(const IntPolynomial& f);

// Squarefree decomposition f = +/- content * prod factors[i].first ^
// factors[i].second with the factors primitive, squarefree and pairwise
// coprime (Yun's algorithm run over Q, denominators cleared per factor).
std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& f);

// t^e mod m in Z[t]; m must be monic of degree >= 1. Exact (monic division
// never leaves the integers).
IntPolynomial power_t_mod(const Integer& e, const IntPolynomial& m);

// (a * b) mod m, m monic.
IntPolynomial mulmod(const IntPolynomial& a, const IntPolynomial& b, const IntPolynomial& m);

}  // namespace algent
