#pragma once

#include <cassert>
#include <initializer_list>
#include <random>
#include <vector>

#include "algent/int_polynomial.hpp"
#include "algent/rat_matrix.hpp"
#include "algent/rat_polynomial.hpp"

namespace test_util {

inline algent::Rational q(const char* s) {
    algent::Rational r(s);
    r.canonicalize();
    return r;
}

// Ascending coefficients, c[i] multiplies t^i.
inline algent::IntPolynomial ip(std::initializer_list<long> asc) {
    std::vector<algent::Integer> c;
    for (long v : asc) c.emplace_back(v);
    return algent::IntPolynomial(std::move(c));
}

inline algent::RatPolynomial rp(std::initializer_list<const char*> asc) {
    std::vector<algent::Rational> c;
    for (const char* s : asc) c.push_back(q(s));
    return algent::RatPolynomial(std::move(c));
}

// Row-major entries.
inline algent::RatMatrix rmat(int n, std::initializer_list<const char*> entries) {
    assert(static_cast<int>(entries.size()) == n * n);
    algent::RatMatrix m(n);
    size_t i = 0;
    for (const char* s : entries) m.e[i++] = q(s);
    return m;
}

inline algent::IntPolynomial random_int_poly(std::mt19937& rng, int degree, int height) {
    std::uniform_int_distribution<int> coeff(-height, height);
    std::vector<algent::Integer> c(degree + 1);
    for (int i = 0; i < degree; ++i) c[i] = coeff(rng);
    int lead = 0;
    while (lead == 0) lead = coeff(rng);
    c[degree] = lead;
    return algent::IntPolynomial(std::move(c));
}

inline algent::RatMatrix random_rat_matrix(std::mt19937& rng, int n, int bound = 5) {
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, bound);
    algent::RatMatrix a(n);
    for (auto& x : a.e) {
        x = algent::Rational(num(rng), den(rng));
        x.canonicalize();
    }
    return a;
}

inline algent::RatMatrix random_invertible(std::mt19937& rng, int n, int bound = 5) {
    for (;;) {
        algent::RatMatrix a = random_rat_matrix(rng, n, bound);
        if (determinant(a) != 0) return a;
    }
}

}  // namespace test_util
