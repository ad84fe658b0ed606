#pragma once

#include <gmpxx.h>

#include <string>

namespace algent {

// Arbitrary-precision scalars. mpq_class keeps the canonical form we rely on
// everywhere: denominator > 0, gcd(|num|, den) = 1.
using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& z) { return z.get_str(); }

// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline int sign(const Integer& z) { return sgn(z); }
inline int sign(const Rational& r) { return sgn(r); }

}  // namespace algent
