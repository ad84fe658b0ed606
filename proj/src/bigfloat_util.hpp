#pragma once

#include <mpfr.h>

#include "algent/rational.hpp"
#include "algent/roots.hpp"

namespace algent::detail {

inline int digits10_for_bits(int bits) { return static_cast<int>(bits * 0.30103) + 3; }

// thread-local working precision for subsequently constructed BigFloats
inline void set_work_precision(int bits) {
    BigFloat::default_precision(digits10_for_bits(bits));
}

inline BigFloat bf_from_int(const Integer& z) {
    BigFloat x;
    mpfr_set_z(x.backend().data(), z.get_mpz_t(), MPFR_RNDN);
    return x;
}

inline bool bf_finite(const BigFloat& x) { return mpfr_number_p(x.backend().data()) != 0; }

// log|z| of a nonzero integer, accurately (mpfr, then rounded to double)
inline double log_abs_integer(const Integer& z) {
    set_work_precision(64);
    BigFloat x = bf_from_int(abs(z));
    return log(x).convert_to<double>();
}

}  // namespace algent::detail
