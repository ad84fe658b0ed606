#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "algent/mahler.hpp"
#include "algent/rat_matrix.hpp"
#include "algent/rational.hpp"

namespace algent {

struct EntropyValue {
    double value_nats = 0.0;  // >= 0 up to error_bound, always finite
    double log_s_term = 0.0;  // log of the lcm of char-poly denominators
    // (root, log|root|) over the expanding eigenvalues.
    std::vector<std::pair<std::complex<double>, double>> expanding_terms;
    int reduced_dimension = 0;  // dimension left after the hyperkernel quotient
    double error_bound = 0.0;
};

// log s + sum of log|eigenvalue| over eigenvalues outside the unit circle,
// with s the lcm of the denominators of the monic characteristic polynomial;
// equivalently the Mahler measure of char_poly(A). A must be invertible
// (exact determinant check); singular input is routed to endo_entropy.
EntropyValue yuzvinski_entropy(const RatMatrix& a, double tolerance);

// Entropy of an arbitrary square A: quotient by the hyperkernel ker(A^n)
// (the restriction there contributes 0), then yuzvinski_entropy on the
// induced invertible matrix. Zero-dimensional quotient -> 0.
EntropyValue endo_entropy(const RatMatrix& a, double tolerance);

// Closed form for r * identity on Q^n: n * log max(|a|, b) for r = a/b in
// lowest terms; 0 for r in {0, 1, -1}. No root finding involved.
EntropyValue multiplication_entropy(const Rational& r, int n);

// Entropy of an algebraic number given its minimal polynomial: the Mahler
// measure of the monic normalization. Irreducibility is the caller's
// responsibility; a zero constant term is rejected (the companion matrix
// would be singular).
EntropyValue algebraic_number_entropy(const IntPolynomial& minpoly, double tolerance);

struct AdditionReport {
    EntropyValue total, sub, quotient;
    double defect = 0.0;          // |total - sub - quotient|
    double combined_error = 0.0;  // sum of the three error bounds
};

// Checks h(A) = h(A1) + h(A2) for A block upper-triangular at the given
// split (top-left k x k block A1). The zero block below the split is
// verified exactly; a nonzero entry there is reported by position.
AdditionReport check_addition(const RatMatrix& a, int split, double tolerance);

struct PowerLawReport {
    double h_power = 0.0;    // h(A^k)
    double h_scaled = 0.0;   // |k| * h(A)
    double defect = 0.0;
    double combined_error = 0.0;
};

// Checks h(A^k) = |k| h(A); A^k is computed exactly (rational inverse for
// negative k) before any root finding. k = 0 compares h(identity) with 0.
PowerLawReport check_power_law(const RatMatrix& a, long k, double tolerance);

}  // namespace algent
