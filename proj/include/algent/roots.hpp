#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <vector>

#include "algent/int_polynomial.hpp"

namespace algent {

using BigFloat = boost::multiprecision::mpfr_float;

// Disc in the complex plane certified to contain exactly one root (counted
// with the multiplicity the ball is repeated with in a RootSet).
struct ComplexBall {
    BigFloat re, im;
    BigFloat radius;  // >= 0, finite
};

struct RootSet {
    std::vector<ComplexBall> roots;  // size == degree of the source polynomial
    int precision_bits = 0;          // working precision that certified the radii
};

// Raised when the precision escalation cap is reached before every radius
// meets the target; carries the best radii achieved (clamped into double).
struct RootFindingError : std::runtime_error {
    std::vector<double> best_radii;
    explicit RootFindingError(const std::string& what, std::vector<double> radii)
        : std::runtime_error(what), best_radii(std::move(radii)) {}
};

// All complex roots of f with per-root error radius <= target_error,
// multiplicities resolved exactly beforehand (squarefree decomposition), the
// rest by simultaneous Aberth-Ehrlich iteration with certified inclusion
// radii. Precision escalates hardware double -> 128 -> ... -> 2048 bits until
// the radii fit; the double rung is skipped when it cannot certify.
// Deterministic in (f, target_error) and the configured ladder start.
RootSet find_roots(const IntPolynomial& f, double target_error);

// First mpfr rung of the escalation ladder, clamped to [64, 2048]; later
// rungs double from there. The hardware-double prestage runs only while the
// start is <= 128. Process-global; default 128.
void set_ladder_start_bits(int bits);
int ladder_start_bits();

}  // namespace algent
