#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "algent/int_polynomial.hpp"
#include "algent/rat_polynomial.hpp"
#include "algent/roots.hpp"

namespace algent {

struct MahlerResult {
    double value_nats = 0.0;   // >= 0 up to error_bound
    double log_leading = 0.0;  // log|a_k| (log s for the monic rational form)
    // (root index, log|root|) for the roots outside the unit circle, indices
    // into the RootSet that produced the value. Roots within error of the
    // circle may legitimately appear with a ~0 term or not at all.
    std::vector<std::pair<int, double>> expanding_terms;
    double error_bound = 0.0;
    int precision_bits = 0;
};

// log|a_k| + sum over all roots of log max(1, |root|), within tolerance.
// The max(1, .) form is continuous in the roots, so no side-of-circle
// decision is ever made. Rejects the zero polynomial.
MahlerResult mahler_measure(const IntPolynomial& f, double tolerance);

// Measure of a monic rational polynomial: measure of s*g with s the lcm of
// the coefficient denominators; log_leading reports log s.
MahlerResult mahler_measure_rat(const RatPolynomial& g, double tolerance);

// Dispatch for parsed input: integer coefficients of any leading
// coefficient go through mahler_measure, genuinely rational input must be
// monic and goes through mahler_measure_rat.
MahlerResult mahler_measure_any(const RatPolynomial& f, double tolerance);

// mahler_measure variant handing back the certified root set it used (the
// entropy layer reports expanding eigenvalues from it).
MahlerResult mahler_measure_core(const IntPolynomial& f, double tolerance, RootSet* roots_out);

// |Res(f, t^n - 1)| = prod |1 - root^n| for monic f, exactly. Computed as
// |Res(f, (t^n mod f) - 1)| so n in the thousands stays cheap.
Integer lehmer_delta(const IntPolynomial& f, long n);

struct ProfileEntry {
    long n = 0;
    double value = 0.0;  // log Delta_n / n, nats
    bool defined = true; // false when Delta_n = 0 (f shares a root with t^n - 1)
};

// (n, log Delta_n / n) for n = 1..N; exact integers inside, logs in double.
std::vector<ProfileEntry> lehmer_limit_profile(const IntPolynomial& f, long n_max);

// True exactly when every complex root of f is a root of unity. Exact
// integer arithmetic throughout: f is reduced to its primitive part p, the
// leading coefficient must be +-1, the squarefree part g must divide
// t^L - 1 for L = lcm of all m with phi(m) <= deg g (all such m are
// <= 2 deg(g)^2), and p must divide (t^L - 1)^(deg p).
bool is_cyclotomic(const IntPolynomial& f);

struct SearchFinding {
    IntPolynomial poly;
    MahlerResult measure;
};

// Every monic f with deg <= max_degree, coefficients in [-height, height],
// nonzero constant term and 0 < measure < threshold_nats. Cyclotomic
// candidates are skipped via the exact test. Enumeration is lexicographic
// and partitioned into contiguous chunks across workers; the merged result
// is sorted by (value, degree, coefficients) and is byte-identical for every
// worker count.
std::vector<SearchFinding> search_small_measures(int max_degree, int height,
                                                 double threshold_nats, int workers);

}  // namespace algent
