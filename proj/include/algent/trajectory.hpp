#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "algent/rat_matrix.hpp"
#include "algent/rational.hpp"

namespace algent {

// Group elements the oracle enumerates. Two shapes: points of Q^n and
// finitely-supported sequences over Z/m (the Bernoulli side). Both have an
// injective canonical byte encoding (see encode_element) which is what the
// sumsets actually store.
struct IntVec {
    std::vector<Rational> v;  // entries canonical lowest terms (mpq invariant)
};

struct SparseSeq {
    long modulus = 2;                            // m >= 2
    std::vector<std::pair<long, long>> entries;  // (index, value), indices strictly
                                                 // increasing, values in [1, m-1]
};

using Element = std::variant<IntVec, SparseSeq>;

bool operator==(const IntVec& a, const IntVec& b);
bool operator==(const SparseSeq& a, const SparseSeq& b);

// Injective across variants and shapes; equal group elements have equal
// encodings and conversely.
std::string encode_element(const Element& x);

Element add_elements(const Element& a, const Element& b);
Element zero_like(const Element& x);
std::string element_str(const Element& x);

struct EndoAction {
    enum class Kind { Matrix, Scalar, Shift, Product };
    Kind kind = Kind::Scalar;

    RatMatrix mat;         // Matrix
    Rational scalar;       // Scalar
    int dim = 1;           // Scalar: dimension acted on
    long modulus = 2;      // Shift
    std::vector<EndoAction> factors;  // Product: exactly two

    static EndoAction matrix(RatMatrix m);
    static EndoAction scalar_mul(Rational r, int n);
    static EndoAction shift(long m);

    std::string str() const;
};

// Product of two actions. Product elements are concatenated encodings: two
// vector-shaped factors act on the concatenation of the coordinate blocks,
// two shift-shaped factors of equal modulus act on even/odd interleaved
// indices. Mixed vector/sequence products (or unequal moduli) are rejected:
// the two shapes have no common injective concatenation here.
EndoAction product_action(const EndoAction& a, const EndoAction& b);

// The concatenated-encoding element of a product (see product_action).
Element product_element(const EndoAction& a, const EndoAction& b,
                        const Element& x, const Element& y);

// Vector dimension the action expects, or -1 for shift-shaped actions.
int action_dim(const EndoAction& a);

// Zero element of the shape the action acts on.
Element zero_element(const EndoAction& a);

// Exact image of x under the action; shapes must match.
Element apply(const EndoAction& a, const Element& x);

struct TrajectoryRecord {
    std::vector<std::uint64_t> sizes;  // |T_1|, ..., exact
    std::vector<double> c;             // log sizes, nats
    int horizon = 0;                   // requested N; sizes may stop short
    bool truncated = false;            // set when the cap stopped the run
};

// T_1 = F (0 force-inserted), T_{n+1} = T_n + phi^n(F), sizes recorded
// exactly; stops with truncated set when the next sumset would exceed cap.
TrajectoryRecord enumerate_trajectory(const EndoAction& action,
                                      const std::vector<Element>& f,
                                      int horizon, std::uint64_t cap);

struct GrowthEstimate {
    double fekete_upper = 0.0;  // min over recorded n of c_n / n: a rigorous
                                // upper bound for the per-F growth rate when
                                // the record is complete
    double tail_slope = 0.0;    // c_N - c_{N-1}: the faster-converging point
                                // estimate
    int horizon = 0;            // number of recorded entries
    bool truncated = false;
};

GrowthEstimate growth_estimate(const TrajectoryRecord& record);

}  // namespace algent
