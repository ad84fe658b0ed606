#pragma once

#include <string>
#include <vector>

#include "algent/rat_polynomial.hpp"
#include "algent/rational.hpp"

namespace algent {

// Square matrix over Q, row-major.
struct RatMatrix {
    int n = 0;
    std::vector<Rational> e;  // n*n entries

    RatMatrix() = default;
    explicit RatMatrix(int dim) : n(dim), e(static_cast<size_t>(dim) * dim) {}

    Rational& at(int i, int j) { return e[static_cast<size_t>(i) * n + j]; }
    const Rational& at(int i, int j) const { return e[static_cast<size_t>(i) * n + j]; }

    static RatMatrix identity(int dim);

    bool operator==(const RatMatrix& o) const { return n == o.n && e == o.e; }

    std::string str() const;
};

using RatVector = std::vector<Rational>;

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatVector operator*(const RatMatrix& a, const RatVector& v);

Rational determinant(const RatMatrix& a);
RatMatrix inverse(const RatMatrix& a);  // throws on singular input
// a^k for k >= 0; negative k inverts first (throws on singular input).
RatMatrix matrix_power(const RatMatrix& a, long k);

// Monic characteristic polynomial det(tI - A), degree n, exact
// (Faddeev-LeVerrier recursion over Q).
RatPolynomial char_poly(const RatMatrix& a);

// k x k companion matrix of f (degree k >= 1): ones on the subdiagonal, last
// column -a_i / a_k. Its char_poly is the monic normalization of f.
RatMatrix companion_matrix(const RatPolynomial& f);
RatMatrix companion_matrix(const IntPolynomial& f);

// Basis of ker(A^n) = union of ker(A^m); empty when A is injective. Basis
// vectors are read off the reduced row echelon form of A^n, so the result is
// deterministic.
std::vector<RatVector> hyperkernel_basis(const RatMatrix& a);

// Matrix of the map induced by A on Q^n / span(K), written in a completion of
// K to a basis (unit vectors chosen greedily by index). K must span an
// A-invariant proper subspace.
RatMatrix quotient_matrix(const RatMatrix& a, const std::vector<RatVector>& k);

}  // namespace algent
