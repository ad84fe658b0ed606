#include "algent/rat_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace algent {

RatMatrix RatMatrix::identity(int dim) {
    RatMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

std::string RatMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j) os << " ";
            os << to_string(at(i, j));
        }
        if (i + 1 < n) os << "\n";
    }
    return os.str();
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.n != b.n) throw std::invalid_argument("dimension mismatch");
    RatMatrix r(a.n);
    for (int i = 0; i < a.n; ++i)
        for (int k = 0; k < a.n; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < a.n; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

RatVector operator*(const RatMatrix& a, const RatVector& v) {
    if (static_cast<int>(v.size()) != a.n) throw std::invalid_argument("dimension mismatch");
    RatVector r(a.n);
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j)
            if (a.at(i, j) != 0) r[i] += a.at(i, j) * v[j];
    return r;
}

Rational determinant(const RatMatrix& a) {
    RatMatrix m = a;
    Rational det = 1;
    for (int k = 0; k < m.n; ++k) {
        int pivot = k;
        while (pivot < m.n && m.at(pivot, k) == 0) ++pivot;
        if (pivot == m.n) return Rational(0);
        if (pivot != k) {
            for (int j = 0; j < m.n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            det = -det;
        }
        det *= m.at(k, k);
        for (int i = k + 1; i < m.n; ++i) {
            if (m.at(i, k) == 0) continue;
            Rational factor = m.at(i, k) / m.at(k, k);
            for (int j = k; j < m.n; ++j) m.at(i, j) -= factor * m.at(k, j);
        }
    }
    return det;
}

RatMatrix inverse(const RatMatrix& a) {
    RatMatrix m = a;
    RatMatrix inv = RatMatrix::identity(a.n);
    for (int k = 0; k < m.n; ++k) {
        int pivot = k;
        while (pivot < m.n && m.at(pivot, k) == 0) ++pivot;
        if (pivot == m.n) throw std::domain_error("singular matrix");
        if (pivot != k)
            for (int j = 0; j < m.n; ++j) {
                std::swap(m.at(k, j), m.at(pivot, j));
                std::swap(inv.at(k, j), inv.at(pivot, j));
            }
        Rational lead = m.at(k, k);
        for (int j = 0; j < m.n; ++j) {
            m.at(k, j) /= lead;
            inv.at(k, j) /= lead;
        }
        for (int i = 0; i < m.n; ++i) {
            if (i == k || m.at(i, k) == 0) continue;
            Rational factor = m.at(i, k);
            for (int j = 0; j < m.n; ++j) {
                m.at(i, j) -= factor * m.at(k, j);
                inv.at(i, j) -= factor * inv.at(k, j);
            }
        }
    }
    return inv;
}

RatMatrix matrix_power(const RatMatrix& a, long k) {
    RatMatrix base = k < 0 ? inverse(a) : a;
    unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    RatMatrix r = RatMatrix::identity(a.n);
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

// Faddeev-LeVerrier: M_0 = I, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I with
// c_{n-k} = -tr(A M_{k-1} + ...)/k. Exact over Q, no pivoting questions.
RatPolynomial char_poly(const RatMatrix& a) {
    const int n = a.n;
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    RatMatrix m = RatMatrix::identity(n);
    for (int k = 1; k <= n; ++k) {
        m = a * m;
        Rational tr = 0;
        for (int i = 0; i < n; ++i) tr += m.at(i, i);
        c[n - k] = -tr / Rational(k);
        for (int i = 0; i < n; ++i) m.at(i, i) += c[n - k];
    }
    return RatPolynomial(std::move(c));
}

RatMatrix companion_matrix(const RatPolynomial& f) {
    const int k = f.degree();
    if (k < 1) throw std::invalid_argument("constant polynomial has no companion matrix");
    RatMatrix m(k);
    for (int i = 1; i < k; ++i) m.at(i, i - 1) = 1;
    for (int i = 0; i < k; ++i) m.at(i, k - 1) = -f.c[i] / f.leading();
    return m;
}

RatMatrix companion_matrix(const IntPolynomial& f) { return companion_matrix(to_rat(f)); }

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RatMatrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.n && row < m.n; ++col) {
        int pivot = row;
        while (pivot < m.n && m.at(pivot, col) == 0) ++pivot;
        if (pivot == m.n) continue;
        if (pivot != row)
            for (int j = 0; j < m.n; ++j) std::swap(m.at(row, j), m.at(pivot, j));
        Rational lead = m.at(row, col);
        for (int j = 0; j < m.n; ++j) m.at(row, j) /= lead;
        for (int i = 0; i < m.n; ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Rational factor = m.at(i, col);
            for (int j = 0; j < m.n; ++j) m.at(i, j) -= factor * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::vector<RatVector> hyperkernel_basis(const RatMatrix& a) {
    // ker A^n is stable: it already equals the union of all ker A^m
    RatMatrix power = matrix_power(a, a.n);
    std::vector<int> pivots = rref(power);
    std::vector<bool> is_pivot(a.n, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<RatVector> basis;
    for (int col = 0; col < a.n; ++col) {
        if (is_pivot[col]) continue;
        RatVector v(a.n);
        v[col] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -power.at(static_cast<int>(r), col);
        basis.push_back(std::move(v));
    }
    return basis;
}

RatMatrix quotient_matrix(const RatMatrix& a, const std::vector<RatVector>& k) {
    const int n = a.n;
    const int dim_k = static_cast<int>(k.size());
    if (dim_k == n) throw std::domain_error("quotient is zero-dimensional");
    if (dim_k == 0) return a;
    // complete K to a basis with unit vectors, greedily by index
    RatMatrix p(n);
    for (int j = 0; j < dim_k; ++j) {
        if (static_cast<int>(k[j].size()) != n) throw std::invalid_argument("dimension mismatch");
        for (int i = 0; i < n; ++i) p.at(i, j) = k[j][i];
    }
    int next = dim_k;
    for (int e = 0; e < n && next < n; ++e) {
        p.at(e, next) = 1;
        RatMatrix probe = p;  // columns beyond `next` are still zero
        if (static_cast<int>(rref(probe).size()) == next + 1)
            ++next;
        else
            p.at(e, next) = 0;
    }
    if (next < n) throw std::invalid_argument("kernel basis is linearly dependent");
    RatMatrix conj = inverse(p) * (a * p);
    // invariance of span K shows up as an exactly zero lower-left block
    for (int i = dim_k; i < n; ++i)
        for (int j = 0; j < dim_k; ++j)
            if (conj.at(i, j) != 0)
                throw std::invalid_argument("basis does not span an invariant subspace");
    RatMatrix q(n - dim_k);
    for (int i = 0; i < q.n; ++i)
        for (int j = 0; j < q.n; ++j) q.at(i, j) = conj.at(dim_k + i, dim_k + j);
    return q;
}

}  // namespace algent
