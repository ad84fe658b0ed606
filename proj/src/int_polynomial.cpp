#include "algent/int_polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace algent {

void IntPolynomial::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

std::string IntPolynomial::str(const std::string& var) const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Integer& a = c[i];
        if (a == 0) continue;
        Integer mag = abs(a);
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        if (i == 0 || mag != 1) os << mag.get_str();
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Integer> r(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.c.size()) r[i] += a.c[i];
        if (i < b.c.size()) r[i] += b.c[i];
    }
    return IntPolynomial(std::move(r));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Integer> r(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.c.size()) r[i] += a.c[i];
        if (i < b.c.size()) r[i] -= b.c[i];
    }
    return IntPolynomial(std::move(r));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<Integer> r(a.c.size() + b.c.size() - 1);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    }
    return IntPolynomial(std::move(r));
}

IntPolynomial operator-(const IntPolynomial& a) {
    std::vector<Integer> r = a.c;
    for (auto& x : r) x = -x;
    return IntPolynomial(std::move(r));
}

IntPolynomial derivative(const IntPolynomial& f) {
    if (f.degree() < 1) return IntPolynomial();
    std::vector<Integer> r(f.c.size() - 1);
    for (size_t i = 1; i < f.c.size(); ++i) r[i - 1] = f.c[i] * static_cast<long>(i);
    return IntPolynomial(std::move(r));
}

std::pair<Integer, IntPolynomial> content_and_primitive(const IntPolynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial");
    Integer g = 0;
    for (const auto& a : f.c) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        if (g == 1) break;
    }
    std::vector<Integer> p(f.c.size());
    // leading coefficient of the primitive part is normalized positive
    bool flip = f.leading() < 0;
    for (size_t i = 0; i < f.c.size(); ++i) {
        p[i] = f.c[i] / g;
        if (flip) p[i] = -p[i];
    }
    return {g, IntPolynomial(std::move(p))};
}

namespace {

// Fraction-free elimination; exact divisions by the previous pivot keep
// every intermediate entry an integer (a minor of the input).
Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    Integer prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace

Integer resultant(const IntPolynomial& f, const IntPolynomial& g) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("zero polynomial");
    const int m = f.degree(), n = g.degree();
    const size_t dim = static_cast<size_t>(m + n);
    std::vector<std::vector<Integer>> s(dim, std::vector<Integer>(dim));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s[i][i + j] = f.c[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s[n + i][i + j] = g.c[n - j];
    return bareiss_determinant(std::move(s));
}

namespace {

using QPoly = std::vector<Rational>;  // ascending, trailing zeros trimmed

void q_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly q_derivative(const QPoly& f) {
    if (f.size() < 2) return {};
    QPoly r(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) r[i - 1] = f[i] * Rational(static_cast<long>(i));
    return r;
}

QPoly q_sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    q_trim(r);
    return r;
}

// in-place remainder; returns quotient
QPoly q_divrem(QPoly& r, const QPoly& d) {
    QPoly q;
    if (r.size() < d.size()) return q;
    q.assign(r.size() - d.size() + 1, Rational(0));
    const Rational& lead = d.back();
    for (size_t i = r.size(); i-- >= d.size();) {
        if (r[i] == 0) continue;
        Rational t = r[i] / lead;
        q[i - d.size() + 1] = t;
        for (size_t j = 0; j < d.size(); ++j) r[i - d.size() + 1 + j] -= t * d[j];
        if (i + 1 == d.size()) break;
    }
    q_trim(r);
    q_trim(q);
    return q;
}

QPoly q_monic(QPoly p) {
    q_trim(p);
    if (p.empty()) return p;
    Rational l = p.back();
    for (auto& x : p) x /= l;
    return p;
}

QPoly q_gcd(QPoly a, QPoly b) {
    q_trim(a);
    q_trim(b);
    while (!b.empty()) {
        q_divrem(a, b);
        std::swap(a, b);
    }
    return q_monic(a);
}

QPoly q_div(QPoly a, const QPoly& b) {
    QPoly q = q_divrem(a, b);
    return q;  // remainder known zero at every call site
}

IntPolynomial q_to_primitive(const QPoly& p) {
    Integer l = 1;
    for (const auto& x : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<Integer> z(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        Rational scaled = p[i] * Rational(l);
        z[i] = scaled.get_num();
    }
    return content_and_primitive(IntPolynomial(std::move(z))).second;
}

}  // namespace

std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial");
    std::vector<std::pair<IntPolynomial, int>> out;
    if (f.degree() < 1) return out;
    QPoly p(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) p[i] = Rational(f.c[i]);
    p = q_monic(p);
    QPoly dp = q_derivative(p);
    QPoly g = q_gcd(p, dp);
    if (g.size() <= 1) {
        out.emplace_back(content_and_primitive(f).second, 1);
        return out;
    }
    // Yun: peel factors of multiplicity 1, 2, ... from c against d
    QPoly c = q_div(p, g);
    QPoly d = q_sub(q_div(dp, g), q_derivative(c));
    int i = 1;
    while (c.size() > 1) {
        QPoly a = q_gcd(c, d);
        if (a.size() > 1) out.emplace_back(q_to_primitive(a), i);
        c = q_div(c, a);
        d = q_sub(q_div(d, a), q_derivative(c));
        ++i;
    }
    return out;
}

IntPolynomial squarefree_part(const IntPolynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial");
    if (f.degree() < 1) return IntPolynomial({Integer(1)});
    IntPolynomial prod({Integer(1)});
    for (const auto& [factor, mult] : squarefree_decomposition(f)) prod = prod * factor;
    return content_and_primitive(prod).second;
}

namespace {

// reduce r mod m in place, m monic
void reduce_monic(IntPolynomial& r, const IntPolynomial& m) {
    const int dm = m.degree();
    while (r.degree() >= dm) {
        const Integer lead = r.leading();
        const int shift = r.degree() - dm;
        for (int j = 0; j <= dm; ++j) r.c[shift + j] -= lead * m.c[j];
        r.trim();
    }
}

}  // namespace

IntPolynomial mulmod(const IntPolynomial& a, const IntPolynomial& b, const IntPolynomial& m) {
    IntPolynomial r = a * b;
    reduce_monic(r, m);
    return r;
}

IntPolynomial power_t_mod(const Integer& e, const IntPolynomial& m) {
    if (!m.is_monic() || m.degree() < 1)
        throw std::invalid_argument("modulus must be monic of degree >= 1");
    IntPolynomial r({Integer(1)});
    if (e == 0) {
        reduce_monic(r, m);
        return r;
    }
    IntPolynomial t({Integer(0), Integer(1)});
    reduce_monic(t, m);
    const mp_bitcnt_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (mp_bitcnt_t i = bits; i-- > 0;) {
        r = mulmod(r, r, m);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mulmod(r, t, m);
    }
    return r;
}

}  // namespace algent
