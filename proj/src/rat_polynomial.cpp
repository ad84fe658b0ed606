#include "algent/rat_polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace algent {

void RatPolynomial::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

std::string RatPolynomial::str(const std::string& var) const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& a = c[i];
        if (a == 0) continue;
        Rational mag = abs(a);
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        if (i == 0 || mag != 1) os << to_string(mag);
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b) {
    std::vector<Rational> r(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.c.size()) r[i] += a.c[i];
        if (i < b.c.size()) r[i] += b.c[i];
    }
    return RatPolynomial(std::move(r));
}

RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b) {
    std::vector<Rational> r(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.c.size()) r[i] += a.c[i];
        if (i < b.c.size()) r[i] -= b.c[i];
    }
    return RatPolynomial(std::move(r));
}

RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return RatPolynomial();
    std::vector<Rational> r(a.c.size() + b.c.size() - 1);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    }
    return RatPolynomial(std::move(r));
}

RatPolynomial to_rat(const IntPolynomial& f) {
    std::vector<Rational> r(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) r[i] = Rational(f.c[i]);
    return RatPolynomial(std::move(r));
}

RatPolynomial monic_normalization(const IntPolynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial");
    std::vector<Rational> r(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) {
        r[i] = Rational(f.c[i], f.leading());
        r[i].canonicalize();  // the two-argument mpq constructor does not reduce
    }
    return RatPolynomial(std::move(r));
}

ClearedPolynomial clear_denominators(const RatPolynomial& g) {
    if (!g.is_monic()) throw std::invalid_argument("requires monic polynomial");
    Integer s = 1;
    for (const auto& x : g.c) mpz_lcm(s.get_mpz_t(), s.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<Integer> z(g.c.size());
    for (size_t i = 0; i < g.c.size(); ++i) {
        Rational scaled = g.c[i] * Rational(s);
        z[i] = scaled.get_num();
    }
    ClearedPolynomial out{s, IntPolynomial(std::move(z))};
    // monic input forces the cleared polynomial primitive; keep that promise loud
    Integer content = content_and_primitive(out.primitive).first;
    if (content != 1) throw std::logic_error("cleared polynomial not primitive");
    return out;
}

}  // namespace algent
