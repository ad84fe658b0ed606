#include "algent/mahler.hpp"

#include <cmath>
#include <stdexcept>

#include "bigfloat_util.hpp"

namespace algent {

using detail::bf_from_int;
using detail::log_abs_integer;
using detail::set_work_precision;

namespace {

MahlerResult constant_measure(const Integer& a0) {
    MahlerResult r;
    r.log_leading = a0 == 1 || a0 == -1 ? 0.0 : log_abs_integer(a0);
    r.value_nats = r.log_leading;
    r.error_bound = 4e-16 * (1.0 + std::fabs(r.value_nats));
    r.precision_bits = 64;
    return r;
}

}  // namespace

MahlerResult mahler_measure_core(const IntPolynomial& f, double tolerance, RootSet* roots_out) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial");
    if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
    if (f.degree() == 0) {
        if (roots_out) *roots_out = RootSet{{}, 64};
        return constant_measure(f.constant());
    }

    const int d = f.degree();
    double target = tolerance / (4.0 * (d + 1));
    for (int attempt = 0;; ++attempt) {
        RootSet rs = find_roots(f, target);
        const int q = std::max(64, rs.precision_bits);
        set_work_precision(q);

        MahlerResult r;
        r.precision_bits = rs.precision_bits;
        BigFloat value = f.leading() == 1 || f.leading() == -1
                             ? BigFloat(0)
                             : log(abs(bf_from_int(f.leading())));
        r.log_leading = value.convert_to<double>();
        double err = 0.0;
        for (size_t i = 0; i < rs.roots.size(); ++i) {
            const ComplexBall& b = rs.roots[i];
            BigFloat mod = sqrt(b.re * b.re + b.im * b.im);
            double m_lo = mod.convert_to<double>();
            double rad = b.radius.convert_to<double>();
            // per-root propagation: |d log max(1,|z|)| <= radius / (max(1,|z|) - radius)
            double denom = std::max(1.0, m_lo) - rad;
            err += denom > 0 ? rad / denom : rad;
            if (mod > 1) {
                BigFloat lg = log(mod);
                value += lg;
                r.expanding_terms.emplace_back(static_cast<int>(i), lg.convert_to<double>());
            }
        }
        r.value_nats = value.convert_to<double>();
        // slack for the mpfr log/sum rounding at q bits plus the final double round
        err += (d + 4) * std::ldexp(1.0, 1 - q) *
                   (1.0 + std::fabs(r.value_nats) + std::fabs(r.log_leading)) +
               4e-16 * (1.0 + std::fabs(r.value_nats));
        r.error_bound = err;
        if (r.error_bound <= tolerance) {
            if (roots_out) *roots_out = std::move(rs);
            return r;
        }
        if (attempt >= 3 || target <= 1e-280)
            throw RootFindingError("could not certify the measure within the requested tolerance",
                                   {r.error_bound});
        target /= 16.0;  // certified radii came back above the tolerance budget
    }
}

MahlerResult mahler_measure(const IntPolynomial& f, double tolerance) {
    return mahler_measure_core(f, tolerance, nullptr);
}

MahlerResult mahler_measure_rat(const RatPolynomial& g, double tolerance) {
    // m(g) := m(s g); the cleared polynomial's leading coefficient is s, so
    // the integer routine's log_leading is exactly the log s term
    ClearedPolynomial cleared = clear_denominators(g);
    return mahler_measure(cleared.primitive, tolerance);
}

MahlerResult mahler_measure_any(const RatPolynomial& f, double tolerance) {
    bool integral = true;
    for (const Rational& x : f.c) integral = integral && x.get_den() == 1;
    if (!integral) return mahler_measure_rat(f, tolerance);
    std::vector<Integer> c;
    c.reserve(f.c.size());
    for (const Rational& x : f.c) c.push_back(x.get_num());
    return mahler_measure(IntPolynomial(std::move(c)), tolerance);
}

Integer lehmer_delta(const IntPolynomial& f, long n) {
    if (f.is_zero() || !f.is_monic())
        throw std::invalid_argument("Delta_n defined for monic polynomials");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (f.degree() == 0) return 1;
    // Res(f, t^n - 1) = prod (a_i^n - 1) = Res(f, (t^n - 1) mod f) for monic f
    IntPolynomial r = power_t_mod(Integer(n), f) - IntPolynomial({Integer(1)});
    if (r.is_zero()) return 0;
    if (r.degree() == 0) {
        Integer v;
        mpz_pow_ui(v.get_mpz_t(), r.constant().get_mpz_t(), static_cast<unsigned long>(f.degree()));
        return abs(v);
    }
    return abs(resultant(f, r));
}

std::vector<ProfileEntry> lehmer_limit_profile(const IntPolynomial& f, long n_max) {
    if (n_max < 1) throw std::invalid_argument("n must be >= 1");
    std::vector<ProfileEntry> out;
    out.reserve(static_cast<size_t>(n_max));
    for (long n = 1; n <= n_max; ++n) {
        Integer delta = lehmer_delta(f, n);
        ProfileEntry e;
        e.n = n;
        if (delta == 0) {
            e.defined = false;
        } else {
            e.value = log_abs_integer(delta) / static_cast<double>(n);
        }
        out.push_back(e);
    }
    return out;
}

namespace {

// lcm of all m with euler_phi(m) <= d; every such m is <= 2 d^2
Integer root_of_unity_order_lcm(int d) {
    Integer l = 1;
    const long bound = 2L * d * d;
    for (long m = 1; m <= bound; ++m) {
        long phi = 1, rest = m;
        for (long p = 2; p * p <= rest; ++p) {
            if (rest % p) continue;
            phi *= p - 1;
            rest /= p;
            while (rest % p == 0) {
                phi *= p;
                rest /= p;
            }
        }
        if (rest > 1) phi *= rest - 1;
        if (phi <= d) mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(m));
    }
    return l;
}

}  // namespace

bool is_cyclotomic(const IntPolynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial");
    IntPolynomial p = content_and_primitive(f).second;
    if (p.degree() == 0) return true;  // no roots at all
    if (p.leading() != 1) return false;
    if (p.constant() == 0) return false;  // 0 is a root and no root of unity
    IntPolynomial g = squarefree_part(p);  // monic: p is monic
    Integer l = root_of_unity_order_lcm(g.degree());
    // all roots distinct roots of unity <=> g | t^L - 1
    IntPolynomial r = power_t_mod(l, g);
    if (!(r.degree() == 0 && r.constant() == 1)) return false;
    // multiplicity side: p | (t^L - 1)^(deg p); cheap now that every factor
    // of p is known cyclotomic, residues stay small
    IntPolynomial h = power_t_mod(l, p) - IntPolynomial({Integer(1)});
    if (h.is_zero()) return true;
    IntPolynomial acc({Integer(1)});
    int e = p.degree();
    while (e) {
        if (e & 1) acc = mulmod(acc, h, p);
        if (acc.is_zero()) return true;
        e >>= 1;
        if (e) h = mulmod(h, h, p);
    }
    return false;  // acc = h^(deg p) mod p stayed nonzero
}

}  // namespace algent
