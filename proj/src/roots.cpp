#include "algent/roots.hpp"

#include <mpfr.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

#include "bigfloat_util.hpp"

namespace algent {
namespace {

using detail::bf_finite;
using detail::bf_from_int;
using detail::set_work_precision;

constexpr int kLadderCap = 2048;
constexpr double kPi = 3.14159265358979323846;

std::atomic<int> g_ladder_start{128};

std::vector<int> ladder_rungs() {
    std::vector<int> rungs;
    int b = ladder_start_bits();
    for (;;) {
        rungs.push_back(b);
        if (b >= kLadderCap) break;
        b = std::min(kLadderCap, 2 * b);
    }
    return rungs;
}

// ---- complex arithmetic over mpfr reals ----

struct BC {
    BigFloat re, im;
};

BC operator+(const BC& a, const BC& b) { return {a.re + b.re, a.im + b.im}; }
BC operator-(const BC& a, const BC& b) { return {a.re - b.re, a.im - b.im}; }
BC operator*(const BC& a, const BC& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
BC operator/(const BC& a, const BC& b) {
    BigFloat d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

// ---- field policies: one Aberth core, two precisions ----

struct DoubleField {
    using C = std::complex<double>;
    using R = double;
    int bits = 53;
    R eps() const { return std::ldexp(1.0, -52); }
    static R coeff(const Integer& z) { return z.get_d(); }
    static C make(const R& re, const R& im) { return {re, im}; }
    static R abs_c(const C& z) { return std::abs(z); }
    static R real(const C& z) { return z.real(); }
    static R imag(const C& z) { return z.imag(); }
    static bool bad(const R& x) { return !std::isfinite(x); }
    static double lo(const R& x) { return x; }
    static BigFloat big(const R& x) { return BigFloat(x); }
};

struct MpfrField {
    using C = BC;
    using R = BigFloat;
    int bits = 128;
    R eps() const { return ldexp(BigFloat(1), 1 - bits); }
    static R coeff(const Integer& z) { return bf_from_int(z); }
    static C make(const R& re, const R& im) { return {re, im}; }
    static R abs_c(const C& z) { return sqrt(z.re * z.re + z.im * z.im); }
    static R real(const C& z) { return z.re; }
    static R imag(const C& z) { return z.im; }
    static bool bad(const R& x) { return !bf_finite(x); }
    static double lo(const R& x) { return x.convert_to<double>(); }
    static BigFloat big(const R& x) { return x; }
};

// approximations carried across stages (index order is stable)
struct WarmStart {
    std::vector<double> re, im;
    bool have = false;
};

struct StageResult {
    std::vector<ComplexBall> balls;
    std::vector<double> radii;  // best certified radius per root, for error reports
    bool ok = false;
};

template <class C>
void horner_both(const std::vector<C>& a, const C& z, C& p, C& dp) {
    p = a.back();
    dp = C{};
    for (size_t j = a.size() - 1; j-- > 0;) {
        dp = dp * z + p;
        p = p * z + a[j];
    }
}

template <class R>
R horner_abs(const std::vector<R>& a_abs, const R& az) {
    R s = a_abs.back();
    for (size_t j = a_abs.size() - 1; j-- > 0;) s = s * az + a_abs[j];
    return s;
}

// One precision stage: Aberth-Ehrlich sweeps until the Weierstrass discs
//   r_i = d (|p(z_i)| + E_i) / (|a_d| prod_{j != i} |z_i - z_j|)
// are all within target and pairwise disjoint (then disc i contains exactly
// one root). E_i covers coefficient conversion and Horner roundoff; the
// (1 +- 10 d u) factors absorb the rounding of the radius computation
// itself.
template <class F>
StageResult run_stage(const F& field, const std::vector<Integer>& coeffs, double target,
                      WarmStart& warm) {
    using C = typename F::C;
    using R = typename F::R;
    const int d = static_cast<int>(coeffs.size()) - 1;
    const R u = field.eps();
    const R one(1), zero(0);

    std::vector<C> a(coeffs.size());
    std::vector<R> a_abs(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) {
        R x = F::coeff(coeffs[i]);
        a[i] = F::make(x, zero);
        a_abs[i] = x < 0 ? R(-x) : x;
    }

    std::vector<C> z(d);
    if (warm.have) {
        for (int i = 0; i < d; ++i) z[i] = F::make(R(warm.re[i]), R(warm.im[i]));
    } else {
        R m(0);
        for (int i = 0; i < d; ++i) {
            R q = a_abs[i] / a_abs[d];
            if (q > m) m = q;
        }
        double radius = 1.0 + F::lo(m);
        if (!std::isfinite(radius)) radius = 1e200;
        for (int i = 0; i < d; ++i) {
            double theta = 2.0 * kPi * (i + 0.3537) / d;
            z[i] = F::make(R(radius * std::cos(theta)), R(radius * std::sin(theta)));
        }
    }

    StageResult out;
    out.radii.assign(d, std::numeric_limits<double>::infinity());
    std::vector<R> rad(d, zero);
    const int max_sweeps = warm.have ? 80 : 160;
    double best_max = std::numeric_limits<double>::infinity();
    int stall = 0;

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool trouble = false;
        for (int i = 0; i < d && !trouble; ++i) {
            C p, dp;
            horner_both(a, z[i], p, dp);
            if (F::abs_c(p) == 0) continue;
            C w = F::abs_c(dp) == 0 ? F::make(zero, zero) : p / dp;
            C s = F::make(zero, zero);
            for (int j = 0; j < d; ++j) {
                if (j == i) continue;
                C diff = z[i] - z[j];
                if (F::abs_c(diff) == 0) {
                    diff = F::make(u * (one + F::abs_c(z[i])), zero);
                    z[i] = z[i] + diff;
                }
                s = s + F::make(one, zero) / diff;
            }
            C denom = F::make(one, zero) - w * s;
            C step = F::abs_c(denom) == 0 ? w : w / denom;
            if (F::bad(F::abs_c(step)))
                trouble = true;
            else
                z[i] = z[i] - step;
        }
        if (trouble) break;

        R max_rad(0);
        bool all_ok = true;
        for (int i = 0; i < d; ++i) {
            C p, dp;
            horner_both(a, z[i], p, dp);
            R az = F::abs_c(z[i]);
            R e_eval = R(6 * (d + 1)) * u * horner_abs(a_abs, az);
            R num = R(d) * (F::abs_c(p) + e_eval) * (one + R(10 * d) * u);
            R den = a_abs[d];
            for (int j = 0; j < d; ++j) {
                if (j == i) continue;
                den = den * F::abs_c(z[i] - z[j]);
            }
            den = den * (one - R(10 * d) * u);
            if (F::bad(den) || den <= 0 || F::bad(num)) {
                all_ok = false;
                rad[i] = R(-1);
                continue;
            }
            rad[i] = num / den;
            if (F::bad(rad[i])) {
                all_ok = false;
                rad[i] = R(-1);
                continue;
            }
            if (rad[i] > max_rad) max_rad = rad[i];
            double lo = F::lo(rad[i]);
            out.radii[i] = std::min(out.radii[i], std::isfinite(lo) ? lo : 1e300);
            if (!(rad[i] <= R(target))) all_ok = false;
        }
        if (all_ok) {
            bool disjoint = true;
            for (int i = 0; i < d && disjoint; ++i)
                for (int j = i + 1; j < d; ++j)
                    if (!(F::abs_c(z[i] - z[j]) > rad[i] + rad[j])) {
                        disjoint = false;
                        break;
                    }
            if (disjoint) {
                out.ok = true;
                out.balls.resize(d);
                for (int i = 0; i < d; ++i) {
                    out.balls[i].re = F::big(F::real(z[i]));
                    out.balls[i].im = F::big(F::imag(z[i]));
                    out.balls[i].radius = F::big(rad[i]);
                }
                return out;
            }
        }
        double cur = F::bad(max_rad) ? std::numeric_limits<double>::infinity() : F::lo(max_rad);
        if (cur < best_max * 0.7) {
            best_max = cur;
            stall = 0;
        } else if (++stall > 8 && sweep > 12) {
            break;
        }
    }

    warm.have = true;
    warm.re.resize(d);
    warm.im.resize(d);
    for (int i = 0; i < d; ++i) {
        warm.re[i] = F::lo(F::real(z[i]));
        warm.im[i] = F::lo(F::imag(z[i]));
    }
    return out;
}

// exact representation of the rational root of a degree-1 factor
ComplexBall linear_root_ball(const Integer& c0, const Integer& c1, double target, int& bits_used) {
    Rational root(-c0, c1);
    root.canonicalize();
    for (int bits : ladder_rungs()) {
        set_work_precision(bits);
        BigFloat center;
        int inexact = mpfr_set_q(center.backend().data(), root.get_mpq_t(), MPFR_RNDN);
        ComplexBall ball;
        ball.re = center;
        ball.im = BigFloat(0);
        if (inexact == 0) {
            ball.radius = BigFloat(0);
            bits_used = std::max(bits_used, bits);
            return ball;
        }
        // one ulp at this precision
        BigFloat r = ldexp(BigFloat(1), mpfr_get_exp(center.backend().data()) - bits + 1);
        if (r <= BigFloat(target)) {
            ball.radius = r;
            bits_used = std::max(bits_used, bits);
            return ball;
        }
    }
    throw RootFindingError("root finding did not converge within the precision cap",
                           {std::numeric_limits<double>::infinity()});
}

bool double_stage_usable(const std::vector<Integer>& coeffs, double target) {
    if (target < 1e-13) return false;
    double max_log10 = 0, lead_log10 = 0;
    const int d = static_cast<int>(coeffs.size()) - 1;
    for (int i = 0; i <= d; ++i) {
        if (coeffs[i] == 0) continue;
        signed long exp2;
        double mant = mpz_get_d_2exp(&exp2, coeffs[i].get_mpz_t());
        double l = std::log10(std::fabs(mant)) + exp2 * 0.30103;
        if (l > 250) return false;
        if (l > max_log10) max_log10 = l;
        if (i == d) lead_log10 = l;
    }
    double r0_log10 = std::log10(2.0 + std::pow(10.0, max_log10 - lead_log10));
    return d * r0_log10 + max_log10 < 280;
}

// certified balls for one squarefree factor, precision escalating until the
// target radius fits
std::vector<ComplexBall> solve_squarefree(const IntPolynomial& p, double target,
                                          int& bits_used) {
    const int d = p.degree();
    if (d == 1) return {linear_root_ball(p.c[0], p.c[1], target, bits_used)};

    WarmStart warm;
    std::vector<double> best(d, std::numeric_limits<double>::infinity());
    if (ladder_start_bits() <= 128 && double_stage_usable(p.c, target)) {
        set_work_precision(64);  // precision the double-stage balls are stored at
        DoubleField f;
        StageResult r = run_stage(f, p.c, target, warm);
        for (int i = 0; i < d; ++i) best[i] = std::min(best[i], r.radii[i]);
        if (r.ok) {
            bits_used = std::max(bits_used, f.bits);
            return r.balls;
        }
    }
    for (int bits : ladder_rungs()) {
        set_work_precision(bits);
        MpfrField f;
        f.bits = bits;
        StageResult r = run_stage(f, p.c, target, warm);
        for (int i = 0; i < d; ++i) best[i] = std::min(best[i], r.radii[i]);
        if (r.ok) {
            bits_used = std::max(bits_used, bits);
            return r.balls;
        }
    }
    throw RootFindingError("root finding did not converge within the precision cap", best);
}

bool ball_less(const ComplexBall& a, const ComplexBall& b) {
    int c = mpfr_cmp(a.re.backend().data(), b.re.backend().data());
    if (c != 0) return c < 0;
    return mpfr_cmp(a.im.backend().data(), b.im.backend().data()) < 0;
}

}  // namespace

void set_ladder_start_bits(int bits) {
    g_ladder_start.store(std::clamp(bits, 64, kLadderCap), std::memory_order_relaxed);
}

int ladder_start_bits() { return g_ladder_start.load(std::memory_order_relaxed); }

RootSet find_roots(const IntPolynomial& f, double target_error) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial");
    if (f.degree() < 1) throw std::invalid_argument("degree must be >= 1");
    if (!(target_error > 0)) throw std::invalid_argument("target_error must be positive");

    RootSet out;
    int bits_used = 53;

    // peel t^v: exact zero roots
    size_t v = 0;
    while (v < f.c.size() && f.c[v] == 0) ++v;
    set_work_precision(64);
    for (size_t i = 0; i < v; ++i)
        out.roots.push_back({BigFloat(0), BigFloat(0), BigFloat(0)});

    IntPolynomial g(std::vector<Integer>(f.c.begin() + v, f.c.end()));
    if (g.degree() >= 1) {
        // multiplicities are resolved exactly; Aberth only ever sees simple roots
        for (const auto& [factor, mult] : squarefree_decomposition(g)) {
            std::vector<ComplexBall> balls = solve_squarefree(factor, target_error, bits_used);
            std::sort(balls.begin(), balls.end(), ball_less);
            for (const auto& b : balls)
                for (int m = 0; m < mult; ++m) out.roots.push_back(b);
        }
    }
    std::stable_sort(out.roots.begin(), out.roots.end(), ball_less);
    out.precision_bits = bits_used;
    if (static_cast<int>(out.roots.size()) != f.degree())
        throw std::logic_error("root count mismatch");
    return out;
}

}  // namespace algent
