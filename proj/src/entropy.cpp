#include "algent/entropy.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

#include "algent/rat_polynomial.hpp"
#include "algent/roots.hpp"
#include "bigfloat_util.hpp"

namespace algent {

namespace {

// Measure of a rational polynomial together with the root locations that the
// expanding sum ranges over.  log_leading of the cleared polynomial is log s.
EntropyValue measured_entropy(const RatPolynomial& chi, double tolerance, int dimension) {
    ClearedPolynomial cleared = clear_denominators(chi);
    RootSet roots;
    MahlerResult m = mahler_measure_core(cleared.primitive, tolerance, &roots);
    EntropyValue h;
    h.value_nats = m.value_nats;
    h.log_s_term = m.log_leading;
    h.reduced_dimension = dimension;
    h.error_bound = m.error_bound;
    h.expanding_terms.reserve(m.expanding_terms.size());
    for (const auto& [idx, lg] : m.expanding_terms) {
        const ComplexBall& b = roots.roots[static_cast<size_t>(idx)];
        h.expanding_terms.emplace_back(
            std::complex<double>(b.re.convert_to<double>(), b.im.convert_to<double>()), lg);
    }
    return h;
}

}  // namespace

EntropyValue yuzvinski_entropy(const RatMatrix& a, double tolerance) {
    if (determinant(a) == 0)
        throw std::domain_error("matrix is singular: use endo_entropy, which quotients "
                                "out the hyperkernel first");
    return measured_entropy(char_poly(a), tolerance, a.n);
}

EntropyValue endo_entropy(const RatMatrix& a, double tolerance) {
    std::vector<std::vector<Rational>> kernel = hyperkernel_basis(a);
    if (kernel.empty()) return yuzvinski_entropy(a, tolerance);
    if (static_cast<int>(kernel.size()) == a.n) {
        EntropyValue h;  // everything dies under iteration, nothing expands
        return h;
    }
    return yuzvinski_entropy(quotient_matrix(a, kernel), tolerance);
}

EntropyValue multiplication_entropy(const Rational& r, int n) {
    if (n < 1) throw std::domain_error("dimension must be positive");
    EntropyValue h;
    if (r == 0) return h;  // reduced_dimension 0: the hyperkernel is everything
    h.reduced_dimension = n;
    if (r == 1 || r == -1) return h;

    const Integer& num = r.get_num();
    const Integer& den = r.get_den();  // canonical, den > 0
    double la = detail::log_abs_integer(num);
    double lb = detail::log_abs_integer(den);
    h.log_s_term = n * lb;
    h.value_nats = n * std::max(la, lb);
    if (la > lb) {
        double rd = r.get_d();
        for (int i = 0; i < n; ++i) h.expanding_terms.emplace_back(std::complex<double>(rd), la - lb);
    }
    h.error_bound = (n + 4) * 1e-15 * (1.0 + std::fabs(h.value_nats));
    return h;
}

EntropyValue algebraic_number_entropy(const IntPolynomial& minpoly, double tolerance) {
    if (minpoly.degree() < 1)
        throw std::domain_error("minimal polynomial must have positive degree");
    if (minpoly.constant() == 0)
        throw std::domain_error("minimal polynomial has zero constant term");
    return measured_entropy(monic_normalization(minpoly), tolerance, minpoly.degree());
}

AdditionReport check_addition(const RatMatrix& a, int split, double tolerance) {
    const int n = a.n;
    if (split < 1 || split >= n)
        throw std::domain_error("split must lie strictly between 0 and the dimension");
    for (int i = split; i < n; ++i)
        for (int j = 0; j < split; ++j)
            if (a.at(i, j) != 0)
                throw std::domain_error("matrix is not block upper-triangular at the split: "
                                        "entry (" + std::to_string(i + 1) + ", " +
                                        std::to_string(j + 1) + ") is nonzero");

    RatMatrix a1(split), a2(n - split);
    for (int i = 0; i < split; ++i)
        for (int j = 0; j < split; ++j) a1.at(i, j) = a.at(i, j);
    for (int i = split; i < n; ++i)
        for (int j = split; j < n; ++j) a2.at(i - split, j - split) = a.at(i, j);

    AdditionReport rep;
    double each = tolerance / 3.0;
    rep.total = yuzvinski_entropy(a, each);
    rep.sub = yuzvinski_entropy(a1, each);
    rep.quotient = yuzvinski_entropy(a2, each);
    rep.defect = std::fabs(rep.total.value_nats - rep.sub.value_nats - rep.quotient.value_nats);
    rep.combined_error = rep.total.error_bound + rep.sub.error_bound + rep.quotient.error_bound;
    return rep;
}

PowerLawReport check_power_law(const RatMatrix& a, long k, double tolerance) {
    PowerLawReport rep;
    long ak = std::labs(k);
    RatMatrix p = matrix_power(a, k);  // exact, inverts first for k < 0
    EntropyValue hp = yuzvinski_entropy(p, tolerance / 2.0);
    rep.h_power = hp.value_nats;
    rep.combined_error = hp.error_bound;
    if (k != 0) {
        EntropyValue hb = yuzvinski_entropy(a, tolerance / (2.0 * static_cast<double>(ak)));
        rep.h_scaled = static_cast<double>(ak) * hb.value_nats;
        rep.combined_error += static_cast<double>(ak) * hb.error_bound;
    }
    rep.defect = std::fabs(rep.h_power - rep.h_scaled);
    return rep;
}

}  // namespace algent
