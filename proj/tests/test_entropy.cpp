#include "doctest.h"

#include <cmath>
#include <random>
#include <string>

#include "algent/entropy.hpp"
#include "helpers.hpp"

using namespace algent;
using test_util::ip;
using test_util::q;
using test_util::rmat;

TEST_CASE("integer multiplication on Q has entropy log k") {
    for (int k = 2; k <= 10; ++k) {
        RatMatrix a(1);
        a.at(0, 0) = k;
        EntropyValue h = yuzvinski_entropy(a, 1e-13);
        CHECK(std::abs(h.value_nats - std::log(double(k))) <= 1e-12);
    }
}

TEST_CASE("rational scalar matrices match the closed form") {
    // h((a/b) I_n) = n log max(|a|, b).
    RatMatrix a = rmat(2, {"3/2", "0", "0", "3/2"});
    EntropyValue h = yuzvinski_entropy(a, 1e-13);
    CHECK(std::abs(h.value_nats - 2.0 * std::log(3.0)) <= 1e-12);
    CHECK(h.log_s_term == doctest::Approx(std::log(4.0)).epsilon(1e-12));
}

TEST_CASE("shears have zero entropy") {
    for (int k = 1; k <= 10; ++k) {
        RatMatrix a = RatMatrix::identity(2);
        a.at(0, 1) = k;
        EntropyValue h = yuzvinski_entropy(a, 1e-13);
        CHECK(std::abs(h.value_nats) <= 1e-12);
        CHECK(h.expanding_terms.empty());
    }
}

TEST_CASE("the Fibonacci matrix grows like the golden ratio") {
    EntropyValue h = yuzvinski_entropy(rmat(2, {"0", "1", "1", "1"}), 1e-12);
    CHECK(std::abs(h.value_nats - 0.4812118250596035) <= 1e-11);
    REQUIRE(h.expanding_terms.size() == 1);
    CHECK(h.expanding_terms[0].first.real() == doctest::Approx(1.618033988749895).epsilon(1e-12));
}

TEST_CASE("singular input is routed to endo_entropy") {
    RatMatrix a = rmat(2, {"1", "2", "2", "4"});
    CHECK_THROWS_WITH_AS(yuzvinski_entropy(a, 1e-9),
                         "matrix is singular: use endo_entropy, which quotients "
                         "out the hyperkernel first",
                         std::domain_error);
}

TEST_CASE("endo_entropy quotients out the hyperkernel") {
    EntropyValue nil = endo_entropy(rmat(2, {"0", "1", "0", "0"}), 1e-12);
    CHECK(nil.value_nats == 0.0);
    CHECK(nil.reduced_dimension == 0);

    EntropyValue mixed = endo_entropy(rmat(2, {"2", "0", "0", "0"}), 1e-12);
    CHECK(std::abs(mixed.value_nats - std::log(2.0)) <= 1e-12);
    CHECK(mixed.reduced_dimension == 1);

    // Injective input passes straight through.
    RatMatrix fib = rmat(2, {"0", "1", "1", "1"});
    CHECK(endo_entropy(fib, 1e-12).value_nats == yuzvinski_entropy(fib, 1e-12).value_nats);
}

TEST_CASE("multiplication entropy closed forms") {
    CHECK(multiplication_entropy(q("2"), 1).value_nats == doctest::Approx(std::log(2.0)));
    CHECK(multiplication_entropy(q("3/2"), 2).value_nats ==
          doctest::Approx(2.0 * std::log(3.0)));
    CHECK(multiplication_entropy(q("-7/4"), 3).value_nats ==
          doctest::Approx(3.0 * std::log(7.0)));
    CHECK(multiplication_entropy(q("1/2"), 1).value_nats == doctest::Approx(std::log(2.0)));
    CHECK(multiplication_entropy(q("0"), 4).value_nats == 0.0);
    CHECK(multiplication_entropy(q("1"), 4).value_nats == 0.0);
    CHECK(multiplication_entropy(q("-1"), 5).value_nats == 0.0);
    CHECK_THROWS_AS(multiplication_entropy(q("2"), 0), std::domain_error);
}

TEST_CASE("multiplication entropy agrees with the matrix path") {
    std::mt19937 rng(67);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    std::uniform_int_distribution<int> dim(1, 4);
    for (int i = 0; i < 25; ++i) {
        Rational r(num(rng), den(rng));
        r.canonicalize();
        int n = dim(rng);
        EntropyValue closed = multiplication_entropy(r, n);
        RatMatrix a(n);
        for (int j = 0; j < n; ++j) a.at(j, j) = r;
        EntropyValue measured = endo_entropy(a, 1e-11);
        CHECK(std::abs(closed.value_nats - measured.value_nats) <=
              closed.error_bound + measured.error_bound);
    }
}

TEST_CASE("algebraic number entropy is the measure of the minimal polynomial") {
    EntropyValue golden = algebraic_number_entropy(ip({-1, -1, 1}), 1e-12);
    CHECK(std::abs(golden.value_nats - 0.4812118250596035) <= 1e-11);

    // 2t^2 - 3t + 1 normalizes to roots 1 and 1/2: only log 2 survives.
    EntropyValue half = algebraic_number_entropy(ip({1, -3, 2}), 1e-12);
    CHECK(std::abs(half.value_nats - std::log(2.0)) <= 1e-11);

    CHECK_THROWS_WITH_AS(algebraic_number_entropy(ip({0, 1, 1}), 1e-9),
                         "minimal polynomial has zero constant term", std::domain_error);
    CHECK_THROWS_AS(algebraic_number_entropy(ip({7}), 1e-9), std::domain_error);
}

TEST_CASE("addition check splits block triangular matrices") {
    RatMatrix a = rmat(2, {"2", "0", "0", "3"});
    AdditionReport r = check_addition(a, 1, 1e-10);
    CHECK(std::abs(r.total.value_nats - std::log(6.0)) <= 1e-9);
    CHECK(std::abs(r.sub.value_nats - std::log(2.0)) <= 1e-9);
    CHECK(std::abs(r.quotient.value_nats - std::log(3.0)) <= 1e-9);
    CHECK(r.defect <= r.combined_error);

    RatMatrix b = rmat(2, {"2", "7", "0", "3"});
    AdditionReport rb = check_addition(b, 1, 1e-10);
    CHECK(rb.defect <= rb.combined_error);

    RatMatrix bad = rmat(2, {"2", "0", "1", "3"});
    CHECK_THROWS_WITH_AS(check_addition(bad, 1, 1e-9),
                         "matrix is not block upper-triangular at the split: "
                         "entry (2, 1) is nonzero",
                         std::domain_error);
    CHECK_THROWS_AS(check_addition(a, 2, 1e-9), std::domain_error);
}

TEST_CASE("power law check") {
    RatMatrix fib = rmat(2, {"0", "1", "1", "1"});
    for (long k = -3; k <= 5; ++k) {
        PowerLawReport r = check_power_law(fib, k, 1e-10);
        CHECK(r.defect <= r.combined_error);
        if (k == 0) CHECK(r.h_scaled == 0.0);
    }
}

TEST_CASE("entropy is invariant under conjugation") {
    std::mt19937 rng(71);
    std::uniform_int_distribution<int> dim(1, 3);
    for (int i = 0; i < 10; ++i) {
        int n = dim(rng);
        RatMatrix a = test_util::random_invertible(rng, n, 4);
        RatMatrix p = test_util::random_invertible(rng, n, 4);
        EntropyValue ha = yuzvinski_entropy(a, 1e-10);
        EntropyValue hc = yuzvinski_entropy(p * a * inverse(p), 1e-10);
        CHECK(std::abs(ha.value_nats - hc.value_nats) <= ha.error_bound + hc.error_bound);
    }
}
