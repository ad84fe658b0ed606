#include "doctest.h"

#include <cmath>
#include <cstdlib>

#include "algent/roots.hpp"
#include "helpers.hpp"

using namespace algent;
using test_util::ip;

namespace {

double dist_to(const ComplexBall& b, double re, double im) {
    double dr = static_cast<double>(b.re) - re;
    double di = static_cast<double>(b.im) - im;
    return std::hypot(dr, di);
}

// Count balls whose certified disc contains the given point.
int balls_containing(const RootSet& rs, double re, double im, double slack = 1e-15) {
    int hits = 0;
    for (const auto& b : rs.roots)
        if (dist_to(b, re, im) <= static_cast<double>(b.radius) + slack) ++hits;
    return hits;
}

}  // namespace

TEST_CASE("linear factors give exact roots") {
    RootSet rs = find_roots(ip({-2, 1}), 1e-20);
    REQUIRE(rs.roots.size() == 1);
    CHECK(static_cast<double>(rs.roots[0].re) == 2.0);
    CHECK(static_cast<double>(rs.roots[0].im) == 0.0);
    CHECK(static_cast<double>(rs.roots[0].radius) <= 1e-20);
}

TEST_CASE("imaginary pair certified to a deep target") {
    RootSet rs = find_roots(ip({1, 0, 1}), 1e-20);
    REQUIRE(rs.roots.size() == 2);
    for (const auto& b : rs.roots) CHECK(static_cast<double>(b.radius) <= 1e-20);
    CHECK(balls_containing(rs, 0.0, 1.0, 1e-16) == 1);
    CHECK(balls_containing(rs, 0.0, -1.0, 1e-16) == 1);
}

TEST_CASE("degree ten roots include the expected largest real root") {
    IntPolynomial f = ip({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1});
    RootSet rs = find_roots(f, 1e-12);
    REQUIRE(rs.roots.size() == 10);
    int found = 0;
    for (const auto& b : rs.roots) {
        if (std::abs(static_cast<double>(b.im)) > 1e-9) continue;
        if (std::abs(static_cast<double>(b.re) - 1.176280818259917) < 1e-9) ++found;
    }
    CHECK(found == 1);
}

TEST_CASE("repeated roots appear with multiplicity") {
    // (t - 1)^2 (t + 2)
    IntPolynomial f = ip({-1, 1}) * ip({-1, 1}) * ip({2, 1});
    RootSet rs = find_roots(f, 1e-15);
    REQUIRE(rs.roots.size() == 3);
    CHECK(balls_containing(rs, 1.0, 0.0) == 2);
    CHECK(balls_containing(rs, -2.0, 0.0) == 1);
}

TEST_CASE("results are deterministic") {
    IntPolynomial f = ip({3, -1, -4, 1, 1});
    RootSet a = find_roots(f, 1e-25);
    RootSet b = find_roots(f, 1e-25);
    REQUIRE(a.roots.size() == b.roots.size());
    CHECK(a.precision_bits == b.precision_bits);
    for (size_t i = 0; i < a.roots.size(); ++i) {
        CHECK(a.roots[i].re == b.roots[i].re);
        CHECK(a.roots[i].im == b.roots[i].im);
        CHECK(a.roots[i].radius == b.roots[i].radius);
    }
}

TEST_CASE("precision ladder start is clamped and honored") {
    int saved = ladder_start_bits();
    CHECK(saved == 128);

    set_ladder_start_bits(10);
    CHECK(ladder_start_bits() == 64);
    set_ladder_start_bits(100000);
    CHECK(ladder_start_bits() == 2048);

    set_ladder_start_bits(256);
    RootSet rs = find_roots(ip({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}), 1e-12);
    CHECK(rs.precision_bits >= 256);

    set_ladder_start_bits(saved);
    CHECK(ladder_start_bits() == 128);
}

TEST_CASE("deep targets escalate the working precision") {
    RootSet rs = find_roots(ip({-1, -1, 1}), 1e-60);
    CHECK(rs.precision_bits >= 256);
    for (const auto& b : rs.roots) CHECK(static_cast<double>(b.radius) <= 1e-60);
    CHECK(balls_containing(rs, 1.618033988749895, 0.0, 1e-15) == 1);
}

TEST_CASE("invalid inputs are rejected") {
    CHECK_THROWS_AS(find_roots(IntPolynomial(), 1e-10), std::invalid_argument);
    CHECK_THROWS_AS(find_roots(ip({5}), 1e-10), std::invalid_argument);
    CHECK_THROWS_AS(find_roots(ip({1, 1}), 0.0), std::invalid_argument);
}
