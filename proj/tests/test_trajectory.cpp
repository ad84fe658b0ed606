#include "doctest.h"

#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "algent/trajectory.hpp"
#include "helpers.hpp"

using namespace algent;
using test_util::q;
using test_util::rmat;

namespace {

Element vec1(const char* x) { return IntVec{{q(x)}}; }

Element vec2(const char* x, const char* y) { return IntVec{{q(x), q(y)}}; }

Element seq(long modulus, std::vector<std::pair<long, long>> entries) {
    return SparseSeq{modulus, std::move(entries)};
}

std::vector<std::uint64_t> sizes(const EndoAction& a, const std::vector<Element>& f,
                                 int horizon, std::uint64_t cap = 5000000) {
    return enumerate_trajectory(a, f, horizon, cap).sizes;
}

}  // namespace

TEST_CASE("doubling map on Q") {
    auto s = sizes(EndoAction::scalar_mul(q("2"), 1), {vec1("0"), vec1("1")}, 5);
    CHECK(s == std::vector<std::uint64_t>{2, 4, 8, 16, 32});
}

TEST_CASE("multiplication by 3/2 on Q") {
    auto s = sizes(EndoAction::scalar_mul(q("3/2"), 1), {vec1("0"), vec1("1"), vec1("2")}, 4);
    CHECK(s == std::vector<std::uint64_t>{3, 9, 27, 81});
}

TEST_CASE("identity grows linearly") {
    auto s = sizes(EndoAction::scalar_mul(q("1"), 1), {vec1("0"), vec1("1")}, 5);
    CHECK(s == std::vector<std::uint64_t>{2, 3, 4, 5, 6});
}

TEST_CASE("Bernoulli shift doubles") {
    auto s = sizes(EndoAction::shift(2), {seq(2, {}), seq(2, {{0, 1}})}, 4);
    CHECK(s == std::vector<std::uint64_t>{2, 4, 8, 16});
}

TEST_CASE("zero map stabilizes immediately") {
    auto s = sizes(EndoAction::scalar_mul(q("0"), 1), {vec1("0"), vec1("1")}, 4);
    CHECK(s == std::vector<std::uint64_t>{2, 2, 2, 2});
}

TEST_CASE("zero is inserted into the base set") {
    auto s = sizes(EndoAction::scalar_mul(q("2"), 1), {vec1("1")}, 3);
    CHECK(s == std::vector<std::uint64_t>{2, 4, 8});
}

TEST_CASE("duplicate base elements are merged") {
    auto s = sizes(EndoAction::scalar_mul(q("2"), 1),
                   {vec1("0"), vec1("1"), vec1("2/2"), vec1("1")}, 3);
    CHECK(s == std::vector<std::uint64_t>{2, 4, 8});
}

TEST_CASE("matrix actions take exact rational steps") {
    EndoAction fib = EndoAction::matrix(rmat(2, {"0", "1", "1", "1"}));
    auto rec = enumerate_trajectory(fib, {vec2("0", "0"), vec2("1", "0"), vec2("0", "1")},
                                    10, 5000000);
    REQUIRE(rec.sizes.size() == 10);
    CHECK(rec.sizes[0] == 3);
    // Subadditivity |T_{n+m}| <= |T_n| |T_m|, exactly in integers.
    for (size_t n = 1; n <= rec.sizes.size(); ++n)
        for (size_t m = 1; n + m <= rec.sizes.size(); ++m)
            CHECK(rec.sizes[n + m - 1] <= rec.sizes[n - 1] * rec.sizes[m - 1]);
    // Monotone: 0 stays in every layer.
    for (size_t i = 1; i < rec.sizes.size(); ++i)
        CHECK(rec.sizes[i - 1] <= rec.sizes[i]);
}

TEST_CASE("product sizes multiply coordinatewise") {
    EndoAction a = EndoAction::scalar_mul(q("2"), 1);
    EndoAction b = EndoAction::scalar_mul(q("3"), 1);
    EndoAction p = product_action(a, b);

    std::vector<Element> fa{vec1("0"), vec1("1")};
    std::vector<Element> fb{vec1("0"), vec1("1"), vec1("2")};
    std::vector<Element> fp;
    for (const Element& x : fa)
        for (const Element& y : fb) fp.push_back(product_element(a, b, x, y));

    auto sa = sizes(a, fa, 6);
    auto sb = sizes(b, fb, 6);
    auto sp = sizes(p, fp, 6);
    for (int n = 0; n < 6; ++n) CHECK(sp[n] == sa[n] * sb[n]);
}

TEST_CASE("product of shifts quadruples") {
    EndoAction s2 = EndoAction::shift(2);
    EndoAction p = product_action(s2, s2);
    std::vector<Element> f;
    for (const Element& x : {seq(2, {}), seq(2, {{0, 1}})})
        for (const Element& y : {seq(2, {}), seq(2, {{0, 1}})})
            f.push_back(product_element(s2, s2, x, y));
    auto s = sizes(p, f, 5);
    CHECK(s == std::vector<std::uint64_t>{4, 16, 64, 256, 1024});
}

TEST_CASE("mixed products are rejected") {
    CHECK_THROWS_WITH_AS(product_action(EndoAction::scalar_mul(q("2"), 1), EndoAction::shift(2)),
                         "cannot form the product of a vector-shaped and a "
                         "sequence-shaped action: their elements have no common "
                         "injective encoding",
                         std::domain_error);
    CHECK_THROWS_WITH_AS(product_action(EndoAction::shift(2), EndoAction::shift(3)),
                         "product of shift actions requires equal moduli", std::domain_error);
}

TEST_CASE("element arithmetic stays canonical") {
    Element half = vec1("1/2");
    Element one = add_elements(half, half);
    CHECK(element_str(one) == element_str(vec1("1")));
    CHECK(encode_element(one) == encode_element(vec1("1")));

    Element ss = add_elements(seq(2, {{0, 1}}), seq(2, {{0, 1}}));
    CHECK(encode_element(ss) == encode_element(seq(2, {})));

    Element mixed_mod = add_elements(seq(3, {{1, 2}}), seq(3, {{1, 2}}));
    CHECK(encode_element(mixed_mod) == encode_element(seq(3, {{1, 1}})));

    CHECK_THROWS_AS(add_elements(vec1("1"), vec2("1", "0")), std::domain_error);
    CHECK_THROWS_AS(add_elements(vec1("1"), seq(2, {})), std::domain_error);
    CHECK_THROWS_AS(add_elements(seq(2, {}), seq(3, {})), std::domain_error);
}

TEST_CASE("encodings separate close calls") {
    std::vector<Element> distinct{
        vec1("0"),      vec1("1"),     vec1("-1"),    vec1("1/2"),
        vec1("-1/2"),   vec1("2"),     vec1("257"),   vec1("-257"),
        vec2("1", "22"), vec2("12", "2"), vec2("0", "0"),
        seq(2, {}),     seq(2, {{0, 1}}), seq(2, {{1, 1}}),
        seq(3, {}),     seq(3, {{0, 1}}), seq(3, {{0, 2}}),
        seq(2, {{0, 1}, {1, 1}}), seq(2, {{256, 1}}),
    };
    std::set<std::string> encodings;
    for (const Element& x : distinct) encodings.insert(encode_element(x));
    CHECK(encodings.size() == distinct.size());
}

TEST_CASE("the cap truncates cleanly") {
    EndoAction two = EndoAction::scalar_mul(q("2"), 1);
    TrajectoryRecord rec = enumerate_trajectory(two, {vec1("0"), vec1("1")}, 10, 20);
    CHECK(rec.truncated);
    CHECK(rec.sizes == std::vector<std::uint64_t>{2, 4, 8, 16});
    CHECK(rec.horizon == 10);

    GrowthEstimate g = growth_estimate(rec);
    CHECK(g.truncated);
    CHECK(g.horizon == 4);

    CHECK_THROWS_WITH_AS(enumerate_trajectory(two, {vec1("0"), vec1("1")}, 5, 1),
                         "cap is smaller than the base set", std::domain_error);
}

TEST_CASE("invalid inputs are rejected") {
    EndoAction two = EndoAction::scalar_mul(q("2"), 1);
    CHECK_THROWS_WITH_AS(enumerate_trajectory(two, {}, 5, 100),
                         "the base set must be non-empty", std::domain_error);
    CHECK_THROWS_AS(enumerate_trajectory(two, {vec1("1")}, 0, 100), std::domain_error);
    // Wrong shape for the action.
    CHECK_THROWS_AS(enumerate_trajectory(two, {seq(2, {})}, 5, 100), std::domain_error);
    CHECK_THROWS_AS(algent::apply(two, seq(2, {{0, 1}})), std::domain_error);
    // Non-canonical sequence entries.
    CHECK_THROWS_WITH_AS(
        enumerate_trajectory(EndoAction::shift(2), {seq(2, {{3, 1}, {1, 1}})}, 3, 100),
        "sequence element is not canonical: need strictly "
        "increasing indices and values in [1, modulus-1]",
        std::domain_error);
    CHECK_THROWS_AS(EndoAction::shift(1), std::domain_error);
    CHECK_THROWS_AS(EndoAction::scalar_mul(q("2"), 0), std::domain_error);
}

TEST_CASE("growth estimates summarize the record") {
    EndoAction two = EndoAction::scalar_mul(q("2"), 1);
    GrowthEstimate g = growth_estimate(enumerate_trajectory(two, {vec1("0"), vec1("1")}, 8, 5000000));
    CHECK(g.fekete_upper == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(g.tail_slope == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(g.horizon == 8);
    CHECK(!g.truncated);

    EndoAction id = EndoAction::scalar_mul(q("1"), 1);
    GrowthEstimate lin = growth_estimate(enumerate_trajectory(id, {vec1("0"), vec1("1")}, 5, 5000000));
    CHECK(lin.fekete_upper == doctest::Approx(std::log(6.0) / 5.0).epsilon(1e-12));
    CHECK(lin.tail_slope == doctest::Approx(std::log(6.0 / 5.0)).epsilon(1e-12));

    TrajectoryRecord one;
    one.sizes = {2};
    one.c = {std::log(2.0)};
    CHECK_THROWS_WITH_AS(growth_estimate(one),
                         "tail slope requires at least two recorded sizes", std::domain_error);
}
