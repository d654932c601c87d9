#include <doctest.h>

#include <algorithm>
#include <random>

#include "bp/link.hpp"

using namespace bp;

TEST_CASE("exponent vector canonicalizes") {
    ExponentVector a({7, 2, 3});
    CHECK(a.exponents() == std::vector<std::int64_t>{2, 3, 7});
    CHECK(a.dimension() == 3);
    CHECK(a.count() == 3);
    CHECK(ExponentVector({3, 2, 7}) == a);
    CHECK_THROWS_AS(ExponentVector({5}), invalid_input_error);
    CHECK_THROWS_AS(ExponentVector({0, 2}), invalid_input_error);
}

TEST_CASE("weights and degree") {
    auto h = weights_degree(ExponentVector({2, 3, 7}));
    CHECK(h.degree == 42);
    CHECK(h.weights == std::vector<BigInt>{21, 14, 6});
    auto r = monodromy_ratios(h);
    CHECK(r[0] == 2);
    CHECK(r[2] == 7);
}

TEST_CASE("milnor number") {
    CHECK(milnor_number(ExponentVector({2, 3, 5})) == 8);
    CHECK(milnor_number(ExponentVector({1, 4, 9})) == 0);
    CHECK(milnor_number(weights_degree(ExponentVector({2, 3, 5}))) == 8);
    // rational ratios that still multiply to an integer: 9 * 4 * 7/3 * 1
    WeightedHypersurface h{{BigInt(1), BigInt(2), BigInt(3), BigInt(5)}, BigInt(10)};
    CHECK(milnor_number(h) == 84);
}

TEST_CASE("fano index") {
    WeightedHypersurface p1{{BigInt(6), BigInt(10), BigInt(15)}, BigInt(30)};
    CHECK(fano_index(p1) == 1);
    CHECK(fano_positivity(p1) == Positivity::Positive);
    WeightedHypersurface neg{{BigInt(6), BigInt(22), BigInt(33)}, BigInt(66)};
    CHECK(fano_index(neg) == -5);
    CHECK(fano_positivity(neg) == Positivity::Negative);
    WeightedHypersurface conic{{BigInt(1), BigInt(1)}, BigInt(2)};
    CHECK(fano_index(conic) == 0);
    CHECK(fano_positivity(conic) == Positivity::Null);
}

TEST_CASE("fano iff reciprocal sum exceeds 1, BP data") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::int64_t> t;
        int n = 3 + static_cast<int>(rng() % 4);
        for (int i = 0; i < n; ++i) t.push_back(2 + static_cast<std::int64_t>(rng() % 12));
        ExponentVector a(t);
        BigRat s = 0;
        for (auto v : t) s += BigRat(1, v);
        CHECK((fano_index(weights_degree(a)) > 0) == (s > 1));
    }
}

TEST_CASE("curve genus") {
    CHECK(curve_genus(6, 10, 15, 30) == 0);
    CHECK(curve_genus(6, 22, 33, 66) == 0);
    CHECK(curve_genus(1, 1, 1, 3) == 1);
    CHECK(curve_genus(1, 1, 1, 5) == 6);  // (d-1)(d-2)/2
    for (std::int64_t k = 1; k <= 5; ++k) {
        BigInt q = 6 * k - 1;
        CHECK(curve_genus(6, 2 * q, 3 * q, 6 * q) == 0);
    }
}

TEST_CASE("permutation invariance under shuffles") {
    std::mt19937 rng(11);
    std::vector<std::int64_t> t{2, 3, 4, 6, 9};
    BigInt mu = milnor_number(ExponentVector(t));
    for (int i = 0; i < 20; ++i) {
        std::shuffle(t.begin(), t.end(), rng);
        ExponentVector a(t);
        CHECK(milnor_number(a) == mu);
        CHECK(weights_degree(a).degree == 36);
    }
}
