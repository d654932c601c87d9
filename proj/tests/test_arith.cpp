#include <doctest.h>

#include "bp/arith.hpp"

using namespace bp;

TEST_CASE("gcd_lcm") {
    auto [g, l] = gcd_lcm({BigInt(6), BigInt(10), BigInt(15)});
    CHECK(g == 1);
    CHECK(l == 30);
    auto [g2, l2] = gcd_lcm({BigInt(4), BigInt(6)});
    CHECK(g2 == 2);
    CHECK(l2 == 12);
    CHECK_THROWS_AS(gcd_lcm({}), usage_error);
    CHECK_THROWS_AS(gcd_lcm({BigInt(0)}), usage_error);
}

TEST_CASE("euler_phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(2) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(97) == 96);
    CHECK(euler_phi_big(BigInt(360)) == 96);
}

TEST_CASE("prime tests") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(2147483647ull));
    CHECK(is_prime_u64(1000000007ull));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(561));        // Carmichael
    CHECK_FALSE(is_prime_u64(3215031751ull));  // strong pseudoprime to 2,3,5,7
    auto ps = prime_factors(360);
    CHECK(ps == std::vector<std::uint64_t>{2, 3, 5});
}

TEST_CASE("divisors") {
    auto ds = divisors_big(BigInt(12));
    CHECK(ds == std::vector<BigInt>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("bernoulli, topologist convention") {
    CHECK(bernoulli(1) == BigRat(1, 6));
    CHECK(bernoulli(2) == BigRat(1, 30));
    CHECK(bernoulli(3) == BigRat(1, 42));
    CHECK(bernoulli(4) == BigRat(1, 30));
    CHECK(bernoulli(5) == BigRat(5, 66));
    CHECK(bernoulli(6) == BigRat(691, 2730));
    CHECK(bernoulli(7) == BigRat(7, 6));
}
