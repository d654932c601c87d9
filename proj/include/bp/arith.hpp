#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bp/errors.hpp"

namespace bp {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
inline BigInt big_lcm(const BigInt& a, const BigInt& b) { return boost::multiprecision::lcm(a, b); }

/// gcd and lcm of a non-empty list of positive integers.
std::pair<BigInt, BigInt> gcd_lcm(const std::vector<BigInt>& values);

/// Euler totient by trial factorization; fine for arguments up to ~1e14.
std::uint64_t euler_phi(std::uint64_t m);

/// Prime factors (distinct) of n by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Distinct prime factors of a BigInt, trial division up to ~1e7.
/// Throws scale_error if a cofactor > 1e14 remains composite-or-unknown.
std::vector<BigInt> prime_factors_big(const BigInt& n);

/// Deterministic Miller-Rabin, valid for all n < 3.3e24.
bool is_prime_u64(std::uint64_t n);

/// Divisors of n, unsorted magnitude <= ~1e14.
std::vector<BigInt> divisors_big(const BigInt& n);

/// phi for BigInt (needs factorization; same scale limits as prime_factors_big).
BigInt euler_phi_big(const BigInt& n);

/// m-th Bernoulli number in the topologist convention: B_1 = 1/6, B_2 = 1/30,
/// B_3 = 1/42, ... (|B_{2m}| of the zeta convention). Cached, thread-safe.
BigRat bernoulli(unsigned m);

} // namespace bp
