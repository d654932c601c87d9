#pragma once

#include <cstdint>

#include "bp/link.hpp"

namespace bp {

enum class SignatureMethod { Combinatorial, ZagierCheck };

struct SignatureResult {
    std::int64_t tau = 0;
    BigInt count_plus;   // lattice points with fractional sum in (0,1) mod 2
    BigInt count_minus;  // sum in (1,2) mod 2
    SignatureMethod method = SignatureMethod::Combinatorial;
    double error_bound = 0.0;  // Zagier only: certified distance to integer
};

/// Brieskorn's combinatorial signature of the Milnor fiber M^{4k}(a).
/// Requires an odd number of exponents (link dimension 4k-1). Counts are
/// exact; the largest exponent's coordinate is range-counted in O(1) per
/// window, so the loop is over the product of the remaining exponents.
SignatureResult signature_combinatorial(const ExponentVector& a, int jobs = 1);

/// Eisenstein/Zagier cotangent sum with N = multiple * lcm(a_i). Evaluated at
/// escalating precision until within 1/4 of an integer; throws
/// numerical_failure if certification never succeeds.
SignatureResult signature_zagier(const ExponentVector& a, std::uint64_t multiple = 1);

/// |bP_{4m}| = 2^{2m-2} (2^{2m-1} - 1) numerator(4 B_m / m), m >= 2.
BigInt bp_order(unsigned m);

struct DiffeoClass {
    int dimension = 0;      // 4m-1
    BigInt bp_group_order;  // |bP_{4m}|
    BigInt km_index;        // (tau/8) mod |bP_{4m}|, in [0, order)
    bool is_standard = false;
};

/// Kervaire-Milnor class of a homotopy-sphere link of dimension 4m-1.
/// Throws dimension_error on wrong dimension, invalid_input_error when the
/// link is not an integral homology sphere, internal_error if 8 does not
/// divide tau.
DiffeoClass km_class(const ExponentVector& a);

enum class KervaireType { Standard, Kervaire, NotApplicable };

/// Brieskorn's congruence rule for the quadratic-form shape (exactly one odd
/// exponent, all others even): odd exponent = +-1 mod 8 -> Standard,
/// +-3 mod 8 -> Kervaire. Anything else is NotApplicable.
KervaireType kervaire_type(const ExponentVector& a);

const char* kervaire_type_name(KervaireType t);

} // namespace bp
