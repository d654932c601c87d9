#pragma once

#include <vector>

#include "bp/link.hpp"

namespace bp {

/// Certificate data for the Kaehler-Einstein sufficiency test on a
/// Brieskorn-Pham link. `passes` means the sufficient conditions hold; it is
/// not a non-existence verdict when false.
struct KEReport {
    std::vector<std::int64_t> a;
    std::vector<BigInt> c;  // C_i = lcm of all exponents except a_i
    std::vector<BigInt> b;  // b_i = gcd(C_i, a_i)
    bool cond1 = false;     // 1 < sum 1/a_i
    bool cond2 = false;     // sum < 1 + (n/(n-1)) min_i 1/a_i
    bool cond3 = false;     // sum < 1 + (n/(n-1)) min_{i,j} 1/(b_i b_j)
    bool passes = false;
    bool fano = false;
    bool positive_ricci = false;
};

/// The three exact rational inequalities. min_{i,j} ranges over all ordered
/// index pairs including i = j: this is what reproduces the published censuses
/// (8610 in dimension 7); restricting to distinct pairs yields 8705.
/// Throws dimension_error for fewer than 3 exponents.
KEReport ke_check(const ExponentVector& a);

struct PositivityReport {
    BigInt index;  // sum w_i - d
    Positivity sign = Positivity::Null;
    bool fano = false;
    bool positive_ricci_metric_exists = false;  // = fano
};

PositivityReport positivity(const WeightedHypersurface& h);

} // namespace bp
