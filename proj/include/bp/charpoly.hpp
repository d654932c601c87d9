#pragma once

#include <cstdint>
#include <map>

#include "bp/link.hpp"

namespace bp {

/// Divisor-ring element: finitely supported sum c_m * Lam_m with rational
/// coefficients, Lam_a * Lam_b = gcd(a,b) * Lam_{lcm(a,b)}. Lam_1 is the unit.
struct DivisorElement {
    std::map<BigInt, BigRat> coeff;

    DivisorElement& operator*=(const DivisorElement& o);
    static DivisorElement unit();
};

/// Characteristic polynomial Delta(t) = prod_m (t^m - 1)^{e_m}. Negative e_m
/// are legal in this basis (they cancel cyclotomically); degree = sum m*e_m.
struct CharPoly {
    std::map<BigInt, std::int64_t> exponents;

    BigInt degree() const;          // sum m*e_m
    std::int64_t betti() const;     // sum e_m = multiplicity of (t-1)
    /// Cyclotomic multiplicities: Delta = prod Phi_d ^ r_d. Requires
    /// factorization of the support indices; throws internal_error if any
    /// multiplicity comes out negative (not an honest polynomial).
    std::map<BigInt, std::int64_t> cyclotomic() const;
    bool same_polynomial(const CharPoly& o) const;
};

/// Milnor-Orlik: expands prod_i ((1/v_i) Lam_{u_i} - Lam_1) where
/// d/w_i = u_i/v_i in lowest terms. A ratio of 1 gives Delta = 1.
CharPoly milnor_orlik_divisor(const WeightedHypersurface& h);
CharPoly milnor_orlik_divisor(const ExponentVector& a);

/// Independent oracle: enumerates all mu root-of-unity products, groups by
/// exact multiplicative order, and rebuilds the (t^m - 1) basis. Refuses when
/// prod(a_i - 1) exceeds `limit`.
CharPoly brute_force_charpoly(const ExponentVector& a, std::uint64_t limit = 1000000);

struct DeltaAtOne {
    bool is_rational_hs = false;
    BigInt torsion_order;  // |Delta(1)| = |H_{n-1}|, valid when is_rational_hs
};

/// Evaluates |Delta(1)| exactly from the basis exponents.
DeltaAtOne delta_at_one(const CharPoly& cp);

} // namespace bp
