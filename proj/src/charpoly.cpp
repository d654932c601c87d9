#include "bp/charpoly.hpp"

#include <algorithm>
#include <numeric>

namespace bp {

DivisorElement& DivisorElement::operator*=(const DivisorElement& o) {
    std::map<BigInt, BigRat> out;
    for (const auto& [m1, c1] : coeff)
        for (const auto& [m2, c2] : o.coeff) {
            BigInt g = big_gcd(m1, m2);
            out[m1 / g * m2] += c1 * c2 * BigRat(g);
        }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    coeff = std::move(out);
    return *this;
}

DivisorElement DivisorElement::unit() {
    DivisorElement e;
    e.coeff[1] = 1;
    return e;
}

BigInt CharPoly::degree() const {
    BigInt d = 0;
    for (const auto& [m, e] : exponents) d += m * e;
    return d;
}

std::int64_t CharPoly::betti() const {
    std::int64_t b = 0;
    for (const auto& [m, e] : exponents) b += e;
    return b;
}

std::map<BigInt, std::int64_t> CharPoly::cyclotomic() const {
    // t^m - 1 = prod_{d | m} Phi_d
    std::map<BigInt, std::int64_t> r;
    for (const auto& [m, e] : exponents)
        for (const auto& d : divisors_big(m)) r[d] += e;
    for (auto it = r.begin(); it != r.end();) {
        if (it->second < 0)
            throw internal_error("cyclotomic: negative multiplicity, not a polynomial");
        it = (it->second == 0) ? r.erase(it) : std::next(it);
    }
    return r;
}

bool CharPoly::same_polynomial(const CharPoly& o) const {
    return cyclotomic() == o.cyclotomic();
}

CharPoly milnor_orlik_divisor(const WeightedHypersurface& h) {
    DivisorElement div = DivisorElement::unit();
    for (const auto& r : monodromy_ratios(h)) {
        BigInt u = boost::multiprecision::numerator(r);
        BigInt v = boost::multiprecision::denominator(r);
        if (u == v) {
            // factor (Lam_1 - Lam_1) = 0: Delta = 1
            return CharPoly{};
        }
        DivisorElement term;
        term.coeff[u] = BigRat(1, v);
        term.coeff[1] += BigRat(-1);
        div *= term;
    }
    CharPoly cp;
    for (const auto& [m, c] : div.coeff) {
        if (boost::multiprecision::denominator(c) != 1)
            throw internal_error("milnor_orlik_divisor: non-integer exponent");
        BigInt n = boost::multiprecision::numerator(c);
        cp.exponents[m] = static_cast<std::int64_t>(n);
    }
    return cp;
}

CharPoly milnor_orlik_divisor(const ExponentVector& a) {
    return milnor_orlik_divisor(weights_degree(a));
}

CharPoly brute_force_charpoly(const ExponentVector& a, std::uint64_t limit) {
    const auto& e = a.exponents();
    std::uint64_t mu = 1;
    for (auto v : e) {
        mu *= static_cast<std::uint64_t>(v - 1);
        if (mu > limit) throw scale_error("brute_force_charpoly: mu exceeds limit");
    }
    std::vector<BigInt> as;
    for (auto v : e) as.emplace_back(v);
    std::uint64_t d = static_cast<std::uint64_t>(gcd_lcm(as).second);

    // Count eigenvalues by exact multiplicative order: the eigenvalues are
    // zeta_d^{sum x_i d/a_i} over 0 < x_i < a_i. Bucket by s first, then
    // aggregate per residue (one gcd per residue instead of per point).
    std::map<std::uint64_t, std::uint64_t> order_count;  // m -> N_m
    std::vector<std::uint64_t> w;
    for (auto v : e) w.push_back(d / static_cast<std::uint64_t>(v));
    std::vector<std::int64_t> x(e.size(), 1);
    if (mu > 0) {
        if (d > (1u << 27)) throw scale_error("brute_force_charpoly: lcm too large");
        std::vector<std::uint64_t> bucket(d, 0);
        std::uint64_t s = 0;
        for (std::size_t i = 0; i < e.size(); ++i) s += w[i];
        s %= d;
        for (;;) {
            ++bucket[s];
            std::size_t i = 0;
            for (; i < e.size(); ++i) {
                if (x[i] + 1 < e[i]) {
                    ++x[i];
                    s += w[i];
                    if (s >= d) s -= d;
                    break;
                }
                s = (s + d - (static_cast<std::uint64_t>(e[i] - 2) * w[i]) % d) % d;
                x[i] = 1;
            }
            if (i == e.size()) break;
        }
        for (std::uint64_t r = 0; r < d; ++r)
            if (bucket[r]) order_count[d / std::gcd(r, d)] += bucket[r];
    }

    // r_m = N_m / phi(m) gives Delta = prod Phi_m^{r_m}; convert to the
    // (t^m - 1) basis by descending induction over the divisor closure.
    std::map<std::uint64_t, std::int64_t> r;
    for (const auto& [m, N] : order_count) {
        std::uint64_t phi = euler_phi(m);
        if (N % phi != 0) throw internal_error("brute_force_charpoly: N_m not divisible by phi(m)");
        r[m] = static_cast<std::int64_t>(N / phi);
    }
    // divisor closure of the support
    std::map<std::uint64_t, std::int64_t> esupp;
    {
        std::vector<std::uint64_t> supp;
        for (const auto& [m, _] : r) {
            for (const auto& dv : divisors_big(BigInt(m)))
                supp.push_back(static_cast<std::uint64_t>(dv));
        }
        std::sort(supp.begin(), supp.end());
        supp.erase(std::unique(supp.begin(), supp.end()), supp.end());
        for (auto it = supp.rbegin(); it != supp.rend(); ++it) {
            std::uint64_t m = *it;
            std::int64_t em = r.count(m) ? r[m] : 0;
            for (const auto& [M, eM] : esupp)
                if (M > m && M % m == 0) em -= eM;
            if (em != 0) esupp[m] = em;
        }
    }
    CharPoly cp;
    for (const auto& [m, em] : esupp) cp.exponents[BigInt(m)] = em;
    return cp;
}

DeltaAtOne delta_at_one(const CharPoly& cp) {
    DeltaAtOne r;
    if (cp.betti() != 0) {
        r.is_rational_hs = false;
        r.torsion_order = 0;
        return r;
    }
    r.is_rational_hs = true;
    BigInt num = 1, den = 1;
    for (const auto& [m, e] : cp.exponents) {
        if (e > 0)
            for (std::int64_t i = 0; i < e; ++i) num *= m;
        else
            for (std::int64_t i = 0; i < -e; ++i) den *= m;
    }
    if (num % den != 0) throw internal_error("delta_at_one: non-integer torsion");
    r.torsion_order = num / den;
    return r;
}

} // namespace bp
