#include "bp/arith.hpp"

#include <algorithm>
#include <mutex>

namespace bp {

std::pair<BigInt, BigInt> gcd_lcm(const std::vector<BigInt>& values) {
    if (values.empty()) throw usage_error("gcd_lcm: empty list");
    BigInt g = 0, l = 1;
    for (const auto& v : values) {
        if (v < 1) throw usage_error("gcd_lcm: values must be >= 1");
        g = big_gcd(g, v);
        l = big_lcm(l, v);
    }
    return {g, l};
}

std::uint64_t euler_phi(std::uint64_t m) {
    std::uint64_t result = m;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // First 12 primes: deterministic for n < 3.18e23.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

std::vector<BigInt> prime_factors_big(const BigInt& n) {
    if (n > BigInt("100000000000000"))
        throw scale_error("prime_factors_big: argument exceeds 1e14");
    std::uint64_t v = static_cast<std::uint64_t>(n);
    std::vector<BigInt> ps;
    for (std::uint64_t p = 2; p * p <= v && p <= 10000000ull; ++p) {
        if (v % p == 0) {
            ps.emplace_back(p);
            while (v % p == 0) v /= p;
        }
    }
    if (v > 1) {
        if (!is_prime_u64(v)) throw scale_error("prime_factors_big: composite cofactor beyond trial range");
        ps.emplace_back(v);
    }
    return ps;
}

std::vector<BigInt> divisors_big(const BigInt& n) {
    std::uint64_t v = static_cast<std::uint64_t>(n);
    std::vector<std::pair<std::uint64_t, int>> fac;
    std::uint64_t m = v;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) { m /= p; ++e; }
            fac.emplace_back(p, e);
        }
    }
    if (m > 1) fac.emplace_back(m, 1);
    std::vector<BigInt> ds{1};
    for (auto [p, e] : fac) {
        std::size_t sz = ds.size();
        BigInt pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < sz; ++j) ds.push_back(ds[j] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

BigInt euler_phi_big(const BigInt& n) {
    BigInt result = n;
    for (const auto& p : prime_factors_big(n)) result -= result / p;
    return result;
}

BigRat bernoulli(unsigned m) {
    if (m < 1) throw usage_error("bernoulli: m >= 1 required");
    static std::mutex mu;
    static std::vector<BigRat> zeta_conv{BigRat(1)};  // B_0, B_1, ... modern signed
    std::lock_guard<std::mutex> lock(mu);
    unsigned need = 2 * m;
    // sum_{k=0}^{n} C(n+1,k) B_k = 0
    while (zeta_conv.size() <= need) {
        unsigned n = static_cast<unsigned>(zeta_conv.size());
        BigRat s = 0;
        BigInt binom = 1;  // C(n+1, 0)
        for (unsigned k = 0; k < n; ++k) {
            s += BigRat(binom) * zeta_conv[k];
            binom = binom * (BigInt(n) + 1 - k) / (k + 1);
        }
        zeta_conv.push_back(-s / BigRat(binom));  // binom = C(n+1, n) = n+1
    }
    BigRat b = zeta_conv[need];
    return b < 0 ? BigRat(-b) : b;
}

} // namespace bp
