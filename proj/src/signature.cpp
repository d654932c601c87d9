#include "bp/signature.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <limits>
#include <thread>

#include "bp/graph.hpp"

namespace bp {

namespace {

// floor(a/b) for b > 0, correct for negative a
std::int64_t floordiv(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b, r = a % b;
    return (r != 0 && r < 0) ? q - 1 : q;
}

BigInt floordiv(const BigInt& a, const BigInt& b) {
    BigInt q = a / b, r = a % b;
    return (r != 0 && r < 0) ? q - 1 : q;
}

// Lattice points x in [1, amax-1] with L < s + x*w < R (strict).
template <typename I>
I window_count(const I& s, const I& w, const I& amax, const I& L, const I& R) {
    I lo = floordiv(L - s, w) + 1;
    I hi = floordiv(R - s - 1, w);
    if (lo < 1) lo = 1;
    if (hi > amax - 1) hi = amax - 1;
    return hi >= lo ? hi - lo + 1 : I(0);
}

// Sweep flattened outer-odometer indices [begin, end). The outer coordinates
// are x_i in [1, a_i - 1] for all but the largest exponent; the largest
// coordinate is range-counted per window. s is tracked mod 2d.
template <typename I>
void sweep_range(const std::vector<std::int64_t>& a, const I& d,
                 std::uint64_t begin, std::uint64_t end,
                 BigInt& plus, BigInt& minus) {
    const std::size_t n = a.size() - 1;  // outer coordinate count
    const I two_d = 2 * d;
    const I amax = I(a[n]);
    const I wmax = d / amax;
    std::vector<I> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = d / I(a[i]);

    // decode mixed-radix start point: digit i = x_i - 1, radix a_i - 1
    std::vector<std::int64_t> x(n);
    {
        std::uint64_t q = begin;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t radix = static_cast<std::uint64_t>(a[i] - 1);
            x[i] = static_cast<std::int64_t>(q % radix) + 1;
            q /= radix;
        }
    }
    I s = 0;
    for (std::size_t i = 0; i < n; ++i) s = (s + I(x[i]) * w[i]) % two_d;

    BigInt p = 0, m = 0;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
        // windows for t = s + x*w in (0, 3d): plus on (0,d) and (2d,3d),
        // minus on (d,2d); boundary points (integral sum) count for neither
        p += window_count<I>(s, wmax, amax, I(0), d);
        p += window_count<I>(s, wmax, amax, two_d, I(3) * d);
        m += window_count<I>(s, wmax, amax, d, two_d);
        // odometer step
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i] + 1 < a[i]) {
                ++x[i];
                s += w[i];
                if (s >= two_d) s -= two_d;
                break;
            }
            s = (s + two_d - (I(a[i] - 2) * w[i]) % two_d) % two_d;
            x[i] = 1;
        }
    }
    plus = p;
    minus = m;
}

} // namespace

SignatureResult signature_combinatorial(const ExponentVector& a, int jobs) {
    if (a.count() % 2 == 0)
        throw dimension_error("signature: odd exponent count required (dimension 4k-1)");
    if (a.count() < 3) throw dimension_error("signature: at least 3 exponents required");
    if (jobs < 1) jobs = 1;

    SignatureResult res;
    res.method = SignatureMethod::Combinatorial;
    res.count_plus = 0;
    res.count_minus = 0;
    for (auto v : a.exponents())
        if (v == 1) return res;  // empty lattice

    std::vector<BigInt> as;
    for (auto v : a.exponents()) as.emplace_back(v);
    BigInt d = gcd_lcm(as).second;

    const auto& e = a.exponents();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i + 1 < e.size(); ++i) {
        total *= static_cast<std::uint64_t>(e[i] - 1);
        if (total > (1ull << 42))
            throw scale_error("signature: outer lattice exceeds 2^42 points");
    }

    const bool small = d < (BigInt(1) << 61);
    int workers = static_cast<int>(std::min<std::uint64_t>(
        static_cast<std::uint64_t>(jobs), std::max<std::uint64_t>(total, 1)));
    std::vector<BigInt> pl(workers), mi(workers);
    auto run = [&](int t) {
        std::uint64_t lo = total * t / workers, hi = total * (t + 1) / workers;
        if (lo >= hi) return;
        if (small)
            sweep_range<std::int64_t>(e, static_cast<std::int64_t>(d), lo, hi, pl[t], mi[t]);
        else
            sweep_range<BigInt>(e, d, lo, hi, pl[t], mi[t]);
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> ts;
        for (int t = 0; t < workers; ++t) ts.emplace_back(run, t);
        for (auto& t : ts) t.join();
    }
    for (int t = 0; t < workers; ++t) {
        res.count_plus += pl[t];
        res.count_minus += mi[t];
    }
    BigInt tau = res.count_plus - res.count_minus;
    if (tau > std::numeric_limits<std::int64_t>::max() ||
        tau < std::numeric_limits<std::int64_t>::min())
        throw scale_error("signature: tau exceeds int64");
    res.tau = static_cast<std::int64_t>(tau);
    return res;
}

namespace {

using Float50 = boost::multiprecision::cpp_bin_float_50;
using Float100 = boost::multiprecision::cpp_bin_float_100;

// Rotation-based evaluation for machine floats: per-exponent cotangent tables
// with rolling indices, cot(pi(2j+1)/2N) by incremental complex rotation.
// Pair symmetry j <-> N-1-j doubles each term (even number of cot factors);
// the odd-N middle term vanishes, so only j < N/2 is visited.
template <typename F>
F zagier_sum_rotating(const std::vector<std::int64_t>& a, std::uint64_t N) {
    const F pi = F(3.14159265358979323846264338327950288L);
    std::vector<std::vector<F>> tab(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        tab[i].resize(a[i]);
        for (std::int64_t r = 0; r < a[i]; ++r) {
            if (2 * r + 1 == a[i])
                tab[i][r] = F(0);
            else
                tab[i][r] = F(1) / std::tan(pi * F(2 * r + 1) / F(2 * a[i]));
        }
    }
    const F dth = pi / F(N);
    const F cd = std::cos(dth), sd = std::sin(dth);
    F c = std::cos(dth / 2), s = std::sin(dth / 2);
    std::vector<std::size_t> idx(a.size(), 0);
    F sum = 0;
    const std::uint64_t half = N / 2;
    for (std::uint64_t j = 0; j < half; ++j) {
        F term = c / s;
        for (std::size_t i = 0; i < a.size(); ++i) term *= tab[i][idx[i]];
        sum += term;
        F c2 = c * cd - s * sd;
        s = s * cd + c * sd;
        c = c2;
        if ((j & 4095u) == 4095u) {
            F nrm = F(1) / std::sqrt(c * c + s * s);
            c *= nrm;
            s *= nrm;
        }
        for (std::size_t i = 0; i < a.size(); ++i)
            if (++idx[i] == static_cast<std::size_t>(a[i])) idx[i] = 0;
    }
    return 2 * sum;
}

// Direct high-precision evaluation (tan per term); used only as a fallback.
template <typename F>
F zagier_sum_mp(const std::vector<std::int64_t>& a, std::uint64_t N) {
    const F pi = 4 * atan(F(1));
    F sum = 0;
    const std::uint64_t half = N / 2;
    for (std::uint64_t j = 0; j < half; ++j) {
        F th = pi * F(2 * j + 1) / F(2 * N);
        F term = cos(th) / sin(th);
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint64_t r = j % static_cast<std::uint64_t>(a[i]);
            if (2 * r + 1 == static_cast<std::uint64_t>(a[i])) {
                term = 0;
                break;
            }
            F thi = pi * F(2 * r + 1) / F(2 * a[i]);
            term *= cos(thi) / sin(thi);
        }
        sum += term;
    }
    return 2 * sum;
}

} // namespace

SignatureResult signature_zagier(const ExponentVector& a, std::uint64_t multiple) {
    if (a.count() % 2 == 0)
        throw dimension_error("signature: odd exponent count required (dimension 4k-1)");
    if (a.count() < 3) throw dimension_error("signature: at least 3 exponents required");
    if (multiple < 1) throw usage_error("signature_zagier: multiple must be >= 1");

    SignatureResult res;
    res.method = SignatureMethod::ZagierCheck;
    res.count_plus = 0;
    res.count_minus = 0;
    for (auto v : a.exponents())
        if (v == 1) return res;

    std::vector<BigInt> as;
    for (auto v : a.exponents()) as.emplace_back(v);
    BigInt lcm = gcd_lcm(as).second;
    BigInt nb = lcm * multiple;
    if (nb > (BigInt(1) << 40)) throw scale_error("signature_zagier: N too large");
    std::uint64_t N = static_cast<std::uint64_t>(nb);
    const unsigned k = (static_cast<unsigned>(a.count()) - 1) / 2;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;

    auto certify = [&](long double val) -> bool {
        long double nearest = static_cast<long double>(std::llround(val));
        long double err = std::fabs(val - nearest);
        if (err < 0.25L && std::fabs(val) < 9.0e15L) {
            res.tau = std::llround(val);
            res.error_bound = static_cast<double>(err);
            return true;
        }
        return false;
    };

    {
        double v = sign * zagier_sum_rotating<double>(a.exponents(), N) / static_cast<double>(N);
        if (certify(v)) return res;
    }
    {
        long double v = sign * zagier_sum_rotating<long double>(a.exponents(), N) / static_cast<long double>(N);
        if (certify(v)) return res;
    }
    if (N > 2000000)
        throw numerical_failure("signature_zagier: certification failed and N too large for high precision");
    {
        Float50 v = Float50(sign) * zagier_sum_mp<Float50>(a.exponents(), N) / Float50(N);
        if (certify(static_cast<long double>(v))) return res;
    }
    {
        Float100 v = Float100(sign) * zagier_sum_mp<Float100>(a.exponents(), N) / Float100(N);
        if (certify(static_cast<long double>(v))) return res;
    }
    throw numerical_failure("signature_zagier: could not certify an integer value");
}

BigInt bp_order(unsigned m) {
    if (m < 2) throw usage_error("bp_order: m >= 2 required");
    BigRat q = 4 * bernoulli(m) / m;
    BigInt num = boost::multiprecision::numerator(q);
    return (BigInt(1) << (2 * m - 2)) * ((BigInt(1) << (2 * m - 1)) - 1) * num;
}

DiffeoClass km_class(const ExponentVector& a) {
    int dim = a.dimension();
    if (dim < 7 || (dim + 1) % 4 != 0)
        throw dimension_error("km_class: dimension 4m-1 with m >= 2 required");
    if (classify_homology(a) != HomologyClass::IntegralHomologySphere)
        throw invalid_input_error("km_class: link is not an integral homology sphere");
    unsigned m = static_cast<unsigned>((dim + 1) / 4);
    DiffeoClass dc;
    dc.dimension = dim;
    dc.bp_group_order = bp_order(m);
    SignatureResult sig = signature_combinatorial(a);
    if (sig.tau % 8 != 0) throw internal_error("km_class: signature not divisible by 8");
    BigInt idx = BigInt(sig.tau / 8) % dc.bp_group_order;
    if (idx < 0) idx += dc.bp_group_order;
    dc.km_index = idx;
    dc.is_standard = (idx == 0);
    return dc;
}

KervaireType kervaire_type(const ExponentVector& a) {
    if (a.count() < 3) return KervaireType::NotApplicable;
    std::int64_t odd = 0;
    int odd_count = 0;
    for (auto v : a.exponents()) {
        if (v % 2 != 0) {
            odd = v;
            ++odd_count;
        }
    }
    if (odd_count != 1) return KervaireType::NotApplicable;
    std::int64_t r = odd % 8;
    if (r == 1 || r == 7) return KervaireType::Standard;
    if (r == 3 || r == 5) return KervaireType::Kervaire;
    return KervaireType::NotApplicable;
}

const char* kervaire_type_name(KervaireType t) {
    switch (t) {
        case KervaireType::Standard: return "standard";
        case KervaireType::Kervaire: return "kervaire";
        case KervaireType::NotApplicable: return "not_applicable";
    }
    return "?";
}

} // namespace bp
