#include "bp/ke.hpp"

namespace bp {

KEReport ke_check(const ExponentVector& a) {
    if (a.count() < 3) throw dimension_error("ke_check: at least 3 exponents required");
    const auto& e = a.exponents();
    const std::size_t cnt = e.size();
    const std::int64_t n = static_cast<std::int64_t>(cnt) - 1;

    KEReport r;
    r.a = e;
    BigRat sum = 0;
    for (auto v : e) sum += BigRat(1, v);

    r.c.resize(cnt);
    r.b.resize(cnt);
    for (std::size_t i = 0; i < cnt; ++i) {
        BigInt l = 1;
        for (std::size_t j = 0; j < cnt; ++j)
            if (j != i) l = big_lcm(l, BigInt(e[j]));
        r.c[i] = l;
        r.b[i] = big_gcd(l, BigInt(e[i]));
    }

    const BigRat factor(n, n - 1);
    r.cond1 = sum > 1;
    r.cond2 = sum < 1 + factor * BigRat(1, e.back());  // min 1/a_i at largest a_i

    BigInt max_bb = 1;  // min 1/(b_i b_j) over all pairs, i = j included
    for (std::size_t i = 0; i < cnt; ++i)
        for (std::size_t j = i; j < cnt; ++j) {
            BigInt prod = r.b[i] * r.b[j];
            if (prod > max_bb) max_bb = prod;
        }
    r.cond3 = sum < 1 + factor * BigRat(1, max_bb);

    r.passes = r.cond1 && r.cond2 && r.cond3;
    r.fano = r.cond1;
    r.positive_ricci = r.fano;
    return r;
}

PositivityReport positivity(const WeightedHypersurface& h) {
    PositivityReport r;
    r.index = fano_index(h);
    r.sign = fano_positivity(h);
    r.fano = (r.sign == Positivity::Positive);
    r.positive_ricci_metric_exists = r.fano;
    return r;
}

} // namespace bp
