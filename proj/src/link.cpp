#include "bp/link.hpp"

#include <algorithm>
#include <sstream>

namespace bp {

ExponentVector::ExponentVector(std::vector<std::int64_t> exps) : a_(std::move(exps)) {
    if (a_.size() < 2) throw invalid_input_error("exponent tuple needs at least 2 entries");
    for (auto v : a_)
        if (v < 1) throw invalid_input_error("exponents must be >= 1");
    std::sort(a_.begin(), a_.end());
}

std::string ExponentVector::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < a_.size(); ++i) {
        if (i) os << ',';
        os << a_[i];
    }
    os << ')';
    return os.str();
}

WeightedHypersurface weights_degree(const ExponentVector& a) {
    std::vector<BigInt> as;
    as.reserve(a.count());
    for (auto v : a.exponents()) as.emplace_back(v);
    BigInt d = gcd_lcm(as).second;
    WeightedHypersurface h;
    h.degree = d;
    h.weights.reserve(as.size());
    for (const auto& v : as) h.weights.push_back(d / v);
    return h;
}

std::vector<BigRat> monodromy_ratios(const WeightedHypersurface& h) {
    if (h.degree < 1) throw invalid_input_error("degree must be >= 1");
    std::vector<BigRat> r;
    r.reserve(h.weights.size());
    for (const auto& w : h.weights) {
        if (w < 1) throw invalid_input_error("weights must be >= 1");
        r.emplace_back(BigRat(h.degree, w));
    }
    return r;
}

BigInt milnor_number(const WeightedHypersurface& h) {
    BigRat mu = 1;
    for (const auto& r : monodromy_ratios(h)) mu *= (r - 1);
    if (mu < 0 || boost::multiprecision::denominator(mu) != 1)
        throw invalid_input_error("Milnor number is not a non-negative integer");
    return boost::multiprecision::numerator(mu);
}

BigInt milnor_number(const ExponentVector& a) {
    BigInt mu = 1;
    for (auto v : a.exponents()) mu *= (v - 1);
    return mu;
}

BigInt fano_index(const WeightedHypersurface& h) {
    BigInt s = 0;
    for (const auto& w : h.weights) s += w;
    return s - h.degree;
}

Positivity fano_positivity(const WeightedHypersurface& h) {
    BigInt ix = fano_index(h);
    if (ix > 0) return Positivity::Positive;
    if (ix == 0) return Positivity::Null;
    return Positivity::Negative;
}

BigInt curve_genus(const BigInt& w0, const BigInt& w1, const BigInt& w2, const BigInt& d) {
    if (w0 < 1 || w1 < 1 || w2 < 1 || d < 1)
        throw invalid_input_error("curve_genus: weights and degree must be positive");
    BigRat g = BigRat(d * d, w0 * w1 * w2);
    g -= BigRat(d * big_gcd(w0, w1), w0 * w1);
    g -= BigRat(d * big_gcd(w0, w2), w0 * w2);
    g -= BigRat(d * big_gcd(w1, w2), w1 * w2);
    g += BigRat(big_gcd(d, w0), w0);
    g += BigRat(big_gcd(d, w1), w1);
    g += BigRat(big_gcd(d, w2), w2);
    g -= 1;
    g /= 2;
    if (g < 0 || boost::multiprecision::denominator(g) != 1)
        throw invalid_input_error("curve_genus: formula did not yield a non-negative integer");
    return boost::multiprecision::numerator(g);
}

const char* positivity_name(Positivity p) {
    switch (p) {
        case Positivity::Positive: return "positive";
        case Positivity::Null: return "null";
        case Positivity::Negative: return "negative";
    }
    return "?";
}

} // namespace bp
