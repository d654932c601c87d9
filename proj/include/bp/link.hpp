#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bp/arith.hpp"

namespace bp {

/// Brieskorn-Pham exponent tuple a = (a_0,...,a_n), stored sorted ascending.
/// The link L(a) is a smooth (2n-1)-manifold.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::vector<std::int64_t> exps);

    const std::vector<std::int64_t>& exponents() const { return a_; }
    std::size_t count() const { return a_.size(); }
    /// Link dimension 2n-1 where n+1 = count().
    int dimension() const { return 2 * static_cast<int>(a_.size()) - 3; }
    std::int64_t operator[](std::size_t i) const { return a_[i]; }
    bool operator==(const ExponentVector& o) const { return a_ == o.a_; }
    bool operator<(const ExponentVector& o) const { return a_ < o.a_; }

    std::string to_string() const;

private:
    std::vector<std::int64_t> a_; // sorted ascending, all >= 1
};

/// Weighted-homogeneous hypersurface data: weights w (gcd 1 not enforced for
/// BP-derived data) and degree d. Quasi-smoothness is trusted, not verified.
struct WeightedHypersurface {
    std::vector<BigInt> weights;
    BigInt degree;
};

/// d = lcm(a_i), w_i = d/a_i. Weight gcd is not renormalized: the Alexander
/// data only consumes the ratios d/w_i.
WeightedHypersurface weights_degree(const ExponentVector& a);

/// The monodromy ratios d/w_i as exact rationals, in the input order.
std::vector<BigRat> monodromy_ratios(const WeightedHypersurface& h);

/// Milnor number mu = prod(d/w_i - 1). Throws invalid_input_error when the
/// rational product is not an integer or is negative.
BigInt milnor_number(const WeightedHypersurface& h);
BigInt milnor_number(const ExponentVector& a);

enum class Positivity { Positive, Null, Negative };

/// Fano index sum(w_i) - d; Fano iff positive.
BigInt fano_index(const WeightedHypersurface& h);
Positivity fano_positivity(const WeightedHypersurface& h);

/// Genus of a quasi-smooth curve X_d in P(w0,w1,w2). Exact; throws
/// invalid_input_error when the formula does not yield a non-negative integer.
BigInt curve_genus(const BigInt& w0, const BigInt& w1, const BigInt& w2, const BigInt& d);

const char* positivity_name(Positivity p);

} // namespace bp
