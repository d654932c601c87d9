#include "bp/census.hpp"

#include <algorithm>
#include <numeric>
#include <mutex>
#include <thread>

#include "bp/charpoly.hpp"
#include "bp/graph.hpp"
#include "bp/ke.hpp"

namespace bp {

namespace {

bool has(const std::vector<Predicate>& ps, Predicate p) {
    return std::find(ps.begin(), ps.end(), p) != ps.end();
}

bool predicates_pass(const std::vector<Predicate>& ps, const std::vector<std::int64_t>& t) {
    ExponentVector a(t);
    for (Predicate p : ps) {
        switch (p) {
            case Predicate::HomotopySphere:
                if (!is_homotopy_sphere(a)) return false;
                break;
            case Predicate::RationalHS:
                if (classify_homology(a) == HomologyClass::NotRationalHS) return false;
                break;
            case Predicate::KEPasses:
                if (!ke_check(a).passes) return false;
                break;
            case Predicate::Fano: {
                BigRat s = 0;
                for (auto v : t) s += BigRat(1, v);
                if (!(s > 1)) return false;
                break;
            }
        }
    }
    return true;
}

// Homology classification is exactly periodic in the last exponent mod
// 2*lcm(prefix): each prime power of any a_i divides the modulus, so
// gcd(k, a_i) and the parity of k are residue functions.
std::int64_t plateau_modulus(const std::vector<std::int64_t>& prefix) {
    BigInt m = 2;
    for (auto v : prefix) m = big_lcm(m, BigInt(v));
    if (m > (BigInt(1) << 40)) throw scale_error("census: plateau modulus too large");
    return static_cast<std::int64_t>(m);
}

// Prefix sums to exactly 1: every last exponent k passes cond1, and the
// KE inequalities hold for all large k, so the search is finite only when a
// homology predicate kills every residue class mod the plateau modulus.
void close_plateau(const std::vector<Predicate>& ps,
                   const std::vector<std::int64_t>& prefix,
                   std::int64_t k_min,
                   std::vector<std::vector<std::int64_t>>& out) {
    bool homology = has(ps, Predicate::HomotopySphere) || has(ps, Predicate::RationalHS);
    if (!homology)
        throw unbounded_search_error(
            "census: prefix with reciprocal sum 1 admits infinitely many tuples "
            "under the requested predicates");
    std::int64_t M = plateau_modulus(prefix);
    std::vector<std::int64_t> live;
    for (std::int64_t r = 0; r < M; ++r) {
        std::int64_t k = r + M * (k_min / M + 2);  // large representative
        std::vector<std::int64_t> t = prefix;
        t.push_back(k);
        ExponentVector a(t);
        bool ok = has(ps, Predicate::HomotopySphere)
                      ? is_homotopy_sphere(a)
                      : classify_homology(a) != HomologyClass::NotRationalHS;
        if (ok) live.push_back(r);
    }
    if (!live.empty())
        throw unbounded_search_error(
            "census: residue classes of the last exponent survive the homology "
            "filter on a reciprocal-sum-1 plateau; infinitely many tuples");
    // No residue survives; finitely many small k could still pass only via
    // the homology filter, which is exactly periodic: nothing to add.
    (void)k_min;
    (void)out;
}

// Upper bound for the last coordinate when the prefix sum exceeds 1:
// cond2 with min 1/a_i = 1/k forces k < 1/((n-1)(S-1)).
std::int64_t overfull_bound(const BigRat& S, std::int64_t n) {
    BigRat lim = BigRat(1) / (BigRat(n - 1) * (S - 1));
    BigInt b = boost::multiprecision::numerator(lim) / boost::multiprecision::denominator(lim);
    return static_cast<std::int64_t>(b) + 1;
}

void rec_census(const std::vector<Predicate>& ps, std::size_t nexp,
                std::vector<std::int64_t>& prefix, const BigRat& S,
                std::vector<std::vector<std::int64_t>>& out) {
    const std::size_t j = prefix.size();
    const std::int64_t n = static_cast<std::int64_t>(nexp) - 1;
    const std::int64_t lo = prefix.empty() ? 2 : prefix.back();
    const std::size_t remaining = nexp - j;

    if (remaining == 1) {
        std::int64_t hi;
        if (S < 1) {
            // cond1: S + 1/k > 1
            BigRat lim = BigRat(1) / (BigRat(1) - S);
            BigInt b = boost::multiprecision::numerator(lim) /
                       boost::multiprecision::denominator(lim);
            hi = static_cast<std::int64_t>(b) + 1;
        } else if (S == 1) {
            close_plateau(ps, prefix, lo, out);
            return;
        } else {
            hi = overfull_bound(S, n);
        }
        for (std::int64_t k = lo; k <= hi; ++k) {
            prefix.push_back(k);
            if (predicates_pass(ps, prefix)) out.push_back(prefix);
            prefix.pop_back();
        }
        return;
    }

    // cond1 needs S + remaining/v > 1 for the smallest candidate v; with two
    // or more entries left, S >= 1 already violates cond2 (the min 1/a_i term
    // cannot absorb two reciprocals).
    if (S >= 1) return;
    BigRat lim = BigRat(remaining) / (BigRat(1) - S);
    BigInt b = boost::multiprecision::numerator(lim) /
               boost::multiprecision::denominator(lim);
    std::int64_t hi = static_cast<std::int64_t>(b) + 1;
    for (std::int64_t v = lo; v <= hi; ++v) {
        if (S + BigRat(remaining, v) <= 1) break;
        prefix.push_back(v);
        rec_census(ps, nexp, prefix, S + BigRat(1, v), out);
        prefix.pop_back();
    }
}

void prefix_census(const std::vector<Predicate>& ps,
                   const std::vector<std::int64_t>& fixed,
                   std::vector<std::vector<std::int64_t>>& out) {
    const std::int64_t n = static_cast<std::int64_t>(fixed.size());  // n+1 total
    BigRat S = 0;
    std::int64_t amax = 0;
    for (auto v : fixed) {
        if (v < 1) throw invalid_input_error("census: prefix entries must be >= 1");
        S += BigRat(1, v);
        amax = std::max(amax, v);
    }
    std::int64_t hi;
    if (S < 1) {
        BigRat lim = BigRat(1) / (BigRat(1) - S);
        BigInt b = boost::multiprecision::numerator(lim) /
                   boost::multiprecision::denominator(lim);
        hi = static_cast<std::int64_t>(b) + 1;
    } else if (S == 1) {
        close_plateau(ps, fixed, amax, out);
        return;
    } else {
        hi = std::max(amax, overfull_bound(S, n));
    }
    for (std::int64_t m = 2; m <= hi; ++m) {
        std::vector<std::int64_t> t = fixed;
        t.push_back(m);
        std::sort(t.begin(), t.end());
        if (predicates_pass(ps, t)) out.push_back(t);
    }
}

} // namespace

CensusResult enumerate_ke_links(const CensusSpec& spec, int jobs) {
    if (spec.dimension < 5 || spec.dimension % 2 == 0)
        throw invalid_input_error("census: dimension must be an odd integer >= 5");
    if (spec.predicates.empty()) throw usage_error("census: at least one predicate required");
    if (!has(spec.predicates, Predicate::KEPasses))
        throw unbounded_search_error(
            "census: predicate set without the Kaehler-Einstein conditions does "
            "not bound the exponent space");
    const std::size_t nexp = static_cast<std::size_t>((spec.dimension + 3) / 2);
    if (jobs < 1) jobs = 1;

    std::vector<std::vector<std::int64_t>> raw;
    if (spec.prefix) {
        if (spec.prefix->size() + 1 != nexp)
            throw invalid_input_error("census: prefix length must be one less than tuple size");
        prefix_census(spec.predicates, *spec.prefix, raw);
    } else if (jobs == 1) {
        std::vector<std::int64_t> p;
        rec_census(spec.predicates, nexp, p, BigRat(0), raw);
    } else {
        // static partition of the (a0, a1) top of the search tree
        struct Task { std::int64_t a0, a1; BigRat S; };
        std::vector<Task> tasks;
        const std::int64_t N = static_cast<std::int64_t>(nexp);
        for (std::int64_t a0 = 2; BigRat(N, a0) > 1; ++a0) {
            BigRat S0(1, a0);
            for (std::int64_t a1 = a0; S0 + BigRat(N - 1, a1) > 1; ++a1)
                tasks.push_back({a0, a1, S0 + BigRat(1, a1)});
        }
        std::vector<std::vector<std::vector<std::int64_t>>> per(jobs);
        std::exception_ptr fail;
        std::mutex fail_mu;
        auto work = [&](int w) {
            try {
                for (std::size_t t = w; t < tasks.size(); t += static_cast<std::size_t>(jobs)) {
                    std::vector<std::int64_t> p{tasks[t].a0, tasks[t].a1};
                    rec_census(spec.predicates, nexp, p, tasks[t].S, per[w]);
                }
            } catch (...) {
                std::lock_guard<std::mutex> g(fail_mu);
                if (!fail) fail = std::current_exception();
            }
        };
        std::vector<std::thread> ths;
        for (int w = 0; w < jobs; ++w) ths.emplace_back(work, w);
        for (auto& t : ths) t.join();
        if (fail) std::rethrow_exception(fail);
        for (auto& v : per)
            for (auto& t : v) raw.push_back(std::move(t));
    }

    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

    CensusResult res;
    res.total = static_cast<std::int64_t>(raw.size());
    for (auto& t : raw) res.tuples.emplace_back(t);
    if ((spec.dimension + 1) % 4 == 0 && has(spec.predicates, Predicate::HomotopySphere)) {
        for (const auto& a : res.tuples) {
            DiffeoClass dc = km_class(a);
            res.per_class[static_cast<int>(dc.km_index)]++;
        }
    }
    return res;
}

BigInt c_sequence(unsigned k) {
    if (k < 1) throw usage_error("c_sequence: k >= 1 required");
    BigInt c = 2;
    for (unsigned i = 1; i < k; ++i) c = c * c - c + 1;
    return c;
}

std::vector<KervaireFamilyEntry> kervaire_family(unsigned m) {
    if (m < 4 || m > 7)
        throw usage_error("kervaire_family: m in [4,7] supported (prime window scale)");
    std::vector<std::int64_t> base;
    for (unsigned i = 1; i <= m - 2; ++i)
        base.push_back(2 * static_cast<std::int64_t>(c_sequence(i)));
    base.push_back(2);
    BigInt lo_b = 2 * c_sequence(m - 2);
    BigInt hi_b = 2 * c_sequence(m - 1) - 2;
    std::int64_t lo = static_cast<std::int64_t>(lo_b), hi = static_cast<std::int64_t>(hi_b);
    std::vector<KervaireFamilyEntry> out;
    for (std::int64_t p = lo + 1; p < hi; ++p) {
        if (!is_prime_u64(static_cast<std::uint64_t>(p))) continue;
        bool coprime = true;
        for (auto v : base)
            if (std::gcd(v, p) != 1) { coprime = false; break; }
        if (!coprime) continue;
        std::vector<std::int64_t> t = base;
        t.push_back(p);
        KervaireFamilyEntry e;
        e.tuple = ExponentVector(t);
        e.prime = static_cast<std::uint64_t>(p);
        e.type = kervaire_type(e.tuple);
        if (!ke_check(e.tuple).passes)
            throw internal_error("kervaire_family: emitted tuple fails ke_check");
        if (classify_homology(e.tuple) == HomologyClass::NotRationalHS)
            throw internal_error("kervaire_family: emitted tuple is not a rational HS");
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<RhsRow> rhs_family(std::int64_t m, std::int64_t k_max) {
    if (m < 3) throw usage_error("rhs_family: m >= 3 required");
    std::vector<RhsRow> rows;
    for (std::int64_t k = m + 1; k <= k_max; ++k) {
        std::vector<std::int64_t> t(static_cast<std::size_t>(m), m);
        t.push_back(k);
        ExponentVector a(t);
        RhsRow r;
        r.k = k;
        r.ke_passes = ke_check(a).passes;
        CharPoly cp = milnor_orlik_divisor(a);
        DeltaAtOne d1 = delta_at_one(cp);
        r.rational_hs = d1.is_rational_hs;
        r.torsion_order = d1.torsion_order;
        r.betti = cp.betti();
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace bp
