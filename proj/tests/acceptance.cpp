// Acceptance suite: one PASS/FAIL line per criterion; exit code = #failures.
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "bp/census.hpp"
#include "bp/charpoly.hpp"
#include "bp/graph.hpp"
#include "bp/ke.hpp"
#include "bp/signature.hpp"

using namespace bp;

namespace {

int failures = 0;

void report(int n, bool ok, const std::string& detail) {
    std::printf("criterion %2d: %s — %s\n", n, ok ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

double elapsed(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- criterion 1: bP orders -------------------------------------------------
void criterion_1() {
    const std::vector<std::pair<unsigned, BigInt>> expected = {
        {2, 28}, {3, 992}, {4, 8128}, {5, 130816}};
    bool ok = true;
    std::string detail;
    for (auto [m, want] : expected) {
        BigInt got = bp_order(m);
        if (got != want) {
            ok = false;
            detail += "bp_order(" + std::to_string(m) + ")=" + got.str() + " (expected " +
                      want.str() + "); ";
        }
    }
    if (ok) detail = "bp_order(2..5) = 28, 992, 8128, 130816";
    report(1, ok, detail);
}

// ---- criterion 2: signature anchor -----------------------------------------
void criterion_2() {
    auto s = signature_combinatorial(ExponentVector({5, 3, 2, 2, 2}));
    auto km = km_class(ExponentVector({5, 3, 2, 2, 2}));
    bool ok = (s.tau == 8) && (km.km_index == 1);
    report(2, ok, "tau(5,3,2,2,2)=" + std::to_string(s.tau) + ", km_index=" + km.km_index.str());
}

// ---- criterion 3: Brieskorn 28 ----------------------------------------------
std::vector<ExponentVector> g_hs_inputs;  // homotopy-sphere inputs seen (crit 12)

void criterion_3() {
    std::set<BigInt> seen;
    for (std::int64_t k = 1; k <= 28; ++k) {
        ExponentVector a({6 * k - 1, 3, 2, 2, 2});
        seen.insert(km_class(a).km_index);
        g_hs_inputs.push_back(a);
    }
    bool ok = seen.size() == 28;
    for (int i = 0; ok && i < 28; ++i)
        if (!seen.count(i)) ok = false;
    report(3, ok, std::to_string(seen.size()) + " distinct km classes, residues 0..27 covered");
}

// ---- criterion 4: combinatorial vs Zagier ----------------------------------
bool g_tau_mod8_ok = true;

bool check_tuple_sig(const std::vector<std::int64_t>& t) {
    ExponentVector a(t);
    auto comb = signature_combinatorial(a);
    for (std::uint64_t mult : {1, 2}) {
        auto z = signature_zagier(a, mult);
        if (z.tau != comb.tau) return false;
    }
    if (a.dimension() >= 5 && is_homotopy_sphere(a)) {
        g_hs_inputs.push_back(a);
        if (comb.tau % 8 != 0) g_tau_mod8_ok = false;
    }
    return true;
}

void criterion_4() {
    auto t0 = std::chrono::steady_clock::now();
    std::int64_t checked = 0;
    bool ok = true;
    std::string first_bad;
    // exhaustive: odd-length sorted tuples, entries >= 2, prod a_i <= 1e5
    std::function<void(std::vector<std::int64_t>&, std::int64_t)> rec =
        [&](std::vector<std::int64_t>& t, std::int64_t prod) {
            if (t.size() % 2 == 1 && t.size() >= 3) {
                ++checked;
                if (!check_tuple_sig(t) && ok) {
                    ok = false;
                    first_bad = ExponentVector(t).to_string();
                }
            }
            std::int64_t lo = t.empty() ? 2 : t.back();
            for (std::int64_t v = lo; prod * v <= 100000; ++v) {
                t.push_back(v);
                rec(t, prod * v);
                t.pop_back();
            }
        };
    std::vector<std::int64_t> t;
    rec(t, 1);
    // 100 random larger tuples
    std::mt19937_64 rng(20260826);
    for (int i = 0; i < 100; ++i) {
        std::vector<std::int64_t> r;
        int len = (rng() % 2) ? 3 : 5;
        for (int j = 0; j < len; ++j) r.push_back(2 + static_cast<std::int64_t>(rng() % 39));
        ++checked;
        if (!check_tuple_sig(r) && ok) {
            ok = false;
            first_bad = ExponentVector(r).to_string();
        }
    }
    std::ostringstream d;
    d << checked << " tuples, N-multiples {1,2}";
    if (!ok) d << ", first mismatch at " << first_bad;
    d << " [" << static_cast<int>(elapsed(t0)) << "s]";
    report(4, ok, d.str());
}

// ---- criteria 5+6: Alexander oracle and homology criteria -------------------
void criteria_5_6() {
    auto t0 = std::chrono::steady_clock::now();
    std::int64_t checked = 0;
    bool ok5 = true, ok6 = true;
    std::string bad5, bad6;
    // sorted tuples, entries >= 2, lengths 2..7, prod(a_i - 1) <= 1e4
    std::function<void(std::vector<std::int64_t>&, std::int64_t)> rec =
        [&](std::vector<std::int64_t>& t, std::int64_t prod) {
            if (t.size() >= 2) {
                ++checked;
                ExponentVector a(t);
                CharPoly fast = milnor_orlik_divisor(a);
                CharPoly slow = brute_force_charpoly(a, 10000);
                if ((!fast.same_polynomial(slow) || fast.degree() != milnor_number(a)) && ok5) {
                    ok5 = false;
                    bad5 = a.to_string();
                }
                if (t.size() >= 3) {
                    auto d1 = delta_at_one(fast);
                    auto hc = classify_homology(a);
                    bool rational_agrees =
                        (hc != HomologyClass::NotRationalHS) == d1.is_rational_hs;
                    bool integral_agrees =
                        !d1.is_rational_hs ||
                        ((hc == HomologyClass::IntegralHomologySphere) == (d1.torsion_order == 1));
                    if ((!rational_agrees || !integral_agrees) && ok6) {
                        ok6 = false;
                        bad6 = a.to_string();
                    }
                }
            }
            if (t.size() == 7) return;
            std::int64_t lo = t.empty() ? 2 : t.back();
            for (std::int64_t v = lo;; ++v) {
                std::int64_t p = prod * (v - 1);
                if (p > 10000) break;
                t.push_back(v);
                rec(t, p);
                t.pop_back();
            }
        };
    std::vector<std::int64_t> t;
    rec(t, 1);
    std::ostringstream d5, d6;
    d5 << "milnor_orlik == brute force and deg = mu on " << checked << " tuples";
    if (!ok5) d5 << ", first mismatch " << bad5;
    d5 << " [" << static_cast<int>(elapsed(t0)) << "s]";
    report(5, ok5, d5.str());
    d6 << "graph theorem == Delta(1) criteria on the same sweep";
    if (!ok6) d6 << ", first mismatch " << bad6;
    report(6, ok6, d6.str());
}

// ---- criterion 7: torsion orders --------------------------------------------
void criterion_7() {
    bool ok = true;
    for (std::int64_t k : {7, 8, 10, 11}) {
        auto d = delta_at_one(milnor_orlik_divisor(ExponentVector({3, 3, 3, k})));
        if (!d.is_rational_hs || d.torsion_order != k * k) ok = false;
    }
    for (std::int64_t k : {3, 5}) {
        BigInt want = 1;
        for (int i = 0; i < 21; ++i) want *= k;
        auto d = delta_at_one(milnor_orlik_divisor(ExponentVector({4, 4, 4, 4, k})));
        if (!d.is_rational_hs || d.torsion_order != want) ok = false;
    }
    report(7, ok, "|H(3,3,3,k)| = k^2, |H(4,4,4,4,k)| = k^21");
}

// ---- criterion 8: betti table ------------------------------------------------
void criterion_8() {
    bool ok = true;
    std::string detail;
    auto betti_wh = [](std::vector<std::int64_t> w, std::int64_t d) {
        WeightedHypersurface h;
        for (auto v : w) h.weights.emplace_back(v);
        h.degree = d;
        return milnor_orlik_divisor(h).betti();
    };
    for (std::int64_t k = 1; k <= 20; ++k)
        if (betti_wh({1, 1, 1, k}, k + 1) != k) {
            ok = false;
            detail += "betti(1,1,1," + std::to_string(k) + ") wrong; ";
        }
    std::int64_t b = betti_wh({1, 2, 3, 5}, 10);
    if (b != 9) {
        ok = false;
        detail += "betti(w=(1,2,3,5),d=10)=" + std::to_string(b) + " (expected 9); ";
    }
    auto betti_bp = [](std::vector<std::int64_t> t) {
        return milnor_orlik_divisor(ExponentVector(std::move(t))).betti();
    };
    struct Row { std::array<std::int64_t, 3> h; std::int64_t m; std::array<std::int64_t, 3> ns; int b2; };
    const std::vector<Row> rows = {
        {{3, 3, 3}, 3, {3, 4, 5}, 6},   {{2, 4, 4}, 2, {7, 9, 11}, 3},
        {{2, 4, 4}, 4, {3, 4, 5}, 7},   {{2, 3, 6}, 2, {13, 14, 16}, 2},
        {{2, 3, 6}, 3, {13, 15, 17}, 4}, {{2, 3, 6}, 6, {5, 6, 7}, 8}};
    for (const auto& r : rows)
        for (std::int64_t n : r.ns)
            if (betti_bp({r.h[0], r.h[1], r.h[2], r.m * n}) != r.b2) {
                ok = false;
                detail += "companion row (" + std::to_string(r.h[0]) + "," +
                          std::to_string(r.h[1]) + "," + std::to_string(r.h[2]) + "," +
                          std::to_string(r.m) + "n) wrong at n=" + std::to_string(n) + "; ";
            }
    if (ok) detail = "betti(1,1,1,k;k+1)=k, X_10 cell, companion table";
    report(8, ok, detail);
}

// ---- criterion 9: dim-5 censuses ---------------------------------------------
std::vector<std::vector<std::int64_t>> load_golden(const std::string& name) {
    std::ifstream in(std::string(BPLINK_DATA_DIR) + "/" + name);
    std::vector<std::vector<std::int64_t>> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::vector<std::int64_t> t;
        std::int64_t v;
        while (ls >> v) t.push_back(v);
        out.push_back(t);
    }
    return out;
}

CensusResult g_census5;

void criterion_9() {
    auto t0 = std::chrono::steady_clock::now();
    CensusSpec spec;
    spec.dimension = 5;
    spec.predicates = {Predicate::HomotopySphere, Predicate::KEPasses};
    g_census5 = enumerate_ke_links(spec);
    auto golden = load_golden("s5_census.txt");
    bool tuples_match = g_census5.tuples.size() == golden.size();
    if (tuples_match)
        for (std::size_t i = 0; i < golden.size(); ++i)
            if (g_census5.tuples[i].exponents() != golden[i]) tuples_match = false;
    spec.prefix = std::vector<std::int64_t>{2, 3, 7};
    auto sub = enumerate_ke_links(spec);
    bool ok = (g_census5.total == 68) && tuples_match && (sub.total == 27);
    std::ostringstream d;
    d << "dim-5 total " << g_census5.total << " (golden list "
      << (tuples_match ? "matches" : "DIFFERS") << "), prefix (2,3,7) total " << sub.total << " ["
      << static_cast<int>(elapsed(t0)) << "s]";
    report(9, ok, d.str());
}

// ---- criterion 10: dim-7 census ------------------------------------------------
void criterion_10() {
    auto t0 = std::chrono::steady_clock::now();
    constexpr std::array<int, 28> paper = {376, 336, 260, 294, 231, 284, 322, 402, 317, 309,
                                           252, 304, 258, 390, 409, 352, 226, 260, 243, 309,
                                           292, 452, 307, 298, 230, 307, 264, 353};
    CensusSpec spec;
    spec.dimension = 7;
    spec.predicates = {Predicate::HomotopySphere, Predicate::KEPasses};
    auto res = enumerate_ke_links(spec);
    auto golden = load_golden("s7_census.txt");
    bool tuples_match = res.tuples.size() == golden.size();
    if (tuples_match)
        for (std::size_t i = 0; i < golden.size(); ++i)
            if (res.tuples[i].exponents() != golden[i]) tuples_match = false;
    bool total_ok = (res.total == 8610 || res.total == 8637);
    std::int64_t paper_sum = 0;
    int diffs = 0;
    std::ostringstream vec;
    vec << "per-class (1..28): ";
    for (int cls = 1; cls <= 28; ++cls) {
        auto it = res.per_class.find(cls % 28);
        std::int64_t got = (it == res.per_class.end()) ? 0 : it->second;
        paper_sum += paper[cls - 1];
        if (got != paper[cls - 1]) ++diffs;
        vec << got << (cls < 28 ? " " : "");
    }
    bool ok = total_ok && tuples_match;
    std::ostringstream d;
    d << "total " << res.total << " (text 8610, printed vector sums " << paper_sum
      << "; golden list " << (tuples_match ? "matches" : "DIFFERS") << "); " << diffs
      << " class cells differ from the published vector (recorded, not forced) ["
      << static_cast<int>(elapsed(t0)) << "s]\n    " << vec.str();
    report(10, ok, d.str());
}

// ---- criterion 11: genus formula -----------------------------------------------
void criterion_11() {
    bool ok = true;
    for (std::int64_t k = 1; k <= 5; ++k) {
        BigInt q = 6 * k - 1;
        if (curve_genus(6, 2 * q, 3 * q, 6 * q) != 0) ok = false;
    }
    if (curve_genus(1, 1, 1, 3) != 1) ok = false;
    report(11, ok, "g(X_{6(6k-1)} in P(6,2(6k-1),3(6k-1))) = 0 for k=1..5; g(cubic) = 1");
}

// ---- criterion 12: property suite ------------------------------------------------
void criterion_12() {
    bool ok = true;
    std::string detail;

    // permutation invariance
    std::mt19937 rng(99);
    std::vector<std::int64_t> t{2, 3, 7, 11, 25};
    auto base_sig = signature_combinatorial(ExponentVector(t)).tau;
    auto base_cp = milnor_orlik_divisor(ExponentVector(t));
    auto base_ke = ke_check(ExponentVector(t)).passes;
    for (int i = 0; i < 10; ++i) {
        std::shuffle(t.begin(), t.end(), rng);
        ExponentVector a(t);
        if (signature_combinatorial(a).tau != base_sig ||
            !milnor_orlik_divisor(a).same_polynomial(base_cp) ||
            ke_check(a).passes != base_ke) {
            ok = false;
            detail += "permutation variance; ";
            break;
        }
    }

    // tau = 0 mod 8 on homotopy-sphere inputs from criteria 3-4
    if (!g_tau_mod8_ok) {
        ok = false;
        detail += "tau mod 8 violation in sweep; ";
    }
    for (const auto& a : g_hs_inputs)
        if (signature_combinatorial(a).tau % 8 != 0) {
            ok = false;
            detail += "tau mod 8 violation at " + a.to_string() + "; ";
            break;
        }

    // ke_check => fano on the full dim-5 census
    for (const auto& a : g_census5.tuples)
        if (!ke_check(a).fano) {
            ok = false;
            detail += "census tuple not Fano; ";
            break;
        }

    // determinism across jobs
    CensusSpec spec;
    spec.dimension = 5;
    spec.predicates = {Predicate::HomotopySphere, Predicate::KEPasses};
    auto c1 = enumerate_ke_links(spec, 1);
    auto c4 = enumerate_ke_links(spec, 4);
    if (c1.tuples != c4.tuples || c1.per_class != c4.per_class) {
        ok = false;
        detail += "census differs across jobs; ";
    }
    ExponentVector big({2, 3, 7, 11, 25});
    auto s1 = signature_combinatorial(big, 1);
    auto s4 = signature_combinatorial(big, 4);
    if (s1.tau != s4.tau || s1.count_plus != s4.count_plus) {
        ok = false;
        detail += "signature differs across jobs; ";
    }

    if (ok)
        detail = "permutation invariance, tau = 0 mod 8 on " +
                 std::to_string(g_hs_inputs.size()) +
                 " homotopy-sphere inputs, ke => fano on census, jobs-determinism";
    report(12, ok, detail);
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criteria_5_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    std::printf("%d of 12 criteria failed\n", failures);
    return failures;
}
